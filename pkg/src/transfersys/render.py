"""Text and SVG arc diagrams of transfer systems.

Nodes sit on a horizontal baseline.  Adjacent arrows ``i -> i+1`` are drawn
as baseline segments, longer ones as semicircles above the baseline whose
height grows with the span.
"""

from __future__ import annotations

from .core import TransferSystem

SPACING = 60
MARGIN = 30
NODE_R = 4


def render_ascii(o: TransferSystem) -> str:
    if o.n == 0:
        return "nodes: (none)\n"
    lines = ["nodes: " + " ".join(str(i) for i in range(1, o.n + 1))]
    targets: dict[int, list[int]] = {}
    for i, j in o.relations:
        targets.setdefault(i, []).append(j)
    if not targets:
        lines.append("(no transfers)")
    for i in sorted(targets):
        lines.append(f"{i} -> " + " ".join(str(j) for j in targets[i]))
    return "\n".join(lines) + "\n"


def _x(i: int) -> int:
    return MARGIN + SPACING * (i - 1)


def svg_elements(o: TransferSystem) -> tuple[list[tuple[int, int]], list[tuple[int, int]]]:
    """``(segments, arcs)``: adjacent arrows and longer arrows."""
    segments = [(i, j) for i, j in o.relations if j == i + 1]
    arcs = [(i, j) for i, j in o.relations if j > i + 1]
    return segments, arcs


def render_svg(o: TransferSystem, split: int | None = None) -> str:
    """SVG arc diagram; arrows crossing ``split`` (``i <= split < j``) are dashed."""
    n = max(o.n, 1)
    segments, arcs = svg_elements(o)
    span = max((j - i for i, j in arcs), default=1)
    top = MARGIN + SPACING * span // 2
    width = 2 * MARGIN + SPACING * (n - 1)
    height = top + MARGIN + 20
    base = top
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        '<g fill="none" stroke="black" stroke-width="1.5">',
    ]

    def style(i, j):
        return ' stroke-dasharray="4 3"' if split is not None and i <= split < j else ""

    for i, j in segments:
        out.append(
            f'<line class="segment" data-pair="{i},{j}" x1="{_x(i)}" y1="{base}" '
            f'x2="{_x(j)}" y2="{base}"{style(i, j)}/>'
        )
    for i, j in arcs:
        r = SPACING * (j - i) // 2
        out.append(
            f'<path class="arc" data-pair="{i},{j}" '
            f'd="M {_x(i)} {base} A {r} {r} 0 0 1 {_x(j)} {base}"{style(i, j)}/>'
        )
    out.append("</g>")
    out.append('<g fill="black" font-family="sans-serif" font-size="12" text-anchor="middle">')
    for i in range(1, o.n + 1):
        out.append(f'<circle class="node" cx="{_x(i)}" cy="{base}" r="{NODE_R}"/>')
        out.append(f'<text x="{_x(i)}" y="{base + 18}">{i}</text>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
