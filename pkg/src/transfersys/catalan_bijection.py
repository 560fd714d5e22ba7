"""Catalan tuples, core-preserving extensions and the bijection to transfer systems.

A Catalan tuple ``(s_0, ..., s_r)`` has prefix sums ``s_0 + ... + s_j > j``
and no trailing zero; its *length* is the total ``sum(s)``.  Transfer systems
with core ``complete(k_1) + ... + complete(k_r)`` are built block by block,
each new complete block glued on by one of the ``r + 1`` core-preserving
extensions.  Recording the choice of extension as a run of zeros gives
:func:`sigma`.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import Iterator, Sequence

from .core import (
    Composition,
    TransferSystem,
    _base,
    _columns,
    _from_columns,
    complete,
    compositions,
    core_blocks,
)
from .errors import (
    EmptyPoset,
    EmptyTuple,
    ExcessExceeded,
    InvalidTuple,
    LevelOutOfRange,
    NegativeEntry,
    PrefixDominanceViolated,
    TrailingZero,
)
from .fuss_catalan import catalan

__all__ = [
    "CatalanTuple",
    "ExtensionSpec",
    "make_catalan_tuple",
    "excess",
    "tuple_core",
    "extend_tuple",
    "top_sources",
    "build_extension",
    "list_extensions",
    "extension_level",
    "sigma",
    "sigma_inverse",
    "enumerate_tuples_with_core",
    "enumerate_tuples",
    "count_tuples_with_core",
    "CoreBreakdownRow",
    "CoreCount",
    "count_by_cores",
    "core_sum",
]


@dataclass(frozen=True)
class CatalanTuple:
    entries: tuple[int, ...]

    @property
    def length(self) -> int:
        """Sum of the entries (not the number of entries)."""
        return sum(self.entries)

    def to_json(self) -> dict:
        return {"entries": list(self.entries)}

    @classmethod
    def from_json(cls, obj: dict) -> "CatalanTuple":
        try:
            entries = obj["entries"]
        except (KeyError, TypeError) as exc:
            raise InvalidTuple(f"malformed tuple object: {obj!r}") from exc
        if not isinstance(entries, list) or not all(isinstance(x, int) for x in entries):
            raise InvalidTuple(f"malformed tuple object: {obj!r}")
        return make_catalan_tuple(entries)

    def __str__(self):
        return "(" + ",".join(map(str, self.entries)) + ")"


def make_catalan_tuple(seq: Sequence[int]) -> CatalanTuple:
    entries = tuple(int(x) for x in seq)
    if any(x < 0 for x in entries):
        raise NegativeEntry(f"negative entry in {entries}")
    total = 0
    for j, x in enumerate(entries):
        total += x
        if total <= j:
            raise PrefixDominanceViolated(j)
    if entries and entries[-1] == 0:
        raise TrailingZero(f"trailing zero in {entries}")
    return CatalanTuple(entries)


def _nonempty(t: CatalanTuple) -> None:
    if not t.entries:
        raise EmptyTuple("the empty tuple has no excess or core")


def excess(t: CatalanTuple) -> int:
    _nonempty(t)
    return t.length - len(t.entries)


def tuple_core(t: CatalanTuple) -> Composition:
    _nonempty(t)
    return Composition(tuple(x for x in t.entries if x))


def extend_tuple(t: CatalanTuple, k: int, level: int) -> CatalanTuple:
    """Append ``level`` zeros and then ``k``; valid iff ``0 <= level <= excess(t)``."""
    if k < 1:
        raise InvalidTuple(f"appended entry must be positive, got {k}")
    e = excess(t)
    if not 0 <= level <= e:
        raise ExcessExceeded(f"level {level} outside 0..{e}")
    return CatalanTuple(t.entries + (0,) * level + (k,))


@dataclass(frozen=True)
class ExtensionSpec:
    base: TransferSystem
    block: int
    level: int

    def __post_init__(self):
        if self.base.n < 1:
            raise EmptyPoset("extension base must have n >= 1")
        if self.block < 1:
            raise LevelOutOfRange(f"block size must be positive, got {self.block}")
        r = len(top_sources(self.base))
        if not 0 <= self.level <= r:
            raise LevelOutOfRange(f"level {self.level} outside 0..{r}")


def top_sources(o: TransferSystem) -> list[int]:
    """``d_1 < ... < d_r``: the elements below ``n`` transferring to ``n``."""
    return o.sources(o.n)


def build_extension(spec: ExtensionSpec, *, block=None, level=None) -> TransferSystem:
    """The extension of ``spec.base`` by ``complete(spec.block)`` at ``spec.level``.

    Crossing arrows start exactly at the first ``r - level`` top sources and
    reach every element of the new block.  Also callable as
    ``build_extension(base, block=k, level=l)``.
    """
    if not isinstance(spec, ExtensionSpec):
        spec = ExtensionSpec(spec, block, level)
    base, k = spec.base, spec.block
    m = base.n
    d = top_sources(base)
    crossing = 0
    for i in d[: len(d) - spec.level]:
        crossing |= 1 << (i - 1)
    cols = _columns(m, base.mask) + [0] * k
    for j in range(m + 1, m + k + 1):
        cols[j] = crossing | (((1 << (j - m - 1)) - 1) << m)
    return TransferSystem(m + k, _from_columns(cols))


def list_extensions(base: TransferSystem, k: int) -> list[TransferSystem]:
    """All core-preserving extensions of ``base`` by ``complete(k)``, by level."""
    r = len(top_sources(base))
    return [build_extension(ExtensionSpec(base, k, level)) for level in range(r + 1)]


def extension_level(o: TransferSystem, m: int) -> int:
    """The level at which ``o`` extends ``restrict(o, m)``.

    Read off as ``r`` minus the number of crossing sources; assumes ``o`` is a
    core-preserving extension at ``m`` by a complete block.
    """
    r = len(o.sources(m))
    col = (o.mask >> _base(m + 1)) & ((1 << m) - 1)
    return r - col.bit_count()


def sigma(o: TransferSystem) -> CatalanTuple:
    """Catalan tuple of ``o``: core blocks separated by zero-runs of extension levels."""
    if o.n == 0:
        raise EmptyPoset("sigma is defined for n >= 1")
    kvec = core_blocks(o)
    entries = [kvec.parts[0]]
    for K, k in zip(kvec.partial_sums, kvec.parts[1:]):
        entries.extend([0] * extension_level(o, K))
        entries.append(k)
    return CatalanTuple(tuple(entries))


def _zero_runs(entries: Sequence[int]) -> tuple[list[int], list[int]]:
    parts, levels = [], []
    zeros = 0
    for x in entries:
        if x == 0:
            zeros += 1
        else:
            if parts:
                levels.append(zeros)
            parts.append(x)
            zeros = 0
    return parts, levels


def sigma_inverse(t) -> TransferSystem:
    if not isinstance(t, CatalanTuple):
        t = make_catalan_tuple(t)
    if not t.entries:
        raise InvalidTuple("sigma_inverse needs a non-empty tuple")
    parts, levels = _zero_runs(t.entries)
    o = complete(parts[0])
    for k, level in zip(parts[1:], levels):
        try:
            o = build_extension(ExtensionSpec(o, k, level))
        except LevelOutOfRange as exc:
            raise InvalidTuple(f"{t} is not a Catalan tuple") from exc
    return o


def enumerate_tuples_with_core(kvec) -> list[CatalanTuple]:
    """All Catalan tuples whose non-zero entries are ``kvec``, levels ascending."""
    parts = kvec.parts if isinstance(kvec, Composition) else Composition(tuple(kvec)).parts
    layer = [CatalanTuple((parts[0],))]
    for k in parts[1:]:
        layer = [extend_tuple(t, k, level) for t in layer for level in range(excess(t) + 1)]
    return layer


def enumerate_tuples(n: int) -> Iterator[CatalanTuple]:
    for kvec in compositions(n):
        yield from enumerate_tuples_with_core(kvec)


def count_tuples_with_core(kvec) -> int:
    """``|S_k|`` by dynamic programming over the excess, without listing tuples."""
    parts = kvec.parts if isinstance(kvec, Composition) else Composition(tuple(kvec)).parts
    ways = {parts[0] - 1: 1}
    for k in parts[1:]:
        nxt: dict[int, int] = {}
        for e, c in ways.items():
            for level in range(e + 1):
                key = k - 1 + e - level
                nxt[key] = nxt.get(key, 0) + c
        ways = nxt
    return sum(ways.values())


@dataclass(frozen=True)
class CoreBreakdownRow:
    composition: Composition
    e: int
    catalan_product: int

    @property
    def contribution(self) -> int:
        return self.e * self.catalan_product

    def csv(self) -> str:
        return f"{self.composition};{self.e};{self.catalan_product};{self.contribution}"


@dataclass(frozen=True)
class CoreCount:
    total: int
    breakdown: tuple[CoreBreakdownRow, ...]


def count_by_cores(n: int, *, e_method: str = "enumerate") -> CoreCount:
    """Compatible pairs on ``[n]`` summed over additive cores.

    Each composition ``k`` contributes ``e_k * prod(Cat_{k_i})``, where
    ``e_k`` counts the systems with that core (equivalently the Catalan tuples
    with that core).  ``e_k`` comes from listing tuples, or from the excess DP
    when ``enumerate_tuples_`` is false.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    rows = []
    for kvec in compositions(n):
        if e_method == "enumerate":
            e = len(enumerate_tuples_with_core(kvec))
        elif e_method == "dp":
            e = count_tuples_with_core(kvec)
        else:
            raise ValueError(f"unknown e_method {e_method!r}")
        rows.append(CoreBreakdownRow(kvec, e, prod(catalan(k) for k in kvec)))
    return CoreCount(sum(r.contribution for r in rows), tuple(rows))


def core_sum(n: int) -> int:
    """``sum_k e_k * prod(Cat_{k_i})`` without materialising compositions.

    Compositions sharing a prefix total and excess are merged, so the state is
    ``(total, excess) -> weighted count``; usable far beyond the range where
    :func:`count_by_cores` can list every composition.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    # states[total][excess] = sum over prefixes of (#level choices) * prod Cat
    states = [dict() for _ in range(n + 1)]
    for k in range(1, n + 1):
        states[k][k - 1] = catalan(k)
    for total in range(1, n):
        for e, w in states[total].items():
            for k in range(1, n - total + 1):
                ck = catalan(k)
                bucket = states[total + k]
                for level in range(e + 1):
                    key = k - 1 + e - level
                    bucket[key] = bucket.get(key, 0) + w * ck
    return sum(states[n].values())
