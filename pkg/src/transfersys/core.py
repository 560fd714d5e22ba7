"""Transfer systems on the linear poset [n] = {1 < 2 < ... < n}.

A system is stored as an integer bitmask over the pairs ``i < j``.  Pairs are
laid out column-major by target: the sources of target ``j`` occupy the
``j - 1`` bits starting at ``(j-1)(j-2)/2``.  With this layout restricting to
``[k]`` is a mask truncation and the source set of every target is a
contiguous bit field.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .errors import BoundsError, EmptyPoset, NotTransitive, RestrictionViolated, SizeMismatch

__all__ = [
    "TransferSystem",
    "Composition",
    "ClassificationFlags",
    "UNIT",
    "pair_index",
    "make_transfer_system",
    "generate_from",
    "leq",
    "concat",
    "concat_all",
    "restrict",
    "fixed_points",
    "wrap",
    "complete",
    "trivial",
    "classify",
    "is_saturated",
    "core",
    "core_blocks",
    "hull",
    "decompose_wrapped",
    "recursive_split",
    "saturated_from_composition",
    "compositions",
    "enumerate_all",
    "count_systems",
]


def _base(j: int) -> int:
    return (j - 1) * (j - 2) // 2


def pair_index(i: int, j: int) -> int:
    """Bit position of the pair ``i -> j`` (requires ``1 <= i < j``)."""
    return _base(j) + i - 1


def _npairs(n: int) -> int:
    return n * (n - 1) // 2


def _columns(n: int, mask: int) -> list[int]:
    # cols[j] holds the sources of j as bits 0..j-2 (bit i-1 <=> i -> j)
    cols = [0] * (n + 1)
    for j in range(2, n + 1):
        cols[j] = (mask >> _base(j)) & ((1 << (j - 1)) - 1)
    return cols


def _from_columns(cols: Sequence[int]) -> int:
    mask = 0
    for j in range(2, len(cols)):
        mask |= cols[j] << _base(j)
    return mask


@dataclass(frozen=True)
class TransferSystem:
    """An immutable transfer system on ``[n]``.

    Use :func:`make_transfer_system` to build one from pairs; the raw
    constructor trusts its mask.
    """

    n: int
    mask: int = 0

    @property
    def relations(self) -> tuple[tuple[int, int], ...]:
        """Non-reflexive arrows ``(i, j)`` in lexicographic order."""
        cols = _columns(self.n, self.mask)
        return tuple(
            (i, j)
            for i in range(1, self.n + 1)
            for j in range(i + 1, self.n + 1)
            if cols[j] >> (i - 1) & 1
        )

    def has(self, i: int, j: int) -> bool:
        if i == j:
            return 1 <= i <= self.n
        if not 1 <= i < j <= self.n:
            return False
        return bool(self.mask >> pair_index(i, j) & 1)

    def __contains__(self, pair) -> bool:
        return self.has(*pair)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def sources(self, j: int) -> list[int]:
        """Elements ``i < j`` with ``i -> j``, ascending."""
        col = (self.mask >> _base(j)) & ((1 << (j - 1)) - 1) if j >= 2 else 0
        return [i + 1 for i in range(j - 1) if col >> i & 1]

    def to_json(self) -> dict:
        return {"n": self.n, "relations": [list(p) for p in self.relations]}

    @classmethod
    def from_json(cls, obj: dict) -> "TransferSystem":
        try:
            n = obj["n"]
            pairs = [tuple(p) for p in obj["relations"]]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed transfer system object: {obj!r}") from exc
        if not isinstance(n, int) or any(len(p) != 2 for p in pairs):
            raise ValueError(f"malformed transfer system object: {obj!r}")
        return make_transfer_system(n, pairs)

    def __repr__(self) -> str:
        return f"TransferSystem(n={self.n}, relations={list(self.relations)})"


UNIT = TransferSystem(0, 0)


@dataclass(frozen=True)
class Composition:
    """A non-empty sequence of positive integers ``(k_1, ..., k_r)``."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(k) for k in self.parts)
        if not parts or any(k < 1 for k in parts):
            raise ValueError(f"composition parts must be positive and non-empty: {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def partial_sums(self) -> tuple[int, ...]:
        return tuple(itertools.accumulate(self.parts))

    @property
    def total(self) -> int:
        return sum(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"


@dataclass(frozen=True)
class ClassificationFlags:
    wrapped: bool
    complete: bool
    saturated: bool


def _check_bounds(n: int, pairs: Iterable[tuple[int, int]]) -> list[tuple[int, int]]:
    if n < 0:
        raise BoundsError(f"size must be non-negative, got {n}")
    checked = []
    for p in pairs:
        i, j = p
        if not (1 <= i < j <= n):
            raise BoundsError(f"pair {(i, j)} outside 1 <= i < j <= {n}")
        checked.append((i, j))
    return checked


def _missing_transitive(n: int, cols: list[int]) -> list[tuple[int, int]]:
    missing = []
    for k in range(2, n + 1):
        for j in range(2, k):
            if cols[k] >> (j - 1) & 1:
                lack = cols[j] & ~cols[k]
                missing.extend((i + 1, k) for i in range(j - 1) if lack >> i & 1)
    return missing


def _missing_restriction(n: int, cols: list[int]) -> list[tuple[int, int]]:
    missing = []
    for j in range(3, n + 1):
        for i in range(1, j - 1):
            if cols[j] >> (i - 1) & 1:
                missing.extend((i, k) for k in range(i + 1, j) if not cols[k] >> (i - 1) & 1)
    return missing


def make_transfer_system(n: int, relations: Iterable[tuple[int, int]] = ()) -> TransferSystem:
    """Validate ``relations`` as a transfer system on ``[n]``.

    No closure is taken: a missing transitive or restriction pair raises
    :class:`NotTransitive` or :class:`RestrictionViolated` naming the
    lexicographically smallest missing pair.
    """
    pairs = _check_bounds(n, relations)
    mask = 0
    for i, j in pairs:
        mask |= 1 << pair_index(i, j)
    cols = _columns(n, mask)
    missing = _missing_transitive(n, cols)
    if missing:
        raise NotTransitive(min(missing))
    missing = _missing_restriction(n, cols)
    if missing:
        raise RestrictionViolated(min(missing))
    return TransferSystem(n, mask)


def generate_from(n: int, relations: Iterable[tuple[int, int]] = ()) -> TransferSystem:
    """Smallest transfer system on ``[n]`` containing ``relations``."""
    pairs = _check_bounds(n, relations)
    mask = 0
    for i, j in pairs:
        mask |= 1 << pair_index(i, j)
    while True:
        cols = _columns(n, mask)
        extra = _missing_transitive(n, cols) + _missing_restriction(n, cols)
        if not extra:
            return TransferSystem(n, mask)
        for i, j in extra:
            mask |= 1 << pair_index(i, j)


def _same_size(a: TransferSystem, b: TransferSystem) -> None:
    if a.n != b.n:
        raise SizeMismatch(f"sizes differ: {a.n} != {b.n}")


def leq(a: TransferSystem, b: TransferSystem) -> bool:
    """True iff every arrow of ``a`` is an arrow of ``b``."""
    _same_size(a, b)
    return a.mask & ~b.mask == 0


def concat(left: TransferSystem, right: TransferSystem) -> TransferSystem:
    """Direct sum: ``right`` placed above ``left`` with no arrows between them."""
    nl = left.n
    n = nl + right.n
    mask = left.mask
    rcols = _columns(right.n, right.mask)
    for j in range(2, right.n + 1):
        mask |= (rcols[j] << nl) << _base(j + nl)
    return TransferSystem(n, mask)


def concat_all(systems: Iterable[TransferSystem]) -> TransferSystem:
    out = UNIT
    for s in systems:
        out = concat(out, s)
    return out


def restrict(o: TransferSystem, k: int) -> TransferSystem:
    """Keep the arrows with target ``<= k``, as a system on ``[k]``."""
    if not 0 <= k <= o.n:
        raise BoundsError(f"restriction size {k} outside 0..{o.n}")
    return TransferSystem(k, o.mask & ((1 << _npairs(k)) - 1))


def fixed_points(o: TransferSystem, k: int) -> TransferSystem:
    """Keep the arrows among ``k+1..n``, shifted down to ``[n-k]``."""
    if not 0 <= k <= o.n:
        raise BoundsError(f"fixed-point shift {k} outside 0..{o.n}")
    if k == 0:
        return o
    cols = _columns(o.n, o.mask)
    m = o.n - k
    new = [0] * (m + 1)
    for j in range(2, m + 1):
        new[j] = cols[j + k] >> k
    return TransferSystem(m, _from_columns(new))


def wrap(o: TransferSystem) -> TransferSystem:
    """Add a new bottom element transferring to everything."""
    cols = _columns(o.n, o.mask)
    new = [0] * (o.n + 2)
    for j in range(1, o.n + 1):
        new[j + 1] = 1 | (cols[j] << 1)
    return TransferSystem(o.n + 1, _from_columns(new))


def complete(n: int) -> TransferSystem:
    if n < 0:
        raise BoundsError(f"size must be non-negative, got {n}")
    return TransferSystem(n, (1 << _npairs(n)) - 1)


def trivial(n: int) -> TransferSystem:
    if n < 0:
        raise BoundsError(f"size must be non-negative, got {n}")
    return TransferSystem(n, 0)


def is_saturated(o: TransferSystem) -> bool:
    """``i -> j`` always implies ``j-1 -> j``."""
    cols = _columns(o.n, o.mask)
    return all(cols[j] == 0 or cols[j] >> (j - 2) & 1 for j in range(2, o.n + 1))


def classify(o: TransferSystem) -> ClassificationFlags:
    if o.n == 0:
        raise EmptyPoset("classification is defined for n >= 1")
    full = (1 << _npairs(o.n)) - 1
    return ClassificationFlags(
        wrapped=o.has(1, o.n),
        complete=o.mask == full,
        saturated=is_saturated(o),
    )


def saturated_from_composition(kvec) -> TransferSystem:
    """``complete(k_1) + ... + complete(k_r)``."""
    parts = kvec.parts if isinstance(kvec, Composition) else tuple(kvec)
    return concat_all(complete(k) for k in parts)


def core_blocks(o: TransferSystem) -> Composition | None:
    """Block sizes of the core: maximal runs joined by adjacent arrows.

    Returns ``None`` for the empty poset.
    """
    if o.n == 0:
        return None
    parts = []
    run = 1
    for j in range(2, o.n + 1):
        if o.mask >> pair_index(j - 1, j) & 1:
            run += 1
        else:
            parts.append(run)
            run = 1
    parts.append(run)
    return Composition(tuple(parts))


def core(o: TransferSystem) -> TransferSystem:
    """Largest saturated system below ``o``, generated by its adjacent arrows."""
    if o.n == 0:
        return o
    return saturated_from_composition(core_blocks(o))


def _wrapped_spans(o: TransferSystem) -> list[tuple[int, int]]:
    # each block starts at s and ends at the highest target of s
    spans = []
    s = 1
    while s <= o.n:
        top = s
        for t in range(o.n, s, -1):
            if o.mask >> pair_index(s, t) & 1:
                top = t
                break
        spans.append((s, top))
        s = top + 1
    return spans


def decompose_wrapped(o: TransferSystem) -> list[TransferSystem]:
    """The unique ``[O_1, ..., O_k]`` with ``o == w(O_1) + ... + w(O_k)``."""
    if o.n == 0:
        raise EmptyPoset("decomposition is defined for n >= 1")
    return [fixed_points(restrict(o, t), s) for s, t in _wrapped_spans(o)]


def recursive_split(o: TransferSystem) -> tuple[TransferSystem, TransferSystem]:
    """``(O_L, O')`` with ``o == concat(O_L, wrap(O'))``, splitting off the last wrapped summand."""
    if o.n == 0:
        raise EmptyPoset("decomposition is defined for n >= 1")
    s, _ = _wrapped_spans(o)[-1]
    return restrict(o, s - 1), fixed_points(o, s)


def hull(o: TransferSystem) -> TransferSystem:
    """Smallest saturated system above ``o``: complete each wrapped summand."""
    if o.n == 0:
        return o
    return concat_all(complete(t - s + 1) for s, t in _wrapped_spans(o))


def compositions(n: int) -> Iterator[Composition]:
    """Compositions of ``n`` in lexicographic order."""

    def rec(rest):
        if rest == 0:
            yield ()
            return
        for k in range(1, rest + 1):
            for tail in rec(rest - k):
                yield (k,) + tail

    if n < 1:
        return
    for parts in rec(n):
        yield Composition(parts)


@lru_cache(maxsize=None)
def _all_systems(n: int) -> tuple[TransferSystem, ...]:
    if n == 0:
        return (UNIT,)
    out = []
    for m in range(n):
        wrapped = [wrap(x) for x in _all_systems(n - m - 1)]
        for left in _all_systems(m):
            out.extend(concat(left, w) for w in wrapped)
    return tuple(out)


def enumerate_all(n: int) -> Iterator[TransferSystem]:
    """Every transfer system on ``[n]`` exactly once.

    Order: split point ``m`` ascending, then left factor, then the wrapped
    right factor, each in their own enumeration order.
    """
    if n < 0:
        raise BoundsError(f"size must be non-negative, got {n}")
    return iter(_all_systems(n))


def count_systems(n: int) -> int:
    return len(_all_systems(n))
