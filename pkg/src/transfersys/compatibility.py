"""Compatible pairs of transfer systems and their counts.

A pair ``(additive, multiplicative)`` on ``[n]`` is compatible when every
multiplicative arrow ``i -> j`` forces the additive arrows ``k -> j`` for all
``i <= k < j``.
"""

from __future__ import annotations

import csv
import io
import itertools
import os
import tempfile
import threading
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from . import _kernels
from .catalan_bijection import count_by_cores
from .core import (
    TransferSystem,
    complete,
    concat_all,
    core,
    core_blocks,
    enumerate_all,
    hull,
    leq,
)
from .errors import BoundsError, IncompatiblePair, InfeasibleSize, SizeMismatch
from .fuss_catalan import catalan

__all__ = [
    "CompatiblePair",
    "CountTable",
    "MODES",
    "METHODS",
    "DEFAULT_BOUND",
    "is_compatible",
    "compatible_partners",
    "enumerate_pairs",
    "filtration_level",
    "count_d",
    "count_pairs",
    "brute_force_pair_count",
    "default_table",
]

MODES = ("definition", "core", "hull")
METHODS = ("brute", "recurrence", "cores")
DEFAULT_BOUND = 8


def _definition(a: TransferSystem, m: TransferSystem) -> bool:
    for i, j in m.relations:
        for k in range(i, j):
            if not a.has(k, j):
                return False
    return True


def is_compatible(additive: TransferSystem, multiplicative: TransferSystem, mode: str = "core") -> bool:
    if additive.n != multiplicative.n:
        raise SizeMismatch(f"sizes differ: {additive.n} != {multiplicative.n}")
    if mode == "core":
        return leq(multiplicative, core(additive))
    if mode == "hull":
        return leq(hull(multiplicative), additive)
    if mode == "definition":
        return _definition(additive, multiplicative)
    raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")


@dataclass(frozen=True)
class CompatiblePair:
    additive: TransferSystem
    multiplicative: TransferSystem

    def __post_init__(self):
        if not is_compatible(self.additive, self.multiplicative):
            raise IncompatiblePair(f"{self.additive} and {self.multiplicative} are not compatible")

    def to_json(self) -> dict:
        return {"additive": self.additive.to_json(), "multiplicative": self.multiplicative.to_json()}


def compatible_partners(additive: TransferSystem) -> Iterator[TransferSystem]:
    """Every multiplicative partner of ``additive``.

    Partners split along the core blocks of ``additive``, one arbitrary
    system per block.
    """
    if additive.n < 1:
        raise BoundsError("partners are defined for n >= 1")
    blocks = [tuple(enumerate_all(k)) for k in core_blocks(additive)]
    for pieces in itertools.product(*blocks):
        yield concat_all(pieces)


def enumerate_pairs(n: int) -> Iterator[CompatiblePair]:
    """All compatible pairs on ``[n]``, additive-major."""
    if n < 1:
        raise BoundsError("pairs are enumerated for n >= 1")
    for a in enumerate_all(n):
        for m in compatible_partners(a):
            # skip re-validation: partners are compatible by construction
            pair = object.__new__(CompatiblePair)
            object.__setattr__(pair, "additive", a)
            object.__setattr__(pair, "multiplicative", m)
            yield pair


def filtration_level(o: TransferSystem) -> int:
    """Largest ``i`` such that ``o`` is an ``i``-fold wrap."""
    n = o.n
    if n < 1:
        raise BoundsError("filtration level is defined for n >= 1")
    level = 0
    while level < n - 1 and o.has(level + 1, n):
        level += 1
    if level == n - 1 and o == complete(n):
        return n
    return level


class CountTable:
    """Memo of ``d(n, i)``: compatible pairs whose additive part is an ``i``-fold wrap.

    Rows are filled in ascending ``n``; inside a row ``i`` runs from ``n`` down
    to 0, since ``d(n, i)`` needs ``d(n, i+1)``.  Access is serialised by a
    lock so each entry is computed once.
    """

    def __init__(self, entries=None):
        self._d: dict[tuple[int, int], int] = {}
        self._lock = threading.RLock()
        self._rows = 0
        if entries:
            self._d.update(entries)
            self._rows = self._complete_rows()

    def _complete_rows(self):
        n = 0
        while all((n + 1, i) in self._d for i in range(n + 2)):
            n += 1
        return n

    def _fill(self, n):
        d = self._d
        for m in range(self._rows + 1, n + 1):
            cat = catalan(m)
            d.setdefault((m, m), cat)
            d.setdefault((m, m - 1), cat)
            for i in range(m - 2, -1, -1):
                if (m, i) in d:
                    continue
                total = d[(m, i + 1)]
                for j in range(1, m - i):
                    total += d[(m - j, i)] * d[(j, 1)]
                d[(m, i)] = total
            self._rows = m

    def get(self, n: int, i: int) -> int:
        if n < 1 or not 0 <= i <= n:
            raise BoundsError(f"d(n, i) needs n >= 1 and 0 <= i <= n, got ({n}, {i})")
        with self._lock:
            if n > self._rows:
                self._fill(n)
            return self._d[(n, i)]

    @property
    def max_n(self) -> int:
        return self._rows

    def items(self):
        with self._lock:
            return sorted(self._d.items())

    def __len__(self):
        return len(self._d)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "i", "d"])
        for (n, i), v in self.items():
            w.writerow([n, i, v])
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str) -> "CountTable":
        rows = csv.reader(io.StringIO(text))
        entries = {}
        for row in rows:
            if not row or row[0] == "n":
                continue
            n, i, v = (int(x) for x in row)
            entries[(n, i)] = v
        table = cls(entries)
        table.check()
        return table

    def check(self) -> None:
        """Re-derive every stored entry from its neighbours; raise on mismatch."""
        d = self._d
        for (n, i), v in d.items():
            if i >= n - 1:
                ok = v == catalan(n)
            elif all((n - j, i) in d and (j, 1) in d for j in range(1, n - i)) and (n, i + 1) in d:
                ok = v == d[(n, i + 1)] + sum(d[(n - j, i)] * d[(j, 1)] for j in range(1, n - i))
            else:
                ok = True
            if not ok:
                raise ValueError(f"cached d({n},{i}) = {v} fails the recurrence")

    def save(self, path) -> None:
        """Write atomically: a temp file in the same directory, then rename."""
        path = os.fspath(path)
        folder = os.path.dirname(os.path.abspath(path))
        fd, tmp = tempfile.mkstemp(prefix=".dtable-", dir=folder)
        try:
            with os.fdopen(fd, "w", newline="") as fh:
                fh.write(self.to_csv())
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise

    @classmethod
    def load(cls, path) -> "CountTable":
        with open(path, newline="") as fh:
            return cls.from_csv(fh.read())


_default = CountTable()


def default_table() -> CountTable:
    return _default


def count_d(n: int, i: int, table: CountTable | None = None) -> int:
    return (table or _default).get(n, i)


def brute_force_pair_count(n: int) -> int:
    """Check the compatibility definition on every pair in ``T_n x T_n``."""
    masks = np.array([o.mask for o in enumerate_all(n)], dtype=np.int64)
    required = _kernels.required_masks(n, masks)
    return _kernels.count_compatible(required, masks)


def count_pairs(n: int, method: str = "recurrence", bound: int = DEFAULT_BOUND,
                table: CountTable | None = None) -> int:
    """Number of compatible pairs on ``[n]``.

    ``brute`` and ``cores`` enumerate and refuse ``n > bound``.
    """
    if n < 1:
        raise BoundsError(f"n must be positive, got {n}")
    if method == "recurrence":
        return count_d(n, 0, table)
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")
    if n > bound:
        raise InfeasibleSize(f"method {method!r} is limited to n <= {bound}, got {n}")
    if method == "brute":
        if n > _kernels.MAX_N:
            raise InfeasibleSize(f"brute force supports n <= {_kernels.MAX_N}")
        return brute_force_pair_count(n)
    return count_by_cores(n).total
