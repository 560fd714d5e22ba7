"""Exact Fuss-Catalan numbers ``A_n(p, r) = r/(np+r) * C(np+r, n)``."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .errors import InvalidParams

__all__ = ["FussParams", "fuss_catalan", "catalan", "IdentityReport", "check_identity", "IDENTITIES"]


@dataclass(frozen=True)
class FussParams:
    n: int
    p: int
    r: int

    def __post_init__(self):
        for name in ("n", "p", "r"):
            if not isinstance(getattr(self, name), int):
                raise InvalidParams(f"{name} must be an integer")
        if self.p < 1:
            raise InvalidParams(f"p must be positive, got {self.p}")
        if self.n < 0 or self.r < 0:
            raise InvalidParams(f"n and r must be non-negative, got n={self.n}, r={self.r}")


@lru_cache(maxsize=None)
def _fuss(n: int, p: int, r: int) -> int:
    if n == 0:
        return 1
    if r == 0:
        return 0
    top = n * p + r
    q, rem = divmod(r * comb(top, n), top)
    assert rem == 0, (n, p, r)
    return q


def fuss_catalan(n, p=None, r=None) -> int:
    """``A_n(p, r)``, with ``A_0(p, r) = 1`` and ``A_n(p, 0) = 0`` for ``n >= 1``.

    Accepts either a :class:`FussParams` or three integers.
    """
    params = n if isinstance(n, FussParams) else FussParams(n, p, r)
    return _fuss(params.n, params.p, params.r)


def catalan(n: int) -> int:
    if n < 0:
        raise InvalidParams(f"n must be non-negative, got {n}")
    return _fuss(n, 2, 1)


@dataclass(frozen=True)
class IdentityReport:
    which: int
    params: dict
    lhs: int
    rhs: int

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs

    def __str__(self):
        args = ", ".join(f"{k}={v}" for k, v in self.params.items())
        status = "pass" if self.passed else "FAIL"
        return f"identity {self.which} [{args}]: {self.lhs} vs {self.rhs} -> {status}"


A = fuss_catalan


def _id1(n, p, r, s):
    return A(n, 3, r), sum(A(j, 2, 1) * A(n - j, 3, j + r - 1) for j in range(n + 1))


def _id2(n, p, r, s):
    return A(n, p, r), A(n, p, r - 1) + A(n - 1, p, p + r - 1)


def _id3(n, p, r, s):
    return A(n + 1, p, 1), A(n, p, p)


def _id4(n, p, r, s):
    return A(n, p, s + r), sum(A(j, p, r) * A(n - j, p, s) for j in range(n + 1))


def _id5(n, p, r, s):
    return A(n, 3, 2), sum(A(j + 1, 2, 1) * A(n - j, 3, j) for j in range(1, n + 1))


# which -> (evaluator, parameters it reads)
IDENTITIES = {
    1: (_id1, ("n", "r")),
    2: (_id2, ("n", "p", "r")),
    3: (_id3, ("n", "p")),
    4: (_id4, ("n", "p", "r", "s")),
    5: (_id5, ("n",)),
}


def check_identity(which: int, n: int, p: int = 3, r: int = 1, s: int = 1) -> IdentityReport:
    """Evaluate both sides of one of the five Fuss-Catalan identities exactly.

    1. ``A_n(3,r) = sum_{j=0}^n A_j(2,1) A_{n-j}(3,j+r-1)``
    2. ``A_n(p,r) = A_n(p,r-1) + A_{n-1}(p,p+r-1)``
    3. ``A_{n+1}(p,1) = A_n(p,p)``
    4. ``A_n(p,s+r) = sum_{j=0}^n A_j(p,r) A_{n-j}(p,s)``
    5. ``A_n(3,2) = sum_{j=1}^n A_{j+1}(2,1) A_{n-j}(3,j)``

    Parameters an identity does not use are ignored.  Identities 1, 2, 4
    and 5 need ``n >= 1`` and ``r >= 1``; identity 3 admits ``n = 0``.
    """
    if which not in IDENTITIES:
        raise InvalidParams(f"identity must be 1..5, got {which}")
    fn, used = IDENTITIES[which]
    values = {"n": n, "p": p, "r": r, "s": s}
    if "p" in used and p < 1:
        raise InvalidParams(f"p must be positive, got {p}")
    if which == 3:
        if n < 0:
            raise InvalidParams(f"n must be non-negative, got {n}")
    elif n < 1:
        raise InvalidParams(f"n must be positive, got {n}")
    if "r" in used and r < 1:
        raise InvalidParams(f"r must be positive, got {r}")
    if "s" in used and s < 0:
        raise InvalidParams(f"s must be non-negative, got {s}")
    lhs, rhs = fn(n, p, r, s)
    return IdentityReport(which, {k: values[k] for k in used}, lhs, rhs)
