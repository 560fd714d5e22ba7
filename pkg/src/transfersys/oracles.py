"""Brute-force searches used to cross-check the structural algorithms.

None of these use the recursive enumerator's structure: systems are found by
filtering every relation subset, saturated systems by closing every set of
adjacent generators, and extensions by filtering every system of the target
size.
"""

from __future__ import annotations

import itertools

import numpy as np

from . import _kernels
from .core import (
    TransferSystem,
    complete,
    concat,
    core,
    enumerate_all,
    fixed_points,
    generate_from,
    restrict,
)

__all__ = [
    "brute_force_systems",
    "saturated_systems",
    "brute_force_partner_counts",
    "brute_force_extensions",
]


def brute_force_systems(n: int) -> list[TransferSystem]:
    """Every valid subset of ``{(i, j) : i < j}``, in mask order."""
    npairs = n * (n - 1) // 2
    if npairs > 26:
        raise ValueError(f"subset filter over 2**{npairs} masks is not supported")
    masks = np.arange(1 << npairs, dtype=np.int64)
    ok = _kernels.valid_masks(n, masks)
    return [TransferSystem(n, int(m)) for m in masks[ok]]


def saturated_systems(n: int) -> list[TransferSystem]:
    """Systems generated by each of the ``2**(n-1)`` sets of adjacent arrows."""
    out = []
    for bits in itertools.product((False, True), repeat=max(n - 1, 0)):
        gens = [(i + 1, i + 2) for i, b in enumerate(bits) if b]
        out.append(generate_from(n, gens))
    return out


def brute_force_partner_counts(n: int) -> dict[TransferSystem, int]:
    """For each additive system, the number of compatible multiplicative ones.

    Checks the compatibility definition against all of ``T_n``.
    """
    systems = list(enumerate_all(n))
    masks = np.array([o.mask for o in systems], dtype=np.int64)
    counts = _kernels.partner_counts(_kernels.required_masks(n, masks), masks)
    return {o: int(c) for o, c in zip(systems, counts)}


def brute_force_extensions(base: TransferSystem, k: int, candidates=None) -> list[TransferSystem]:
    """Core-preserving extensions of ``base`` by ``complete(k)``, by exhaustive filter."""
    m = base.n
    block = complete(k)
    target_core = concat(core(base), core(block))
    if candidates is None:
        candidates = enumerate_all(m + k)
    return [
        o
        for o in candidates
        if restrict(o, m) == base and fixed_points(o, m) == block and core(o) == target_core
    ]
