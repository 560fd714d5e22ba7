"""Exit criteria for the build, one test per criterion.

Run ``pytest tests/test_acceptance.py`` to get one PASS/FAIL line per
criterion in the terminal summary.
"""

import os
import subprocess
import sys
import time
from math import prod

import pytest

from transfersys.catalan_bijection import (
    core_sum,
    count_by_cores,
    enumerate_tuples,
    excess,
    list_extensions,
    sigma,
    sigma_inverse,
    top_sources,
    tuple_core,
)
from transfersys.compatibility import (
    CountTable,
    count_pairs,
    enumerate_pairs,
    is_compatible,
)
from transfersys.core import (
    concat,
    core,
    core_blocks,
    enumerate_all,
    fixed_points,
    hull,
    leq,
    restrict,
    wrap,
)
from transfersys.fuss_catalan import IDENTITIES, catalan, check_identity, fuss_catalan
from transfersys.oracles import (
    brute_force_extensions,
    brute_force_partner_counts,
    brute_force_systems,
    saturated_systems,
)

CATALAN = [1, 1, 2, 5, 14, 42, 132, 429, 1430]
A31 = [1, 1, 3, 12, 55, 273, 1428, 7752]


@pytest.mark.acceptance("AC1 |T_n| = Cat_n: enumerator n <= 8, subset-filter oracle n <= 6")
def test_ac1_transfer_system_counts():
    start = time.perf_counter()
    for n in range(1, 9):
        systems = list(enumerate_all(n))
        assert len(systems) == len(set(systems)) == CATALAN[n] == catalan(n)
    assert [len(list(enumerate_all(n))) for n in range(1, 8)] == [1, 2, 5, 14, 42, 132, 429]
    for n in range(1, 7):
        assert set(enumerate_all(n)) == set(brute_force_systems(n))
    assert time.perf_counter() - start < 60


@pytest.mark.acceptance("AC2 compatible pairs: brute = recurrence = cores = A_n(3,1), n <= 7")
def test_ac2_pair_counts():
    start = time.perf_counter()
    for n in range(1, 8):
        brute = count_pairs(n, "brute")
        rec = count_pairs(n, "recurrence", table=CountTable())
        cores = count_pairs(n, "cores")
        assert brute == rec == cores == A31[n] == fuss_catalan(n, 3, 1)
        assert sum(1 for _ in enumerate_pairs(n)) == A31[n]
    assert time.perf_counter() - start < 300


@pytest.mark.acceptance("AC3 d(n,0) = A_n(3,1) and d(n,1) = A_{n-1}(3,2), n <= 200")
def test_ac3_recurrence_closed_forms():
    start = time.perf_counter()
    table = CountTable()
    for n in range(1, 201):
        assert table.get(n, 0) == fuss_catalan(n, 3, 1)
        assert table.get(n, 1) == fuss_catalan(n - 1, 3, 2)
    assert time.perf_counter() - start < 30


@pytest.mark.acceptance("AC4 d(n,n) = d(n,n-1) = Cat_n, n <= 50")
def test_ac4_base_cases():
    table = CountTable()
    for n in range(1, 51):
        assert table.get(n, n) == table.get(n, n - 1) == catalan(n)
    # complete additive part: every multiplicative system is a partner
    for n in range(1, 6):
        pairs = list(enumerate_pairs(n))
        top = [p for p in pairs if len(p.additive) == n * (n - 1) // 2]
        assert len(top) == catalan(n)


@pytest.mark.acceptance("AC5 all five Fuss-Catalan identities, n <= 30, p <= 5, r <= 10, s <= 10")
def test_ac5_identities():
    start = time.perf_counter()
    cases = 0
    for which, (_, used) in IDENTITIES.items():
        ps = range(1, 6) if "p" in used else (3,)
        rs = range(1, 11) if "r" in used else (1,)
        ss = range(0, 11) if "s" in used else (1,)
        for n in range(0 if which == 3 else 1, 31):
            for p in ps:
                for r in rs:
                    for s in ss:
                        rep = check_identity(which, n, p, r, s)
                        assert rep.passed, str(rep)
                        cases += 1
    assert cases > 0
    assert time.perf_counter() - start < 30


@pytest.mark.acceptance("AC6 sigma is a bijection T_n -> S_n with core and excess semantics, n <= 7")
def test_ac6_sigma_bijection():
    start = time.perf_counter()
    for n in range(1, 8):
        systems = list(enumerate_all(n))
        images = [sigma(o) for o in systems]
        assert len(set(images)) == len(images)
        tuples = list(enumerate_tuples(n))
        assert set(images) == set(tuples) and len(tuples) == catalan(n)
        for o, t in zip(systems, images):
            assert sigma_inverse(t) == o
            assert tuple_core(t) == core_blocks(o)
            assert excess(t) == sum(1 for j in range(1, n) if o.has(j, n))
        for t in tuples:
            assert sigma(sigma_inverse(t)) == t
    assert time.perf_counter() - start < 120


@pytest.mark.acceptance("AC7 brute-force partner count = prod Cat_{k_i} over core blocks, n <= 6")
def test_ac7_partner_counts():
    for n in range(1, 7):
        counts = brute_force_partner_counts(n)
        assert len(counts) == catalan(n)
        for a, c in counts.items():
            assert c == prod(catalan(k) for k in core_blocks(a))


@pytest.mark.acceptance("AC8 brute-force core-preserving extensions = list_extensions, m <= 5, k <= 3")
def test_ac8_extension_classification():
    for m in range(1, 6):
        for k in range(1, 4):
            candidates = list(enumerate_all(m + k))
            for base in enumerate_all(m):
                found = brute_force_extensions(base, k, candidates)
                listed = list_extensions(base, k)
                assert len(listed) == len(top_sources(base)) + 1
                assert sorted(found, key=lambda o: o.mask) == sorted(listed, key=lambda o: o.mask)


@pytest.mark.acceptance("AC9 recursive split bijectivity, restrict/fixed-point coherence, core/hull extremality, mode agreement")
def test_ac9_structural_algebra():
    for n in range(1, 8):
        images = [
            concat(left, wrap(inner))
            for m in range(n)
            for left in enumerate_all(m)
            for inner in enumerate_all(n - m - 1)
        ]
        assert len(images) == len(set(images))
        target = set(brute_force_systems(n)) if n <= 7 else set(enumerate_all(n))
        assert set(images) == target

    for total in range(0, 7):
        for nl in range(0, total + 1):
            for a in enumerate_all(nl):
                for b in enumerate_all(total - nl):
                    o = concat(a, b)
                    assert restrict(o, nl) == a and fixed_points(o, nl) == b

    for n in range(1, 7):
        sats = saturated_systems(n)
        assert len(sats) == len(set(sats)) == 2 ** (n - 1)
        for o in enumerate_all(n):
            below = [s for s in sats if leq(s, o)]
            above = [s for s in sats if leq(o, s)]
            c, h = core(o), hull(o)
            assert c in below and all(leq(s, c) for s in below)
            assert h in above and all(leq(h, s) for s in above)

    for n in range(1, 7):
        systems = list(enumerate_all(n))
        for a in systems:
            for m in systems:
                assert (
                    is_compatible(a, m, "definition")
                    == is_compatible(a, m, "core")
                    == is_compatible(a, m, "hull")
                )


COMMANDS = [
    ["enumerate", "--n", "4", "--format", "json"],
    ["enumerate", "--n", "3", "--format", "csv"],
    ["enumerate", "--n", "3", "--pairs"],
    ["count", "systems", "--n", "6", "--method", "all"],
    ["count", "pairs", "--max-n", "7", "--method", "all", "--format", "csv"],
    ["count", "pairs", "--n", "60"],
    ["count", "table", "--max-n", "9", "--format", "csv"],
    ["verify", "all", "--max-n", "4"],
    ["sigma", "--n", "4"],
    ["export", "sequence", "--name", "a-3-1", "--max-n", "20"],
    ["export", "fuss-table", "--max-n", "5"],
    ["export", "breakdown", "--n", "5"],
    ["export", "tuples", "--n", "4"],
]
STDIN_COMMANDS = [
    (["render", "--format", "svg", "--split", "4"], '{"n": 7, "relations": [[1,2],[1,3],[1,4],[1,5],[1,6],[1,7],[2,3],[2,4],[2,5],[2,6],[2,7],[3,4],[6,7]]}'),
    (["render", "--format", "ascii"], '{"n": 3, "relations": [[1,2],[1,3],[2,3]]}'),
    (["sigma"], '{"n": 3, "relations": [[1,2]]}'),
    (["sigma", "--invert"], '{"entries": [4,0,1,2]}'),
]


def _cli(args, stdin=None):
    proc = subprocess.run(
        [sys.executable, "-m", "transfersys", *args],
        input=stdin.encode() if stdin else None,
        capture_output=True,
        env=dict(os.environ),
    )
    return proc.returncode, proc.stdout


@pytest.mark.acceptance("AC10 CLI output is byte-identical across runs, with and without the memo cache")
def test_ac10_determinism(tmp_path):
    for args in COMMANDS:
        first, second = _cli(args), _cli(args)
        assert first[0] == 0, args
        assert first == second, args
    for args, stdin in STDIN_COMMANDS:
        first, second = _cli(args, stdin), _cli(args, stdin)
        assert first[0] == 0, args
        assert first == second, args
    cache = tmp_path / "cache.csv"
    for args in (["count", "pairs", "--n", "60"], ["count", "table", "--max-n", "9", "--format", "csv"]):
        plain = _cli(args)
        cold = _cli(args + ["--cache-path", str(cache)])
        warm = _cli(args + ["--cache-path", str(cache)])
        assert plain == cold == warm, args
    assert core_sum(30) == fuss_catalan(30, 3, 1)
    assert count_by_cores(7).total == A31[7]
