"""Property suites run by ``transfersys verify``.

Each suite returns a list of :class:`Check` results; nothing raises on a
failed property.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from math import prod

from .catalan_bijection import (
    count_by_cores,
    enumerate_tuples,
    excess,
    make_catalan_tuple,
    sigma,
    sigma_inverse,
    tuple_core,
)
from .compatibility import count_d, count_pairs, filtration_level, is_compatible
from .core import core_blocks, enumerate_all, wrap
from .fuss_catalan import IDENTITIES, catalan, check_identity, fuss_catalan
from .oracles import brute_force_partner_counts

DEFAULT_MAX_N = {"identities": 30, "bijection": 7, "compatibility": 6}


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f" ({self.detail})" if self.detail else ""
        return f"[{status}] {self.name}{extra}"


def _timed(name, fn):
    start = time.perf_counter()
    passed, detail = fn()
    return Check(name, passed, detail, time.perf_counter() - start)


def identities(max_n=30, max_p=5, max_r=10, max_s=10):
    checks = []
    for which, (_, used) in IDENTITIES.items():
        def run(which=which, used=used):
            ps = range(1, max_p + 1) if "p" in used else (3,)
            rs = range(1, max_r + 1) if "r" in used else (1,)
            ss = range(0, max_s + 1) if "s" in used else (1,)
            ns = range(0 if which == 3 else 1, max_n + 1)
            cases = 0
            for n in ns:
                for p in ps:
                    for r in rs:
                        for s in ss:
                            rep = check_identity(which, n, p, r, s)
                            cases += 1
                            if not rep.passed:
                                return False, str(rep)
            return True, f"{cases} cases"

        checks.append(_timed(f"identity {which}", run))
    return checks


def bijection(max_n=7):
    def round_trips():
        for n in range(1, max_n + 1):
            for o in enumerate_all(n):
                if sigma_inverse(sigma(o)) != o:
                    return False, f"sigma_inverse(sigma(O)) != O for {o}"
            for t in enumerate_tuples(n):
                if sigma(sigma_inverse(t)) != t:
                    return False, f"sigma(sigma_inverse(t)) != t for {t}"
        return True, f"n <= {max_n}"

    def image():
        for n in range(1, max_n + 1):
            images = [sigma(o) for o in enumerate_all(n)]
            if len(set(images)) != len(images):
                return False, f"sigma not injective at n={n}"
            tuples = set(enumerate_tuples(n))
            if set(images) != tuples or len(tuples) != catalan(n):
                return False, f"image mismatch at n={n}"
            for t in images:
                make_catalan_tuple(t.entries)
        return True, f"n <= {max_n}"

    def cores_and_excess():
        for n in range(1, max_n + 1):
            for o in enumerate_all(n):
                t = sigma(o)
                if tuple_core(t) != core_blocks(o):
                    return False, f"core mismatch for {o}"
                if excess(t) != len(o.sources(n)):
                    return False, f"excess mismatch for {o}"
        return True, f"n <= {max_n}"

    return [
        _timed("sigma round trips", round_trips),
        _timed("sigma injective with image S_n", image),
        _timed("tuple core and excess semantics", cores_and_excess),
    ]


def compatibility(max_n=6):
    def modes():
        for n in range(1, max_n + 1):
            systems = list(enumerate_all(n))
            for a in systems:
                for m in systems:
                    vals = {is_compatible(a, m, mode) for mode in ("definition", "core", "hull")}
                    if len(vals) != 1:
                        return False, f"modes disagree on ({a}, {m})"
        return True, f"n <= {max_n}"

    def partners():
        for n in range(1, max_n + 1):
            for a, c in brute_force_partner_counts(n).items():
                expected = prod(catalan(k) for k in core_blocks(a))
                if c != expected:
                    return False, f"{c} partners for {a}, expected {expected}"
        return True, f"n <= {max_n}"

    def counts():
        for n in range(1, max_n + 1):
            vals = {method: count_pairs(n, method) for method in ("brute", "recurrence", "cores")}
            vals["cores-dp"] = count_by_cores(n, e_method="dp").total
            target = fuss_catalan(n, 3, 1)
            if set(vals.values()) != {target}:
                return False, f"n={n}: {vals} vs A_n(3,1)={target}"
        return True, f"n <= {max_n}"

    def closed_forms():
        for n in range(1, max(max_n, 200) + 1):
            if count_d(n, 0) != fuss_catalan(n, 3, 1):
                return False, f"d({n},0)"
            if count_d(n, 1) != fuss_catalan(n - 1, 3, 2):
                return False, f"d({n},1)"
        return True, "n <= 200"

    def filtration():
        for n in range(0, min(max_n, 5) + 1):
            for o in enumerate_all(n):
                if n and filtration_level(wrap(o)) != filtration_level(o) + 1:
                    return False, f"filtration of wrap({o})"
        return True, f"n <= {min(max_n, 5)}"

    return [
        _timed("three compatibility modes agree", modes),
        _timed("partner counts are products of Catalan numbers", partners),
        _timed("brute, recurrence and cores counts equal A_n(3,1)", counts),
        _timed("d(n,0) = A_n(3,1) and d(n,1) = A_{n-1}(3,2)", closed_forms),
        _timed("wrap raises filtration level by one", filtration),
    ]


SUITES = {"identities": identities, "bijection": bijection, "compatibility": compatibility}
