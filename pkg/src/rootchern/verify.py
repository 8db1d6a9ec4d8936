"""Self-check suites behind the `verify` CLI subcommand.

Each suite returns a machine-readable dict: {"suite", "passed", "checks":
[{"name", "passed"}...]}.  These are fast smoke versions of the invariants;
the pytest suite runs the full ranges.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb

from .bernoulli import bernoulli_eval, bernoulli_number, sum_q_rminusq
from .cyclo import cyclo_sum, geometric_coeff_check, series_bridge_check
from .grr import RootProblem, ch_term, genus1_onepoint_degree
from .gw import GWQuery, gw_invariant
from .rspin import descent_factor, elsv_genus0, hurwitz_oracle
from .taut import (
    TautClass,
    all_splits,
    boundary_pushforward,
    integrate,
    mul,
    psi_class,
    psi_integral_string_oracle,
    psi_kappa_integral,
)

__all__ = ["SUITES", "run_suite", "run_suites"]


def _suite_bernoulli():
    checks = []
    rng = random.Random(20260827)

    def rand_q():
        return Fraction(rng.randint(-30, 30), rng.randint(1, 12))

    ok = True
    for n in range(13):
        for _ in range(10):
            x, y = rand_q(), rand_q()
            lhs = bernoulli_eval(n, x + y)
            rhs = sum(comb(n, m) * bernoulli_eval(m, x) * y ** (n - m) for m in range(n + 1))
            ok = ok and lhs == rhs
    checks.append(("addition recursion n<=12", ok))
    ok = all(
        bernoulli_eval(n, x) == (-1) ** n * bernoulli_eval(n, 1 - x)
        for n in range(13)
        for x in (Fraction(1, 3), Fraction(-2, 7), Fraction(5, 4))
    )
    checks.append(("reflection", ok))
    ok = all(
        bernoulli_eval(n, x) - bernoulli_eval(n, x + 1) == -n * x ** (n - 1)
        for n in range(1, 13)
        for x in (Fraction(1, 5), Fraction(7, 3), Fraction(-3, 2))
    )
    checks.append(("difference identity", ok))
    ok = True
    for a in range(9):
        for b in range(9):
            lhs = (-1) ** a * sum(comb(a, i) * bernoulli_number(i + b) for i in range(a + 1))
            rhs = (-1) ** b * sum(comb(b, i) * bernoulli_number(i + a) for i in range(b + 1))
            ok = ok and lhs == rhs
    checks.append(("Carlitz symmetry", ok))
    ok = all(
        sum_q_rminusq(r) == Fraction((r - 1) * r * (r + 1), 6) for r in range(1, 51)
    )
    checks.append(("sum q(r-q) closed form", ok))
    return checks


def _suite_cyclotomic():
    checks = []
    ok = all(
        cyclo_sum(r, q) == Fraction(r * r - 1, 12) - Fraction(q * (r - q), 2)
        for r in range(2, 13)
        for q in range(r)
    )
    checks.append(("node sum closed form r<=12", ok))
    ok = all(series_bridge_check(r, q, 10) for r in range(2, 9) for q in range(r))
    checks.append(("series bridge to order 10, r<=8", ok))
    ok = all(geometric_coeff_check(r) for r in range(2, 13))
    checks.append(("geometric coefficient identity", ok))
    return checks


def _suite_taut():
    checks = []
    ok = True
    for n in range(3, 8):
        for exps in combinations_with_replacement(range(n - 2), n):
            if sum(exps) == n - 3:
                ok = ok and psi_kappa_integral(tuple(sorted(exps)), ()) == psi_integral_string_oracle(exps)
    checks.append(("psi integrals vs string oracle n<=7", ok))
    d = boundary_pushforward(5, {1, 2}, 1)
    checks.append(("boundary self-intersection -1", integrate(mul(d, d)) == -1))
    keel = psi_class(5, 1)
    for half in all_splits(5):
        # canonical splits never contain marking 1; the side with 1 is the complement
        I = set(range(1, 6)) - set(half)
        if 2 not in I and 3 not in I:
            keel = keel - boundary_pushforward(5, I, 1)
    partners = [psi_class(5, j) for j in range(1, 6)] + [
        boundary_pushforward(5, half, 1) for half in all_splits(5)
    ]
    checks.append(("Keel relation on 5 markings", all(integrate(mul(p, keel)) == 0 for p in partners)))
    return checks


def _suite_examples():
    checks = []
    checks.append(
        ("GW(r=5; 0,0,3,0,1) = 2/25", gw_invariant(GWQuery(5, (0, 0, 3, 0, 1))) == Fraction(2, 25))
    )
    checks.append(("GW(r=5; 0,3,1,0,0) = 0", gw_invariant(GWQuery(5, (0, 3, 1, 0, 0))) == 0))
    checks.append(
        (
            "one-pointed genus-1 degree",
            all(genus1_onepoint_degree(r) == Fraction(1 - r, 24 * r) for r in range(1, 11)),
        )
    )
    checks.append(
        (
            "Witten W_{1,1}(1,1) = (r-1)/24",
            all(
                descent_factor((1,), (1,), r) * (-genus1_onepoint_degree(r)) == Fraction(r - 1, 24)
                for r in range(2, 11)
            ),
        )
    )
    ok = True
    for n in (4, 5, 6):
        cls = ch_term(RootProblem(1, 1, (1,) * n), 1)
        for exps in combinations_with_replacement(range(n - 3), n):
            if sum(exps) == n - 4:
                mono = TautClass.unit(n)
                for i, e in enumerate(exps):
                    for _ in range(e):
                        mono = mul(mono, psi_class(n, i + 1))
                ok = ok and integrate(mul(mono, cls)) == 0
    checks.append(("Mumford r=1 degeneration", ok))
    ok = all(
        elsv_genus0(b) == hurwitz_oracle(b)
        for b in [(1, 1, 1), (2, 1, 1), (1, 1, 1, 1), (2, 2, 1), (3, 1, 1)]
    )
    checks.append(("ELSV vs Hurwitz enumeration (sample)", ok))
    return checks


SUITES = {
    "bernoulli": _suite_bernoulli,
    "cyclotomic": _suite_cyclotomic,
    "taut": _suite_taut,
    "examples": _suite_examples,
}


def run_suite(name: str) -> dict:
    checks = SUITES[name]()
    return {
        "suite": name,
        "passed": all(ok for _, ok in checks),
        "checks": [{"name": nm, "passed": ok} for nm, ok in checks],
    }


def run_suites(name: str) -> dict:
    names = list(SUITES) if name == "all" else [name]
    results = [run_suite(nm) for nm in names]
    return {"passed": all(r["passed"] for r in results), "suites": results}
