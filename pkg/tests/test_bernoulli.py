"""Bernoulli polynomial identities, all exact."""

import random
from fractions import Fraction
from math import comb

from rootchern import (
    bernoulli_eval,
    bernoulli_number,
    bernoulli_poly,
    sum_q_rminusq,
)


def test_bernoulli_numbers_classical_values():
    known = {
        0: Fraction(1),
        1: Fraction(-1, 2),
        2: Fraction(1, 6),
        3: Fraction(0),
        4: Fraction(-1, 30),
        6: Fraction(1, 42),
        8: Fraction(-1, 30),
        10: Fraction(5, 66),
        12: Fraction(-691, 2730),
    }
    for n, v in known.items():
        assert bernoulli_number(n) == v


def test_evaluation_matches_polynomial():
    for n in range(0, 10):
        poly = bernoulli_poly(n)
        for x in (Fraction(0), Fraction(1, 2), Fraction(-3, 7), Fraction(5)):
            assert bernoulli_eval(n, x) == poly(x)


def test_addition_recursion_random_pairs():
    rng = random.Random(20260827)
    pairs = [
        (Fraction(rng.randint(-30, 30), rng.randint(1, 12)),
         Fraction(rng.randint(-30, 30), rng.randint(1, 12)))
        for _ in range(50)
    ]
    for n in range(13):
        for x, y in pairs:
            lhs = bernoulli_eval(n, x + y)
            rhs = sum(
                comb(n, m) * bernoulli_eval(m, x) * y ** (n - m) for m in range(n + 1)
            )
            assert lhs == rhs


def test_reflection():
    for n in range(13):
        for x in (Fraction(1, 3), Fraction(-2, 7), Fraction(5, 4), Fraction(0)):
            assert bernoulli_eval(n, x) == (-1) ** n * bernoulli_eval(n, 1 - x)


def test_difference_identity():
    for n in range(1, 13):
        for x in (Fraction(1, 5), Fraction(7, 3), Fraction(-3, 2)):
            assert bernoulli_eval(n, x) - bernoulli_eval(n, x + 1) == -n * x ** (n - 1)


def test_carlitz_symmetry():
    for a in range(9):
        for b in range(9):
            lhs = (-1) ** a * sum(
                comb(a, i) * bernoulli_number(i + b) for i in range(a + 1)
            )
            rhs = (-1) ** b * sum(
                comb(b, i) * bernoulli_number(i + a) for i in range(b + 1)
            )
            assert lhs == rhs


def test_sum_q_rminusq_closed_form():
    for r in range(1, 51):
        assert sum_q_rminusq(r) == Fraction((r - 1) * r * (r + 1), 6)
        assert sum_q_rminusq(r) == sum(
            Fraction(q * (r - q)) for q in range(r)
        )
