"""Cyclotomic-field arithmetic and the node-contribution identities."""

from fractions import Fraction

import pytest

from rootchern import (
    CycloNumber,
    cyclo_sum,
    cyclotomic_polynomial,
    geometric_coeff_check,
    series_bridge_check,
    sum_q_rminusq,
)


def test_cyclotomic_polynomial_small():
    # constant term first
    assert cyclotomic_polynomial(1) == (Fraction(-1), Fraction(1))
    assert cyclotomic_polynomial(2) == (Fraction(1), Fraction(1))
    assert cyclotomic_polynomial(3) == (Fraction(1), Fraction(1), Fraction(1))
    assert cyclotomic_polynomial(4) == (Fraction(1), Fraction(0), Fraction(1))
    assert cyclotomic_polynomial(6) == (Fraction(1), Fraction(-1), Fraction(1))


def test_zeta_is_root_and_inverse_roundtrip():
    for r in (3, 4, 5, 6, 8, 12):
        z = CycloNumber.zeta(r)
        power = CycloNumber.of(r, 1)
        for _ in range(r):
            power = power * z
        assert power.is_rational and power.to_rational() == 1
        one = CycloNumber.of(r, 1)
        x = one - z
        prod = x * x.inverse()
        assert prod.is_rational and prod.to_rational() == 1


def test_cyclo_sum_examples():
    assert cyclo_sum(2, 0) == Fraction(1, 4)
    assert cyclo_sum(3, 1) == Fraction(-1, 3)


def test_cyclo_sum_closed_form():
    for r in range(2, 13):
        for q in range(r):
            assert cyclo_sum(r, q) == Fraction(r * r - 1, 12) - Fraction(q * (r - q), 2)


def test_cyclo_sum_symmetry():
    for r in range(2, 13):
        for q in range(1, r):
            assert cyclo_sum(r, q) == cyclo_sum(r, r - q)


def test_cyclo_sum_total_ties_to_quadratic_sum():
    for r in range(2, 13):
        total = sum(cyclo_sum(r, q) for q in range(r))
        assert total == Fraction(r * (r * r - 1), 12) - Fraction(1, 2) * sum_q_rminusq(r)


def test_series_bridge():
    for r in range(2, 9):
        for q in range(r):
            assert series_bridge_check(r, q, 10)


def test_geometric_coeff_identity():
    for r in range(2, 13):
        assert geometric_coeff_check(r)


def test_input_validation():
    with pytest.raises(ValueError):
        cyclo_sum(1, 0)
    with pytest.raises(ValueError):
        cyclo_sum(5, 5)
    with pytest.raises(ValueError):
        series_bridge_check(5, -1, 4)
