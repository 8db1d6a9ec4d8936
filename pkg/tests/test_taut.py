"""Tautological-class calculus: integrals, products, excess intersections."""

import random
from fractions import Fraction
from itertools import combinations_with_replacement

import pytest

from rootchern import (
    TautClass,
    all_splits,
    boundary_pushforward,
    format_fraction,
    integrate,
    integrate_weighted,
    kappa_class,
    mul,
    psi_class,
    psi_integral_string_oracle,
    psi_kappa_integral,
)


def test_psi_integrals_vs_string_oracle_up_to_8():
    for n in range(3, 9):
        for exps in combinations_with_replacement(range(n - 2), n):
            if sum(exps) == n - 3:
                assert psi_kappa_integral(tuple(sorted(exps)), ()) == \
                    psi_integral_string_oracle(exps)


def test_psi_multinomial_values():
    assert psi_kappa_integral((0, 0, 0), ()) == 1
    assert psi_kappa_integral((0, 0, 0, 1), ()) == 1
    assert psi_kappa_integral((0, 0, 0, 1, 1), ()) == 2
    assert psi_kappa_integral((0, 0, 0, 0, 2), ()) == 1


def test_kappa_values():
    # kappa_1 on 4 markings has degree 1; kappa_2 on 5 markings degree 1
    assert integrate(kappa_class(4, 1)) == 1
    assert integrate(kappa_class(5, 2)) == 1
    # kappa_0 = n - 2
    assert integrate(mul(kappa_class(5, 0), mul(psi_class(5, 1), psi_class(5, 1)))) == 3
    # independent oracle: pairing kappa_1 against a pure psi-monomial equals the
    # pure psi-integral with one extra marking of exponent 2 (the correction
    # divisors die against that marking's psi^2), so on 5 markings
    # kappa_1*psi_1 -> psi-integral (1,0,0,0,0,2) on 6 markings = 3, and
    # kappa_1*kappa_1 -> (2,2) exponents on 7 markings minus psi^3 on 6 = 6-1 = 5
    assert integrate(mul(kappa_class(5, 1), psi_class(5, 1))) == 3
    assert integrate(mul(kappa_class(5, 1), kappa_class(5, 1))) == 5


def test_boundary_self_intersection():
    d = boundary_pushforward(5, {1, 2}, 1)
    assert integrate(mul(d, d)) == -1
    # the excess rule scales linearly with the node psi-class normalization
    assert integrate(mul(d, d, node_psi_scale=Fraction(1, 3))) == Fraction(-1, 3)


def test_boundary_transverse_products():
    # D_{12} . D_{45} on 5 markings: transverse, one point
    a = boundary_pushforward(5, {1, 2}, 1)
    b = boundary_pushforward(5, {4, 5}, 1)
    assert integrate(mul(a, b)) == 1
    # incompatible (overlapping, non-nested) splits multiply to zero
    c = boundary_pushforward(5, {2, 3}, 1)
    e = boundary_pushforward(5, {3, 4}, 1)
    assert integrate(mul(c, e)) == 0
    assert mul(c, e) == TautClass.zero(5)
    # disjoint splits are compatible: D_{23} . D_{45} is one point
    assert integrate(mul(b, c)) == 1


def test_keel_relation():
    # psi_1 = sum of divisors separating 1 from {2, 3}
    n = 5
    keel = psi_class(n, 1)
    for half in all_splits(n):
        side_with_1 = set(range(1, n + 1)) - set(half)
        if 2 not in side_with_1 and 3 not in side_with_1:
            keel = keel - boundary_pushforward(n, side_with_1, 1)
    partners = [psi_class(n, j) for j in range(1, n + 1)]
    partners += [boundary_pushforward(n, h, 1) for h in all_splits(n)]
    partners.append(kappa_class(n, 1))
    for p in partners:
        assert integrate(mul(p, keel)) == 0


def test_zero_class_pairings_random():
    # psi_1 - (sum of divisors separating 1 from {2,3}) is zero on 6 markings too
    n = 6
    zero = psi_class(n, 1)
    for half in all_splits(n):
        side_with_1 = set(range(1, n + 1)) - set(half)
        if 2 not in side_with_1 and 3 not in side_with_1:
            zero = zero - boundary_pushforward(n, side_with_1, 1)
    rng = random.Random(7)
    factors = [psi_class(n, j) for j in range(1, n + 1)]
    factors += [boundary_pushforward(n, h, 1) for h in all_splits(n)]
    factors.append(kappa_class(n, 1))
    for _ in range(60):
        cls = zero
        for f in rng.sample(factors, 2):
            cls = mul(cls, f)
        assert integrate(cls) == 0


def test_mul_commutes_with_restriction_order():
    n = 5
    a = boundary_pushforward(n, {1, 2}, 1)
    b = psi_class(n, 3)
    c = psi_class(n, 4)
    assert integrate(mul(mul(a, b), c)) == integrate(mul(mul(a, c), b))


def test_mul_right_factor_restriction():
    n = 5
    a = boundary_pushforward(n, {1, 2}, 1)
    two_edges = mul(a, boundary_pushforward(n, {4, 5}, 1))
    with pytest.raises(ValueError):
        mul(a, two_edges)


def test_boundary_pushforward_gamma_orientation():
    # psi on the side containing the listed markings, psihat on the other side
    n = 5
    cls = boundary_pushforward(n, {2, 3, 4}, [(Fraction(1), 1, 0)])
    # the complementary orientation with swapped exponents is the same class
    other = boundary_pushforward(n, {1, 5}, [(Fraction(1), 0, 1)])
    assert cls == other
    # degree: edge + psi = 2 = dim, integral equals -1 times a point count or
    # a product of factor integrals; check both decorations integrate exactly
    val1 = integrate(boundary_pushforward(n, {2, 3, 4}, [(1, 1, 0)]))
    val2 = integrate(boundary_pushforward(n, {2, 3, 4}, [(1, 0, 1)]))
    # side {2,3,4} has 4 special points (psi integral 1), other side 3 (psi -> 0)
    assert val1 == 1
    assert val2 == 0


def test_integrate_weighted_edge_weights():
    # one boundary point on 4 markings: coarse value 1, weight (1/r)^2
    d = boundary_pushforward(4, {1, 2}, 1)
    assert integrate(d) == 1
    assert integrate_weighted(d, 2) == Fraction(1, 4)
    assert integrate_weighted(d, 5) == Fraction(1, 25)
    # edge-free classes get the generic 1/r only
    assert integrate_weighted(psi_class(4, 1), 3) == Fraction(1, 3)


def test_unstable_split_rejected():
    with pytest.raises(ValueError):
        boundary_pushforward(4, {1}, 1)
    with pytest.raises(ValueError):
        boundary_pushforward(4, {1, 2, 3}, 1)


def test_format_fraction():
    assert format_fraction(Fraction(2, 25)) == "2/25"
    assert format_fraction(Fraction(-3, 6)) == "-1/2"
    assert format_fraction(Fraction(4, 2)) == "2"
    assert format_fraction(Fraction(0)) == "0"


def test_to_jsonable_structure():
    d = boundary_pushforward(5, {2, 3}, [(Fraction(1, 2), 1, 0)])
    (term,) = d.to_jsonable()
    assert term["coeff"] == "1/2"
    assert term["edge_psi"] == [{"side": [2, 3], "psi_side": 1, "psi_other": 0}]
    assert term["partition"]["markings"] == [1, 4, 5]
    assert term["partition"]["children"][0]["markings"] == [2, 3]
