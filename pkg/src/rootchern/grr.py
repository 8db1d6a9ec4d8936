"""Chern characters of the direct image of a universal r-th root, genus 0.

The degree-d character is assembled as

    B_{d+1}(s/r)/(d+1)! kappa_d
  - sum_i B_{d+1}(m_i/r)/(d+1)! psi_i^d
  + 1/2 sum_I r B_{d+1}(q(I)/r)/(d+1)! (boundary pushforward of gamma_{d-1}),

with gamma_{d-1} = sum_{a+b=d-1} (-psi)^a psihat^b on the node, the sum over
all marking subsets I with both sides stable, and q(I) the multiplicity index
of the node.  At genus 0 there are no nonseparating nodes, so no irr terms.

The Bernoulli argument m_i/r is used exactly as given, without reduction mod r
(the genus-1 one-pointed case relies on evaluation at 1 + 1/r).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Dict, Tuple

from .bernoulli import bernoulli_eval, sum_q_rminusq
from .taut import (
    TautClass,
    boundary_pushforward,
    all_splits,
    kappa_class,
    mul,
)

__all__ = [
    "GENUS0",
    "GENUS1_ONEPOINT",
    "RootProblem",
    "ChernSeries",
    "multiplicity_index",
    "ch_term",
    "chern_series",
    "chern_classes_from_ch",
    "genus1_onepoint_degree",
]

GENUS0 = "genus0"
GENUS1_ONEPOINT = "genus1-one-point"


@dataclass(frozen=True)
class RootProblem:
    """The moduli problem of r-th roots of (omega^log)^s(-sum m_i [x_i])."""

    r: int
    s: int
    m: Tuple[int, ...]
    genus_case: str = GENUS0

    def __post_init__(self):
        object.__setattr__(self, "m", tuple(self.m))
        if self.r < 1:
            raise ValueError("r must be positive")
        if self.genus_case not in (GENUS0, GENUS1_ONEPOINT):
            raise ValueError(f"unknown genus case {self.genus_case!r}")
        if self.genus_case == GENUS1_ONEPOINT and self.n != 1:
            raise ValueError("the genus-1 case is one-pointed")
        g = self.genus
        if ((2 * g - 2 + self.n) * self.s - sum(self.m)) % self.r != 0:
            raise ValueError(
                "degree condition violated: (2g-2+n)s - sum(m) must be divisible by r"
            )

    @property
    def n(self) -> int:
        return len(self.m)

    @property
    def genus(self) -> int:
        return 0 if self.genus_case == GENUS0 else 1

    @property
    def relative_degree(self) -> Fraction:
        """Degree of the universal root on a fibre."""
        g = self.genus
        return Fraction((2 * g - 2 + self.n) * self.s - sum(self.m), self.r)

    @property
    def minus_chi(self) -> Fraction:
        """-chi(S) = rank of R^1 pi_* S whenever R^0 vanishes fiberwise."""
        return -(self.relative_degree + 1 - self.genus)

    def dual(self) -> "RootProblem":
        """The s = 0 companion problem with markings m_i -> r - m_i."""
        if self.s != 0:
            raise ValueError("dual problem defined for s = 0")
        return RootProblem(self.r, 0, tuple(self.r - mi for mi in self.m), self.genus_case)


def multiplicity_index(problem: RootProblem, I) -> int:
    """Multiplicity index q of a separating node of type (0, I), in {0..r-1}."""
    if problem.genus_case != GENUS0:
        raise ValueError("multiplicity index implemented for genus 0 only")
    s, r = problem.s, problem.r
    return (s + sum(problem.m[i - 1] - s for i in I)) % r


def _gamma(d: int):
    """gamma_d = sum_{a+b=d} (-psi)^a psihat^b; empty when d < 0."""
    if d < 0:
        return []
    return [(Fraction((-1) ** a), a, d - a) for a in range(d + 1)]


def ch_term(problem: RootProblem, d: int, psi_on_first_branch: bool = True) -> TautClass:
    """Degree-d Chern character of R*pi_*S as a tautological class, genus 0.

    psi_on_first_branch flips the node-psi ordering convention; the assembled
    class is independent of it (tested), since I and its complement are both
    summed over.
    """
    if problem.genus_case != GENUS0:
        raise ValueError("ch_term implemented for genus 0 only")
    if d < 1:
        raise ValueError("d must be >= 1; the degree-0 part is the rank")
    n, r, s = problem.n, problem.r, problem.s
    fact = Fraction(1, factorial(d + 1))
    out = kappa_class(n, d).scale(bernoulli_eval(d + 1, Fraction(s, r)) * fact)
    for i in range(1, n + 1):
        legs = [0] * n
        legs[i - 1] = d
        out = out + TautClass(
            n,
            {((), tuple(legs), ()): -bernoulli_eval(d + 1, Fraction(problem.m[i - 1], r)) * fact},
        )
    gamma = _gamma(d - 1)
    if not psi_on_first_branch:
        gamma = [(c, b, a) for c, a, b in gamma]
    for half in all_splits(n):
        comp = tuple(sorted(set(range(1, n + 1)) - set(half)))
        for I, J in ((half, comp), (comp, half)):
            # the multiplicity index is read on the branch carrying the
            # plain psi-classes of gamma; flipping the convention reads it
            # on the other side, so the orientation-summed class is the same
            q = multiplicity_index(problem, I if psi_on_first_branch else J)
            coeff = Fraction(1, 2) * r * bernoulli_eval(d + 1, Fraction(q, r)) * fact
            if coeff:
                out = out + boundary_pushforward(
                    n, I, [(c * coeff, a, b) for c, a, b in gamma]
                )
    return out


@dataclass
class ChernSeries:
    """ch_d(R*pi_*S) by degree; the degree-0 part (the rank -chi) is a number."""

    problem: RootProblem
    rank: Fraction
    terms: Dict[int, TautClass] = field(default_factory=dict)


def chern_series(problem: RootProblem, max_degree: int) -> ChernSeries:
    terms = {d: ch_term(problem, d) for d in range(1, max_degree + 1)}
    return ChernSeries(problem, problem.minus_chi, terms)


def chern_classes_from_ch(series: ChernSeries, k: int) -> TautClass:
    """c_k of the direct image bundle from its Chern characters.

    The stored terms are the Chern characters of R^1 pi_* S itself (the
    formula evaluates to +ch_1(R^1) in the worked examples), so the power
    sums of the Chern roots are p_d = d! ch_d and Newton's identities read
    k c_k = sum_{i=1..k} (-1)^{i-1} c_{k-i} p_i.

    Products are taken on the space of r-th roots, where every node is
    twisted: excess self-intersections of boundary terms carry the twisted
    node psi-classes, i.e. 1/r times the coarse ones.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    n = series.problem.n
    scale = Fraction(1, series.problem.r)
    missing = [d for d in range(1, k + 1) if d not in series.terms]
    if missing:
        raise ValueError(f"missing ch degrees {missing}")
    p = {d: series.terms[d].scale(factorial(d)) for d in range(1, k + 1)}
    c = [TautClass.unit(n)]
    for j in range(1, k + 1):
        acc = TautClass.zero(n)
        for i in range(1, j + 1):
            acc = acc + mul(c[j - i], p[i], node_psi_scale=scale).scale(
                Fraction((-1) ** (i - 1), j)
            )
        c.append(acc)
    return c[k]


def genus1_onepoint_degree(r: int) -> Fraction:
    """Degree of ch_1(R*pi_*S) for the one-pointed genus-1 problem s=1, m=(r+1).

    Table-driven replay of the hand computation: deg psi = 1/24, kappa_1 =
    psi_1, the half-boundary class has degree 1/(2r), and each nonseparating
    multiplicity stratum maps with degree 1.  Result: (1 - r)/(24 r).
    """
    if r < 1:
        raise ValueError("r must be positive")
    deg_psi = Fraction(1, 24)
    deg_half_boundary = Fraction(1, 2 * r)
    # -psi_1/r with kappa_1 = psi_1 folded in, then the two boundary sums
    return (
        -deg_psi
        + Fraction(r * r, 12) * deg_half_boundary
        - sum_q_rminusq(r) * Fraction(1, 4 * r) * (2 * deg_half_boundary)
    )
