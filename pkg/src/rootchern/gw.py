"""Genus-0 degree-0 orbifold Gromov-Witten invariants of [C^2/mu_r].

The invariant attached to twisted-sector insertion counts (n_0, ..., n_{r-1})
is the coefficient of (t_1 + t_2) in the equivariant integral, i.e. the exact
degree of c_{n-3}(R^1 pi_*(T + T^dual)) for the pair of s = 0 root problems
carrying the universal r-torsion bundle and its twisted dual.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Tuple

from .grr import ChernSeries, RootProblem, chern_classes_from_ch, chern_series
from .taut import TautClass, integrate_weighted, mul

__all__ = ["GWQuery", "InadmissibleQueryError", "UntwistedSectorError", "build_root_data", "gw_invariant"]


class InadmissibleQueryError(ValueError):
    """The insertion counts violate an admissibility condition."""


class UntwistedSectorError(InadmissibleQueryError):
    """n_0 > 0: insertions of the untwisted sector are outside the implemented regime."""


@dataclass(frozen=True)
class GWQuery:
    r: int
    counts: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "counts", tuple(self.counts))
        if self.r < 2:
            raise InadmissibleQueryError("r must be >= 2")
        if len(self.counts) != self.r:
            raise InadmissibleQueryError(f"need exactly r = {self.r} counts")
        if any(c < 0 for c in self.counts):
            raise InadmissibleQueryError("counts must be nonnegative")
        if self.counts[0] != 0:
            raise UntwistedSectorError("n_0 must be 0 (only degree-0 maps to the gerbe)")
        if sum(j * nj for j, nj in enumerate(self.counts)) % self.r != 0:
            raise InadmissibleQueryError("sum of j*n_j must be divisible by r")
        if self.n <= 3:
            raise InadmissibleQueryError("need more than 3 insertions")

    @property
    def n(self) -> int:
        return sum(self.counts)


def build_root_data(query: GWQuery) -> Tuple[RootProblem, RootProblem]:
    """The s = 0 root problem for the r-torsion bundle and its twisted dual."""
    m = tuple(j for j, nj in enumerate(query.counts) for _ in range(nj))
    first = RootProblem(query.r, 0, m)
    return first, first.dual()


def gw_invariant(query: GWQuery) -> Fraction:
    """deg c_{n-3}(R^1 pi_*(T + T^dual)) as an exact rational."""
    n = query.n
    k = n - 3
    first, second = build_root_data(query)
    a = chern_series(first, k)
    b = chern_series(second, k)
    summed = ChernSeries(
        first,
        a.rank + b.rank,
        {d: a.terms[d] + b.terms[d] for d in range(1, k + 1)},
    )
    c_top = chern_classes_from_ch(summed, k)
    return integrate_weighted(c_top, query.r)
