"""Exact genus-0 tautological calculus for direct images of r-th roots.

Computes Chern characters of R*pi_*S for a universal r-th root S on the
moduli of n-pointed genus-0 stable curves (plus the one-pointed genus-1
case), and derives from them orbifold Gromov-Witten invariants of the
mu_r surface singularity, genus-0 r-spin numbers, and genus-0 Hurwitz
numbers.  All arithmetic is exact rational.
"""

from .bernoulli import (
    BernoulliPolynomial,
    bernoulli_eval,
    bernoulli_number,
    bernoulli_poly,
    sum_q_rminusq,
)
from .cyclo import (
    CycloNumber,
    TruncatedSeries,
    cyclo_sum,
    cyclotomic_polynomial,
    geometric_coeff_check,
    series_bridge_check,
)
from .grr import (
    GENUS0,
    GENUS1_ONEPOINT,
    ChernSeries,
    RootProblem,
    ch_term,
    chern_classes_from_ch,
    chern_series,
    genus1_onepoint_degree,
    multiplicity_index,
)
from .gw import (
    GWQuery,
    InadmissibleQueryError,
    UntwistedSectorError,
    build_root_data,
    gw_invariant,
)
from .rspin import (
    descent_factor,
    elsv_genus0,
    hurwitz_oracle,
    potential_coefficients,
    reduce_index,
    w_number_genus0,
)
from .taut import (
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

__version__ = "0.1.0"

__all__ = [
    "BernoulliPolynomial",
    "bernoulli_poly",
    "bernoulli_eval",
    "bernoulli_number",
    "sum_q_rminusq",
    "CycloNumber",
    "TruncatedSeries",
    "cyclotomic_polynomial",
    "cyclo_sum",
    "series_bridge_check",
    "geometric_coeff_check",
    "GENUS0",
    "GENUS1_ONEPOINT",
    "RootProblem",
    "ChernSeries",
    "multiplicity_index",
    "ch_term",
    "chern_series",
    "chern_classes_from_ch",
    "genus1_onepoint_degree",
    "GWQuery",
    "InadmissibleQueryError",
    "UntwistedSectorError",
    "build_root_data",
    "gw_invariant",
    "descent_factor",
    "reduce_index",
    "w_number_genus0",
    "potential_coefficients",
    "elsv_genus0",
    "hurwitz_oracle",
    "TautClass",
    "psi_class",
    "kappa_class",
    "boundary_pushforward",
    "mul",
    "integrate",
    "integrate_weighted",
    "psi_kappa_integral",
    "psi_integral_string_oracle",
    "all_splits",
    "format_fraction",
]
