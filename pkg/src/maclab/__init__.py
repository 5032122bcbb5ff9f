"""Exact combinatorics of modified Macdonald polynomials."""

from .diagrams import (
    Filling,
    complement_flip,
    conjugate,
    enumerate_fillings,
    n_stat,
    partitions,
    rect_decompose,
    row_equivalence_class,
)
from .flips import (
    BijectionTrace,
    apply_reduced_word,
    delta,
    delta_word,
    g_bijection,
    gamma,
    rho,
    sort_perm,
    t_swap,
    t_swap_range,
)
from .canonical import (
    Block,
    InfeasibleNuS,
    alpha,
    alpha_bar,
    canonicalize,
    compact_htilde,
    d_coeff,
    extract_blocks,
    generate_family,
    is_canonical,
    is_dual_canonical,
    nu_s_from_canonical,
    sigma_from_nu_s,
)
from .monomial import (
    Htilde_monomial,
    NuSystem,
    P_lambda_mu,
    chi,
    enumerate_nu_systems,
    phi_big,
    phi_small,
)
from .direct import htilde_direct
from .qt import (
    MonomialSym,
    QtPoly,
    coefficient_of,
    substitute_t_inverse,
    t_binomial,
    t_multinomial,
)
from .stats import (
    ALL_SETS,
    EtaStatistic,
    QuadrupleSet,
    admissible_pairs,
    all_statistics,
    eta,
    eta_bar,
    inv,
    maj,
    quad_membership,
    quinv,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
