"""Invariants of finite graded bounded posets.

Möbius and Poincaré data, the ab-index and its Poincaré extension, flag
vectors, R-labeling expansions and (augmented) Chow polynomials with their
gamma expansions.
"""

from .abindex import (
    FlagVector,
    ab_index,
    ab_index_tilde,
    ex_ab_index,
    ex_ab_index_tilde,
    expsi_via_beta_e,
    flag_alpha,
    flag_beta,
)
from .chow import (
    GammaExpansion,
    canonical_decomposition_check,
    chow,
    gamma_expansion,
    isolated_subsets,
)
from .document import PosetDocument, load_poset, parse_poset, render_poset
from .errors import *  # noqa: F401,F403
from .ncpoly import (
    AbWord,
    NcPoly,
    eval_xy,
    iota,
    monomial_T,
    monomial_T_E,
    ncp_add,
    ncp_mul,
    ncp_scale,
    omega,
    wt_set,
)
from .polynomial import XPoly, YPoly
from .poset import (
    Poset,
    build_poset,
    chain_poincare,
    chains_to_top,
    char_poly,
    interval,
    mobius,
    poincare,
    random_graded_poset,
)
from .rlabeling import chain_monomial, expsi_via_rlabeling, is_r_labeling

__version__ = "0.1.0"
