"""Computational tests for F-singularities of quotients of polynomial rings over F_p."""

from .config import Config, budget_scope, using_config
from .errors import BudgetExceeded, FsingError, InputError
from .frobenius import (
    compatibly_fpure_along,
    fedder_fpure,
    frobenius_colon,
    maximal_ideal,
    sfr_certificate,
    sharply_fpure_pair,
    splitting_ideal,
    verify_certificate,
)
from .groebner import (
    Ideal,
    bracket_power,
    colon,
    eliminate,
    groebner_basis,
    ideal_contains,
    ideal_equal,
    ideal_member,
    intersect,
    is_smooth,
    krull_dim,
    local_length,
    saturate,
    vs_length,
)
from .numerics import csig_estimate, fsig_estimate, hk_estimate, hk_length, rsig_estimate, sdim_rf_estimate, socle_basis
from .perturb import Invariant, PerturbationFamily, Prop, continuity_table, perturb_sweep
from .polyring import MonomialOrder, Polynomial, PrimeField, RingSpec, minors2, parse_poly
from .verdict import Status, Verdict

__version__ = "0.1.0"

__all__ = [
    "Config",
    "budget_scope",
    "using_config",
    "BudgetExceeded",
    "FsingError",
    "InputError",
    "compatibly_fpure_along",
    "fedder_fpure",
    "frobenius_colon",
    "maximal_ideal",
    "sfr_certificate",
    "sharply_fpure_pair",
    "splitting_ideal",
    "verify_certificate",
    "Ideal",
    "bracket_power",
    "colon",
    "eliminate",
    "groebner_basis",
    "ideal_contains",
    "ideal_equal",
    "ideal_member",
    "intersect",
    "is_smooth",
    "krull_dim",
    "local_length",
    "saturate",
    "vs_length",
    "csig_estimate",
    "fsig_estimate",
    "hk_estimate",
    "hk_length",
    "rsig_estimate",
    "sdim_rf_estimate",
    "socle_basis",
    "Invariant",
    "PerturbationFamily",
    "Prop",
    "continuity_table",
    "perturb_sweep",
    "MonomialOrder",
    "Polynomial",
    "PrimeField",
    "RingSpec",
    "minors2",
    "parse_poly",
    "Status",
    "Verdict",
]
