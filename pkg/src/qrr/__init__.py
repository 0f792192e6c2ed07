"""Exact q-series verification of finite Rogers-Ramanujan identities."""

from .series import (
    Coeff,
    ExponentExceedsTruncation,
    MonomialParam,
    NeedsLaurent,
    SeriesError,
    TruncatedSeries,
    ZeroConstantTerm,
    default_truncation,
    monomial,
    series_add,
    series_compare,
    series_invert,
    series_mul,
)
from .pochhammer import (
    NonPositiveExponent,
    PochProduct,
    PochValue,
    PoleError,
    SeriesAccumulator,
    qpoch,
    qpoch_infinite,
    qpoch_multi,
    qpoch_reciprocal,
    rr_product_side,
    sum_terms,
    terms_to_series,
)
from .identities import (
    REGISTRY,
    EngineError,
    IdentityRecord,
    UnknownIdentity,
    VerificationReport,
    eval_side,
    get_record,
    grid_points,
    identity_sites,
    list_identities,
    liu_counterexample,
    rr_limit_check,
    support_bounds,
    verify,
    verify_grid,
    verify_mutated,
)
from .bailey import (
    BaileyPair,
    bailey_step,
    chain_reproduce,
    fold_to_one_sided,
    lattice_seed_pair,
    lattice_step,
    symmetrized_identity,
    unit_bilateral_x1,
    unit_bilateral_xq,
    unit_pair_x1,
    verify_pair,
)
from .telescoping import (
    TelescopeReport,
    quartic_sides,
    verify_quartic_identity,
    verify_sk_tk,
    verify_telescoping,
)
from .binomial import (
    bino4_sides,
    bino5_sides,
    cor57_sides,
    cor58a_sides,
    cor58b_sides,
    divisibility_check,
    general_alt_sum,
    general_divisibility_check,
)

__all__ = [
    "BaileyPair",
    "Coeff",
    "EngineError",
    "ExponentExceedsTruncation",
    "IdentityRecord",
    "MonomialParam",
    "NeedsLaurent",
    "NonPositiveExponent",
    "PochProduct",
    "PochValue",
    "PoleError",
    "REGISTRY",
    "SeriesAccumulator",
    "SeriesError",
    "TelescopeReport",
    "TruncatedSeries",
    "UnknownIdentity",
    "VerificationReport",
    "ZeroConstantTerm",
    "bailey_step",
    "bino4_sides",
    "bino5_sides",
    "chain_reproduce",
    "cor57_sides",
    "cor58a_sides",
    "cor58b_sides",
    "default_truncation",
    "divisibility_check",
    "eval_side",
    "fold_to_one_sided",
    "general_alt_sum",
    "general_divisibility_check",
    "get_record",
    "grid_points",
    "identity_sites",
    "lattice_seed_pair",
    "lattice_step",
    "list_identities",
    "liu_counterexample",
    "monomial",
    "qpoch",
    "qpoch_infinite",
    "qpoch_multi",
    "qpoch_reciprocal",
    "quartic_sides",
    "rr_limit_check",
    "rr_product_side",
    "series_add",
    "series_compare",
    "series_invert",
    "series_mul",
    "sum_terms",
    "support_bounds",
    "symmetrized_identity",
    "terms_to_series",
    "unit_bilateral_x1",
    "unit_bilateral_xq",
    "unit_pair_x1",
    "verify",
    "verify_grid",
    "verify_mutated",
    "verify_pair",
    "verify_quartic_identity",
    "verify_sk_tk",
    "verify_telescoping",
]

__version__ = "0.1.0"
