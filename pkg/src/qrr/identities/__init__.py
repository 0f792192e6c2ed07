"""Identity registry and verification engine."""

from .catalog import REGISTRY
from .engine import (
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
from .framework import (
    EngineError,
    EvalCtx,
    IdentityRecord,
    ParamSpec,
    PochSum,
    Prefactor,
    QnSum,
    Side,
    UnknownIdentity,
    VerificationReport,
)

__all__ = [
    "REGISTRY",
    "EngineError",
    "EvalCtx",
    "IdentityRecord",
    "ParamSpec",
    "PochSum",
    "Prefactor",
    "QnSum",
    "Side",
    "UnknownIdentity",
    "VerificationReport",
    "eval_side",
    "get_record",
    "grid_points",
    "identity_sites",
    "list_identities",
    "liu_counterexample",
    "rr_limit_check",
    "support_bounds",
    "verify",
    "verify_grid",
    "verify_mutated",
]
