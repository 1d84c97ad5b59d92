"""Named identities, conditions, δ terms and proof chains, evaluated pointwise."""

from .deltas import DELTA_5_FORMS, DELTAS, Delta5Form, delta_expression, delta_tensor, eval_delta
from .registry import (
    CHAIN_IDS,
    IDENTITIES,
    Hypothesis,
    IdentityId,
    IdentityInputs,
    IdentityKind,
    IdentitySpec,
    eval_chain,
    eval_identity,
    identity_table,
)

__all__ = [
    "CHAIN_IDS",
    "DELTAS",
    "DELTA_5_FORMS",
    "IDENTITIES",
    "Delta5Form",
    "Hypothesis",
    "IdentityId",
    "IdentityInputs",
    "IdentityKind",
    "IdentitySpec",
    "delta_expression",
    "delta_tensor",
    "eval_chain",
    "eval_delta",
    "eval_identity",
    "identity_table",
]
