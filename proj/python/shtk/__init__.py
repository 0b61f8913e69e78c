"""Finiteness and boundedness criteria for Shintani spaces."""

from ._shtk import (
    DomainError,
    Error,
    InternalError,
    ParseError,
    affine_membership,
    bridge_consistency,
    canonical_infchar,
    check_bb,
    check_pp,
    check_triple,
    classify,
    cross_validate,
    dgk_surjective,
    dominant_a_param,
    explain,
    infchar_equal,
    l_even_member,
    normalize_descriptor,
    restricted_roots,
    rho,
    sbo_dim,
    shintani,
)

__all__ = [
    "DomainError",
    "Error",
    "InternalError",
    "ParseError",
    "affine_membership",
    "bridge_consistency",
    "canonical_infchar",
    "check_bb",
    "check_pp",
    "check_triple",
    "classify",
    "cross_validate",
    "dgk_surjective",
    "dominant_a_param",
    "explain",
    "infchar_equal",
    "l_even_member",
    "normalize_descriptor",
    "restricted_roots",
    "rho",
    "sbo_dim",
    "shintani",
]
