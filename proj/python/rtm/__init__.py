"""Rooted trees, the Connes-Kreimer coproduct and rooted tree maps on Q<x,y>."""

from ._core import (
    DomainError,
    Element,
    Forest,
    ParseError,
    Poly,
    apply,
    basis_forests,
    basis_matrix,
    chain_over,
    check_mod2_invertible,
    coproduct,
    decompose,
    diamond,
    enumerate_forests,
    enumerate_trees,
    fmn,
    hy_words,
    ladder,
    op_R,
    selfcheck,
    sigma,
    sigma_kernel,
    verify_fmn,
    verify_r_identity,
)

__all__ = [
    "DomainError",
    "Element",
    "Forest",
    "ParseError",
    "Poly",
    "apply",
    "basis_forests",
    "basis_matrix",
    "chain_over",
    "check_mod2_invertible",
    "coproduct",
    "decompose",
    "diamond",
    "enumerate_forests",
    "enumerate_trees",
    "fmn",
    "hy_words",
    "ladder",
    "op_R",
    "selfcheck",
    "sigma",
    "sigma_kernel",
    "verify_fmn",
    "verify_r_identity",
]
