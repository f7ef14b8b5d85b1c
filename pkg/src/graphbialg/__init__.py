"""Exact double bialgebra of graphs and oriented graphs, with graph polynomials."""

from __future__ import annotations

from .formats import emit_any, parse_any
from .graphs import MixedGraph, OrientedGraph, SetPartition, SimpleGraph, canonical_key
from .hopf import (
    GraphSum,
    TensorSum,
    antipode_recursive,
    coproduct_Delta,
    coproduct_contraction,
    phi_lambda,
    theta,
    theta_ac,
)
from .invariants import chromatic_polynomial, fk_polynomial, rank_generating_polynomial, tutte_polynomial
from .poly import BiPoly, UniPoly

__all__ = [
    "BiPoly",
    "GraphSum",
    "MixedGraph",
    "OrientedGraph",
    "SetPartition",
    "SimpleGraph",
    "TensorSum",
    "UniPoly",
    "antipode_recursive",
    "canonical_key",
    "chromatic_polynomial",
    "coproduct_Delta",
    "coproduct_contraction",
    "emit_any",
    "fk_polynomial",
    "parse_any",
    "phi_lambda",
    "rank_generating_polynomial",
    "theta",
    "theta_ac",
    "tutte_polynomial",
]
