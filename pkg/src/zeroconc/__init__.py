"""Exact invariants for obstructing 0-concordance of 2-knots.

The main entry points are :func:`parse`, :func:`profile` and :func:`compare`.
"""
from .engine import InvariantProfile, compare, family, profile, signature_check
from .invariants import d_lens, d_manifold, d_normalized, mu_manifold
from .parser import parse, parse_knot, parse_manifold, to_text
from .plumbing import SurgeryPresentation, characteristic_sublinks, d_lattice_oracle, mu

__all__ = [
    "InvariantProfile",
    "SurgeryPresentation",
    "characteristic_sublinks",
    "compare",
    "d_lattice_oracle",
    "d_lens",
    "d_manifold",
    "d_normalized",
    "family",
    "mu",
    "mu_manifold",
    "parse",
    "parse_knot",
    "parse_manifold",
    "profile",
    "signature_check",
    "to_text",
]
