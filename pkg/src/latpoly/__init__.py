"""Exact computations on lattice polytopes: Ehrhart data, reflexive and
smooth Fano predicates, unimodular triangulations, IDP checks and
face/volume bounds."""

from .ehrhart import count_lattice_points, delta_vector, ehrhart_polynomial
from .polytope import Polytope, f_vector, h_vector, make_polytope, normalized_volume
from .reflexive import is_reflexive, is_smooth_fano

__all__ = [
    "Polytope",
    "count_lattice_points",
    "delta_vector",
    "ehrhart_polynomial",
    "f_vector",
    "h_vector",
    "is_reflexive",
    "is_smooth_fano",
    "make_polytope",
    "normalized_volume",
]

__version__ = "0.1.0"
