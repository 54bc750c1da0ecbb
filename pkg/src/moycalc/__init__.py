"""Exact state sums for colored sl(N) track webs and the colored sl(N) link
polynomial of braid closures."""
from .laurent import HalfLaurent, quantum_binomial, quantum_integer
from .web import RungSlice, TrackWeb, circle, theta
from .statesum import bracket, bracket_naive
from .braid import ColoredBraid, invariant, unnormalized_invariant
from .composition import verify_composition
from .bounds import chain_level_bounds_check, mfw_report, polynomial_bounds_check, track_degree_bounds

__all__ = [
    "HalfLaurent", "quantum_binomial", "quantum_integer",
    "RungSlice", "TrackWeb", "circle", "theta",
    "bracket", "bracket_naive",
    "ColoredBraid", "invariant", "unnormalized_invariant",
    "verify_composition",
    "chain_level_bounds_check", "mfw_report", "polynomial_bounds_check", "track_degree_bounds",
]
