"""Bend-bounded EPG representations of outerplanar graphs."""

from .graph import Graph, Witness, find_induced, gen_named, gen_random, parse_graph
from .grid import EpgRepresentation, GridPath, canonicalize_path, compact, render, verify

__all__ = [
    "Graph",
    "Witness",
    "find_induced",
    "gen_named",
    "gen_random",
    "parse_graph",
    "EpgRepresentation",
    "GridPath",
    "canonicalize_path",
    "compact",
    "render",
    "verify",
]
