"""Explicit extended formulations for subgraph, spanning forest and
count-matroid independence polytopes, checked with exact rational LP."""

from .errors import (
    CompositionError,
    ConstructionError,
    DimensionError,
    EFError,
    InputError,
    PreconditionError,
    ScaleError,
    SpecError,
)
from .rational import Rational, dot, parse_rational, rat, format_rational
from .graph import Graph
from .polyhedra import ExtendedFormulation, LinearSystem, Row
from .lp import LpOutcome, Solver, is_feasible, solve_max

__all__ = [
    "CompositionError",
    "ConstructionError",
    "DimensionError",
    "EFError",
    "ExtendedFormulation",
    "Graph",
    "InputError",
    "LinearSystem",
    "LpOutcome",
    "PreconditionError",
    "Rational",
    "Row",
    "ScaleError",
    "Solver",
    "SpecError",
    "dot",
    "format_rational",
    "is_feasible",
    "parse_rational",
    "rat",
    "solve_max",
]
