"""Exact linear systems and extended formulations.

A :class:`LinearSystem` is a list of named variables (all free) together
with inequality rows ``a.x <= b`` and equation rows ``c.x = d``. Sign
restrictions are ordinary inequality rows. An :class:`ExtendedFormulation`
marks some variables as the projection coordinates; its size is the number
of inequality rows, equations are never counted.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence, Union

from .errors import CompositionError, DimensionError, InputError, ScaleError
from .rational import ZERO, as_rational, format_rational

DEFAULT_POINT_CAP = 20


@dataclass(frozen=True)
class Row:
    """Sparse row: ``coeffs`` holds only the non-zero coefficients."""

    coeffs: Mapping[str, Fraction]
    rhs: Fraction

    @classmethod
    def make(cls, coeffs: Mapping[str, object], rhs: object = 0) -> Row:
        clean = {}
        for var, c in coeffs.items():
            c = as_rational(c)
            if c:
                clean[var] = clean.get(var, ZERO) + c
        return cls({v: c for v, c in clean.items() if c}, as_rational(rhs))

    def value(self, point: Mapping[str, Fraction]) -> Fraction:
        return sum((c * point[v] for v, c in self.coeffs.items()), ZERO)

    def dense(self, variables: Sequence[str]) -> list[Fraction]:
        return [self.coeffs.get(v, ZERO) for v in variables]

    def renamed(self, mapping: Callable[[str], str]) -> Row:
        return Row({mapping(v): c for v, c in self.coeffs.items()}, self.rhs)

    def scaled(self, factor: Fraction) -> Row:
        return Row({v: c * factor for v, c in self.coeffs.items()}, self.rhs * factor)


def le(coeffs: Mapping[str, object], rhs: object = 0) -> Row:
    return Row.make(coeffs, rhs)


def ge(coeffs: Mapping[str, object], rhs: object = 0) -> Row:
    """``a.x >= b`` stored as ``-a.x <= -b``."""
    r = Row.make(coeffs, rhs)
    return r.scaled(Fraction(-1))


def eq(coeffs: Mapping[str, object], rhs: object = 0) -> Row:
    return Row.make(coeffs, rhs)


@dataclass(frozen=True)
class LinearSystem:
    variables: tuple[str, ...]
    inequalities: tuple[Row, ...] = ()
    equations: tuple[Row, ...] = ()
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        object.__setattr__(self, "inequalities", tuple(self.inequalities))
        object.__setattr__(self, "equations", tuple(self.equations))
        index = {v: i for i, v in enumerate(self.variables)}
        if len(index) != len(self.variables):
            raise InputError("duplicate variable names")
        for row in itertools.chain(self.inequalities, self.equations):
            for v in row.coeffs:
                if v not in index:
                    raise DimensionError(f"row uses undeclared variable {v!r}")
        object.__setattr__(self, "_index", index)

    @property
    def inequality_count(self) -> int:
        return len(self.inequalities)

    @property
    def equation_count(self) -> int:
        return len(self.equations)

    def position(self, var: str) -> int:
        return self._index[var]

    def __contains__(self, var: str) -> bool:
        return var in self._index

    def satisfies(self, point: Mapping[str, Fraction]) -> bool:
        return all(r.value(point) <= r.rhs for r in self.inequalities) and all(
            r.value(point) == r.rhs for r in self.equations
        )

    def extended(self, variables: Iterable[str] = (), inequalities: Iterable[Row] = (),
                 equations: Iterable[Row] = ()) -> LinearSystem:
        return LinearSystem(
            self.variables + tuple(variables),
            self.inequalities + tuple(inequalities),
            self.equations + tuple(equations),
        )

    def renamed(self, mapping: Callable[[str], str]) -> LinearSystem:
        return LinearSystem(
            tuple(mapping(v) for v in self.variables),
            tuple(r.renamed(mapping) for r in self.inequalities),
            tuple(r.renamed(mapping) for r in self.equations),
        )

    def summary(self) -> str:
        return (f"{self.inequality_count} inequalities, {self.equation_count} equations, "
                f"{len(self.variables)} variables")


@dataclass(frozen=True)
class ExtendedFormulation:
    """A linear system whose polytope is its projection onto ``projection``."""

    system: LinearSystem
    projection: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "projection", tuple(self.projection))
        missing = [v for v in self.projection if v not in self.system]
        if missing:
            raise CompositionError(f"projection variables not in system: {missing}")
        if len(set(self.projection)) != len(self.projection):
            raise CompositionError("duplicate projection variables")

    @property
    def size(self) -> int:
        return self.system.inequality_count

    @property
    def auxiliary(self) -> tuple[str, ...]:
        proj = set(self.projection)
        return tuple(v for v in self.system.variables if v not in proj)

    def summary(self) -> str:
        return f"{self.system.summary()} ({len(self.projection)} projected)"


Formulation = Union[LinearSystem, ExtendedFormulation]


@dataclass(frozen=True)
class VertexSet:
    """Distinct 0/1 points over a declared variable ordering."""

    variables: tuple[str, ...]
    points: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        pts = tuple(tuple(Fraction(x) for x in p) for p in self.points)
        for p in pts:
            if len(p) != len(self.variables):
                raise DimensionError("point length differs from variable count")
            if any(x not in (0, 1) for x in p):
                raise InputError(f"non 0/1 point {p}")
        if len(set(pts)) != len(pts):
            raise InputError("duplicate points")
        object.__setattr__(self, "points", pts)

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def as_set(self) -> set:
        return set(self.points)

    def max_value(self, objective: Sequence[Fraction]) -> Fraction | None:
        """Brute-force maximum; None for an empty set."""
        if not self.points:
            return None
        return max(sum((c * x for c, x in zip(objective, p)), ZERO) for p in self.points)


def as_ef(obj: Formulation) -> ExtendedFormulation:
    """View a plain system as a formulation projecting onto all its variables."""
    if isinstance(obj, ExtendedFormulation):
        return obj
    return ExtendedFormulation(obj, obj.variables)


def block_prefix(i: int) -> str:
    return f"blk{i}."


def intersect(e1: ExtendedFormulation, e2: ExtendedFormulation) -> ExtendedFormulation:
    """Formulation of the intersection of two projected polytopes.

    The projection variables are shared; each operand's auxiliary variables
    get a ``blk0.``/``blk1.`` prefix so they stay disjoint.
    """
    e1, e2 = as_ef(e1), as_ef(e2)
    if e1.projection != e2.projection:
        raise CompositionError("intersect needs identical projection variable lists")
    proj = set(e1.projection)
    variables = list(e1.projection)
    ineqs: list[Row] = []
    eqs: list[Row] = []
    for i, e in enumerate((e1, e2)):
        pre = block_prefix(i)

        def rename(v, pre=pre):
            return v if v in proj else pre + v

        variables.extend(rename(v) for v in e.auxiliary)
        ineqs.extend(r.renamed(rename) for r in e.system.inequalities)
        eqs.extend(r.renamed(rename) for r in e.system.equations)
    return ExtendedFormulation(LinearSystem(tuple(variables), ineqs, eqs), e1.projection)


def fix_coordinates(e: ExtendedFormulation, assignment: Mapping[str, object]) -> ExtendedFormulation:
    """Pin projection variables to constants via equations; they stop being projected."""
    e = as_ef(e)
    proj = set(e.projection)
    for var in assignment:
        if var not in proj:
            raise CompositionError(f"{var!r} is not a projection variable")
    fixes = [eq({var: 1}, value) for var, value in assignment.items()]
    system = e.system.extended(equations=fixes)
    return ExtendedFormulation(system, tuple(v for v in e.projection if v not in assignment))


def add_coordinates(e: ExtendedFormulation, values: Mapping[str, object]) -> ExtendedFormulation:
    """Append new projection coordinates held at constant values by equations."""
    e = as_ef(e)
    clash = [v for v in values if v in e.system]
    if clash:
        raise CompositionError(f"variables already present: {clash}")
    names = tuple(values)
    system = e.system.extended(names, equations=[eq({v: 1}, values[v]) for v in names])
    return ExtendedFormulation(system, e.projection + names)


def enumerate_01_points(s: Formulation, vars: Sequence[str] | None = None,
                        cap: int = DEFAULT_POINT_CAP) -> VertexSet:
    """All 0/1 assignments to ``vars`` that extend to a feasible point of ``s``.

    ``vars`` defaults to the projection (or all variables of a plain system).
    Remaining variables are settled by LP feasibility.
    """
    from .lp import Solver

    ef = as_ef(s)
    vars = tuple(ef.projection if vars is None else vars)
    if len(vars) > cap:
        raise ScaleError(f"{len(vars)} variables exceed the 0/1 enumeration cap of {cap}")
    for v in vars:
        if v not in ef.system:
            raise InputError(f"unknown variable {v!r}")
    system = ef.system
    direct = set(vars) == set(system.variables)
    points = []
    for bits in itertools.product((0, 1), repeat=len(vars)):
        point = dict(zip(vars, map(Fraction, bits)))
        if direct:
            ok = system.satisfies(point)
        else:
            ok = Solver(system.extended(equations=[eq({v: 1}, x) for v, x in point.items()])).feasible
        if ok:
            points.append(tuple(point[v] for v in vars))
    return VertexSet(vars, points)


# -- serialization --------------------------------------------------------

def _row_json(r: Row) -> dict:
    return {"coeffs": {v: format_rational(c) for v, c in r.coeffs.items()},
            "rhs": format_rational(r.rhs)}


def to_json_dict(obj: Formulation) -> dict:
    ef = as_ef(obj)
    s = ef.system
    return {
        "variables": list(s.variables),
        "inequalities": [_row_json(r) for r in s.inequalities],
        "equations": [_row_json(r) for r in s.equations],
        "projection": list(ef.projection),
    }


def to_json(obj: Formulation, indent: int | None = 1) -> str:
    return json.dumps(to_json_dict(obj), indent=indent)


def from_json_dict(data: Mapping) -> ExtendedFormulation:
    try:
        variables = tuple(data["variables"])
        ineqs = [Row.make(r["coeffs"], r["rhs"]) for r in data.get("inequalities", [])]
        eqs = [Row.make(r["coeffs"], r["rhs"]) for r in data.get("equations", [])]
        projection = tuple(data.get("projection", variables))
    except (KeyError, TypeError, AttributeError) as exc:
        raise InputError(f"malformed system JSON: {exc}") from None
    return ExtendedFormulation(LinearSystem(variables, ineqs, eqs), projection)


def from_json(text: str) -> ExtendedFormulation:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from None
    return from_json_dict(data)


def _lp_expr(r: Row, order: Mapping[str, int]) -> str:
    parts = []
    for v in sorted(r.coeffs, key=order.__getitem__):
        c = r.coeffs[v]
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        term = v if mag == 1 else f"{format_rational(mag)} {v}"
        parts.append(f"{sign} {term}")
    if not parts:
        return "0"
    text = " ".join(parts)
    return text[2:] if text.startswith("+ ") else "-" + text[1:]


def to_lptext(obj: Formulation) -> str:
    """CPLEX-LP-like listing without objective. All variables are free."""
    ef = as_ef(obj)
    s = ef.system
    order = {v: i for i, v in enumerate(s.variables)}
    lines = [f"\\ {s.summary()}", "Subject To"]
    for i, r in enumerate(s.inequalities):
        lines.append(f" c{i}: {_lp_expr(r, order)} <= {format_rational(r.rhs)}")
    for k, r in enumerate(s.equations):
        lines.append(f" e{k}: {_lp_expr(r, order)} = {format_rational(r.rhs)}")
    lines.append("Bounds")
    lines.extend(f" {v} free" for v in s.variables)
    lines.append("\\ projection: " + " ".join(ef.projection))
    lines.append("End")
    return "\n".join(lines) + "\n"
