"""Builders for the subgraph, non-empty subgraph, spanning forest and
count-matroid formulations.

Variable names: ``y[e]``/``z[v]`` for subgraph coordinates, ``x[e]`` for
edge coordinates of forest and matroid polytopes, ``w[v]`` for the node
block of a dualized system before it is pinned, ``lam[i]``/``eta[k]`` for
multipliers of inequality/equation rows, ``mu[i]`` for convex multipliers
of a disjunctive union, ``blk<i>.`` prefixes for copied blocks.

Size bookkeeping (inequality rows only):

* ``subgraph_system``: ``2|V| + 3|E|``; faces add equations only.
* ``balas_union``: sum of block sizes plus one ``mu >= 0`` row per block.
* ``polar_dualize``: input size plus one.
* forest: ``size(ne) + |E| + 1``.
* restricted matroid: ``size(ne) + |E| + c + 1``, c = number of capped edges.
* general matroid: ``|E| (2|V| + 3|E|) + |E| + |E| + c + 1``.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence

from .errors import CompositionError, ConstructionError, InputError, PreconditionError, ScaleError
from .graph import Graph, induced_edges, num_components
from .graph import enumerate_spanning_forests
from .lp import Solver
from .polyhedra import (
    ExtendedFormulation,
    LinearSystem,
    Row,
    add_coordinates,
    as_ef,
    block_prefix,
    eq,
    fix_coordinates,
    ge,
    intersect,
    le,
)

EDMONDS_NODE_CAP = 12


def yv(eid) -> str:
    return f"y[{eid}]"


def zv(node) -> str:
    return f"z[{node}]"


def xv(eid) -> str:
    return f"x[{eid}]"


def wv(node) -> str:
    return f"w[{node}]"


def subgraph_vars(G: Graph) -> tuple[str, ...]:
    return tuple(yv(e) for e in G.edge_ids) + tuple(zv(v) for v in G.nodes)


def forest_vars(G: Graph) -> tuple[str, ...]:
    return tuple(xv(e) for e in G.edge_ids)


def _subgraph_rows(G: Graph) -> list[Row]:
    rows = []
    for v in G.nodes:
        rows.append(ge({zv(v): 1}, 0))
        rows.append(le({zv(v): 1}, 1))
    for e in G.edges:
        rows.append(ge({yv(e.id): 1}, 0))
        rows.append(le({yv(e.id): 1, zv(e.u): -1}, 0))
        rows.append(le({yv(e.id): 1, zv(e.v): -1}, 0))
    return rows


def subgraph_system(G: Graph) -> ExtendedFormulation:
    """``0 <= z <= 1`` and ``0 <= y_e <= z_u, z_v``; integral since the
    constraint matrix is totally unimodular."""
    variables = subgraph_vars(G)
    return ExtendedFormulation(LinearSystem(variables, _subgraph_rows(G)), variables)


def face_system(G: Graph, T: Iterable) -> ExtendedFormulation:
    """Face of the subgraph polytope with ``z_v = 1`` for every v in T.

    The pinned ``z`` stay projection coordinates so faces of one graph share
    a projection space.
    """
    T = list(T)
    if not T:
        raise InputError("face_system needs a non-empty node set")
    G.check_nodes(T)
    base = subgraph_system(G)
    system = base.system.extended(equations=[eq({zv(v): 1}, 1) for v in dict.fromkeys(T)])
    return ExtendedFormulation(system, base.projection)


def balas_union(blocks: Sequence[ExtendedFormulation], check_feasible: bool = True) -> ExtendedFormulation:
    """Lifted formulation of the convex hull of a union of polytopes.

    Block i is copied with every row homogenized by a multiplier ``mu[i]``:
    ``A x_i <= mu_i b`` and ``C x_i = mu_i d``. Then ``mu >= 0``,
    ``sum mu = 1`` and the projection is ``x = sum_i x_i``. Blocks must be
    bounded for the homogenized copies to vanish at ``mu_i = 0``.
    """
    blocks = [as_ef(b) for b in blocks]
    if not blocks:
        raise InputError("balas_union needs at least one block")
    projection = blocks[0].projection
    for b in blocks[1:]:
        if b.projection != projection:
            raise CompositionError("blocks must share the projection variable list")
    if check_feasible:
        for i, b in enumerate(blocks):
            if not Solver(b.system).feasible:
                raise ConstructionError(f"block {i} is empty")

    variables = list(projection)
    ineqs: list[Row] = []
    eqs: list[Row] = []
    coupling = {p: {p: Fraction(1)} for p in projection}
    mus = []
    for i, b in enumerate(blocks):
        pre = block_prefix(i)
        mu = f"mu[{i}]"
        mus.append(mu)
        variables.extend(pre + v for v in b.system.variables)
        for r in b.system.inequalities:
            ineqs.append(_homogenize(r, pre, mu))
        for r in b.system.equations:
            eqs.append(_homogenize(r, pre, mu))
        for p in projection:
            coupling[p][pre + p] = Fraction(-1)
    variables.extend(mus)
    ineqs.extend(ge({mu: 1}, 0) for mu in mus)
    eqs.append(eq({mu: 1 for mu in mus}, 1))
    eqs.extend(eq(coupling[p], 0) for p in projection)
    return ExtendedFormulation(LinearSystem(tuple(variables), ineqs, eqs), projection)


def _homogenize(r: Row, prefix: str, mu: str) -> Row:
    coeffs = {prefix + v: c for v, c in r.coeffs.items()}
    if r.rhs:
        coeffs[mu] = -r.rhs
    return Row(coeffs, Fraction(0))


def singleton_family(G: Graph) -> list[tuple]:
    return [(v,) for v in G.nodes]


def edge_family(G: Graph) -> list[tuple]:
    """One member per edge (parallel edges repeat their endpoint pair)."""
    return [e.ends for e in G.edges]


def subgraph_family_ef(G: Graph, family: Sequence[Iterable]) -> ExtendedFormulation:
    """Convex hull of the faces ``z_T = 1`` for T in the family."""
    family = [tuple(T) for T in family]
    if not family:
        raise InputError("node family must be non-empty")
    return balas_union([face_system(G, T) for T in family])


def nonempty_balas_ef(G: Graph) -> ExtendedFormulation:
    return subgraph_family_ef(G, singleton_family(G))


def polar_dualize(q: ExtendedFormulation, gamma, rename: Mapping[str, str] | Callable[[str], str] | None = None,
                  check_feasible: bool = True) -> ExtendedFormulation:
    """Formulation of ``{u : <u, v> <= gamma for all v in proj(q)}``.

    With ``q = {(v, a) : A v + B a <= b, C v + D a = d}`` the output is
    ``A^T lam + C^T eta = u``, ``B^T lam + D^T eta = 0``, ``lam >= 0``,
    ``<b, lam> + <d, eta> <= gamma``. Requires q non-empty.
    """
    q = as_ef(q)
    gamma = Fraction(gamma)
    if rename is None:
        rename = {}
    if isinstance(rename, Mapping):
        mapping = dict(rename)
        rename = lambda v: mapping.get(v, f"u.{v}")  # noqa: E731
    if check_feasible and not Solver(q.system).feasible:
        raise ConstructionError("cannot dualize over an empty polyhedron")

    s = q.system
    lams = [f"lam[{i}]" for i in range(s.inequality_count)]
    etas = [f"eta[{k}]" for k in range(s.equation_count)]
    u = [rename(p) for p in q.projection]
    # column of each original variable in the transposed system
    cols: dict[str, dict[str, Fraction]] = {v: {} for v in s.variables}
    for lam, r in zip(lams, s.inequalities):
        for v, c in r.coeffs.items():
            cols[v][lam] = c
    for eta, r in zip(etas, s.equations):
        for v, c in r.coeffs.items():
            cols[v][eta] = c
    eqs = []
    for p, up in zip(q.projection, u):
        coeffs = dict(cols[p])
        coeffs[up] = Fraction(-1)
        eqs.append(eq(coeffs, 0))
    for a in q.auxiliary:
        eqs.append(eq(cols[a], 0))
    ineqs = [ge({lam: 1}, 0) for lam in lams]
    bound = {lam: r.rhs for lam, r in zip(lams, s.inequalities)}
    bound.update({eta: r.rhs for eta, r in zip(etas, s.equations)})
    ineqs.append(le(bound, gamma))
    variables = tuple(u) + tuple(lams) + tuple(etas)
    if len(set(variables)) != len(variables):
        raise CompositionError("renamed projection variables collide with multipliers")
    return ExtendedFormulation(LinearSystem(variables, ineqs, eqs), tuple(u))


def _pair_with_nodes(G: Graph, ne: ExtendedFormulation, gamma, node_value: Mapping,
                     capped: Sequence[str] = ()) -> ExtendedFormulation:
    # {x : <(x, node_value), (y, z)> <= gamma for all (y, z) in proj(ne)}, x >= 0,
    # plus x_e <= 1 for the edges in ``capped``
    rename = {yv(e): xv(e) for e in G.edge_ids}
    rename.update({zv(v): wv(v) for v in G.nodes})
    if tuple(ne.projection) != subgraph_vars(G):
        raise CompositionError("expected a formulation over the subgraph coordinates (y, z)")
    polar = polar_dualize(ne, gamma, rename)
    pinned = fix_coordinates(polar, {wv(v): node_value[v] for v in G.nodes})
    rows = [ge({xv(e): 1}, 0) for e in G.edge_ids]
    rows.extend(le({xv(e): 1}, 1) for e in capped)
    system = pinned.system.extended(inequalities=rows)
    return ExtendedFormulation(system, pinned.projection)


def capped_edges(spec) -> list[str]:
    """Edges whose count bound m(u) + m(v) - ell exceeds 1.

    For these the pair rows alone allow x_e > 1, so the matroid
    constructions add ``x_e <= 1`` explicitly.
    """
    return [e.id for e in spec.graph.edges if spec.m[e.u] + spec.m[e.v] - spec.ell >= 2]


def martin_forest_ef(G: Graph, ne: ExtendedFormulation | None = None) -> ExtendedFormulation:
    """Spanning forest polytope via the non-empty subgraph polytope.

    ``x >= 0``, ``x(E) = |V| - nu(G)`` and ``x(F) - |S| <= -1`` over every
    vertex of the non-empty subgraph polytope, the latter dualized.
    """
    if ne is None:
        ne = nonempty_balas_ef(G)
    ef = _pair_with_nodes(G, ne, -1, {v: -1 for v in G.nodes})
    total = eq({xv(e): 1 for e in G.edge_ids}, len(G.nodes) - num_components(G))
    return ExtendedFormulation(ef.system.extended(equations=[total]), ef.projection)


def edmonds_forest_system(G: Graph, cap: int = EDMONDS_NODE_CAP) -> LinearSystem:
    """Direct exponential description: ``x >= 0``, ``x(E) = |V| - nu(G)``,
    ``x(E(S)) <= |S| - 1`` for every S spanning at least one edge."""
    n = len(G.nodes)
    if n > cap:
        raise ScaleError(f"{n} nodes exceed the Edmonds enumeration cap of {cap}")
    variables = forest_vars(G)
    ineqs = [ge({xv(e): 1}, 0) for e in G.edge_ids]
    for size in range(1, n + 1):
        for S in itertools.combinations(G.nodes, size):
            inside = [e for e in G.edge_ids if e in induced_edges(G, S)]
            if inside:
                ineqs.append(le({xv(e): 1 for e in inside}, size - 1))
    total = eq({xv(e): 1 for e in G.edge_ids}, n - num_components(G))
    return LinearSystem(variables, ineqs, [total])


def nonempty_outer_description(G: Graph) -> LinearSystem:
    """Subgraph system plus ``y(F) - z(V) <= -1`` for every spanning forest F."""
    rows = _subgraph_rows(G)
    for F in enumerate_spanning_forests(G):
        coeffs = {yv(e): 1 for e in F}
        coeffs.update({zv(v): -1 for v in G.nodes})
        rows.append(le(coeffs, -1))
    return LinearSystem(subgraph_vars(G), rows)


def nonempty_ef_from_forest_ef(G: Graph, fef: ExtendedFormulation) -> ExtendedFormulation:
    """Non-empty subgraph polytope from any spanning forest formulation.

    Append constant coordinates ``-1`` per node to the forest formulation,
    dualize with right-hand side ``-1`` to obtain ``y(F) - z(V) <= -1`` for
    all spanning forests, then intersect with the subgraph system.
    """
    fef = as_ef(fef)
    if tuple(fef.projection) != forest_vars(G):
        raise CompositionError("forest formulation must project onto x[e] in edge order")
    consts = {f"k[{v}]": -1 for v in G.nodes}
    clash = [c for c in consts if c in fef.system]
    if clash:
        raise CompositionError(f"forest formulation already uses {clash}")
    q = add_coordinates(fef, consts)
    rename = {xv(e): yv(e) for e in G.edge_ids}
    rename.update({f"k[{v}]": zv(v) for v in G.nodes})
    polar = polar_dualize(q, -1, rename)
    return intersect(subgraph_system(G), polar)


def _require_spec(spec):
    from .matroid import CountMatroidSpec

    if not isinstance(spec, CountMatroidSpec):
        raise InputError("expected a CountMatroidSpec")


def count_matroid_ef_restricted(spec, ne: ExtendedFormulation | None = None) -> ExtendedFormulation:
    """Independence polytope of a count matroid with ``m(v) >= ell`` for all v,
    as ``x >= 0`` with ``x(F) - m(S) <= -ell`` over the non-empty subgraph
    polytope, plus ``x_e <= 1`` on :func:`capped_edges`."""
    _require_spec(spec)
    G = spec.graph
    low = [v for v in G.nodes if spec.m[v] < spec.ell]
    if low:
        raise PreconditionError(
            f"restricted construction needs m(v) >= ell for every node; fails at {low}"
            " (use the general construction)")
    if ne is None:
        ne = nonempty_balas_ef(G)
    return _pair_with_nodes(G, ne, -spec.ell, {v: -spec.m[v] for v in G.nodes}, capped_edges(spec))


def count_matroid_ef_general(spec) -> ExtendedFormulation:
    """Independence polytope of any count matroid, built over the hull of
    subgraphs whose node set covers at least one edge."""
    _require_spec(spec)
    G = spec.graph
    if not G.edges:
        raise InputError("general construction needs at least one edge")
    sub = subgraph_family_ef(G, edge_family(G))
    return _pair_with_nodes(G, sub, -spec.ell, {v: -spec.m[v] for v in G.nodes}, capped_edges(spec))


# -- exact size formulas ---------------------------------------------------

def subgraph_size(G: Graph) -> int:
    return 2 * len(G.nodes) + 3 * len(G.edges)


def family_size(G: Graph, family_len: int) -> int:
    return family_len * subgraph_size(G) + family_len


def martin_size(G: Graph) -> int:
    return family_size(G, len(G.nodes)) + len(G.edges) + 1


def restricted_matroid_size(spec) -> int:
    G = spec.graph
    return family_size(G, len(G.nodes)) + len(G.edges) + len(capped_edges(spec)) + 1


def general_matroid_size(spec) -> int:
    G = spec.graph
    return family_size(G, len(G.edges)) + len(G.edges) + len(capped_edges(spec)) + 1
