import pytest

from subgraph_ef import corpus
from subgraph_ef.constructions import (
    balas_union,
    capped_edges,
    count_matroid_ef_general,
    count_matroid_ef_restricted,
    edge_family,
    edmonds_forest_system,
    face_system,
    family_size,
    martin_forest_ef,
    martin_size,
    nonempty_balas_ef,
    nonempty_ef_from_forest_ef,
    nonempty_outer_description,
    polar_dualize,
    singleton_family,
    subgraph_family_ef,
    subgraph_system,
    xv,
    yv,
    zv,
)
from subgraph_ef.errors import ConstructionError, InputError, PreconditionError
from subgraph_ef.lp import Solver, solve_max
from subgraph_ef.matroid import make_count_matroid, sparsity_spec
from subgraph_ef.polyhedra import LinearSystem, as_ef, enumerate_01_points, eq, fix_coordinates, ge, le
from subgraph_ef.verification import random_objective_equivalence

from conftest import CORPUS


def point(*values):
    names = tuple(f"v{i}" for i in range(len(values)))
    return as_ef(LinearSystem(names, [], [eq({n: 1}, x) for n, x in zip(names, values)]))


def box(*names, lo=0, hi=1):
    rows = [ge({n: 1}, lo) for n in names] + [le({n: 1}, hi) for n in names]
    return as_ef(LinearSystem(tuple(names), rows))


def test_subgraph_sizes(edge, K3):
    assert subgraph_system(edge).size == 7
    assert subgraph_system(K3).size == 15


def test_face_system(edge, K3):
    f = face_system(edge, ["a"])
    assert len(enumerate_01_points(f)) == 3
    assert len(enumerate_01_points(face_system(K3, K3.nodes))) == 8
    fa = face_system(K3, ["a"])
    assert (fa.size, fa.system.equation_count) == (15, 1)
    with pytest.raises(InputError):
        face_system(K3, [])
    with pytest.raises(InputError):
        face_system(K3, ["q"])


def test_balas_union_segment():
    seg = balas_union([point(0), point(1)])
    assert seg.size == 2
    s = Solver(seg.system)
    assert s.maximize({"v0": 1}).value == 1
    assert s.maximize({"v0": -1}).value == 0


def test_balas_union_errors():
    with pytest.raises(InputError):
        balas_union([])
    empty = as_ef(LinearSystem(("v0",), [le({"v0": 1}, 0), ge({"v0": 1}, 1)]))
    with pytest.raises(ConstructionError):
        balas_union([point(0), empty])


def test_balas_union_singletons_single_edge(edge):
    ne = nonempty_balas_ef(edge)
    s = Solver(ne.system)
    assert s.maximize({yv("a-b"): 1, zv("a"): 1, zv("b"): 1}).value == 3
    assert -s.maximize({zv("a"): -1, zv("b"): -1}).value == 1
    assert len(enumerate_01_points(ne)) == 4


def test_family_point_counts(edge, K3):
    assert len(enumerate_01_points(subgraph_family_ef(edge, [("a", "b")]))) == 2
    assert len(enumerate_01_points(subgraph_family_ef(K3, edge_family(K3)))) == 14
    assert len(singleton_family(K3)) == 3


def test_balas_size_law():
    for name in ("K3", "K4", "C5"):
        G = CORPUS[name]
        fam = singleton_family(G)
        ef = subgraph_family_ef(G, fam)
        assert ef.size == sum(face_system(G, T).size for T in fam) + len(fam)
    assert subgraph_family_ef(corpus.triangle(), singleton_family(corpus.triangle())).size == 48


def test_polar_examples():
    p = polar_dualize(point(1), 2)
    s = Solver(p.system)
    assert s.maximize({"u.v0": 1}).value == 2
    assert s.maximize({"u.v0": -1}).status.value == "unbounded"

    p = polar_dualize(box("v0"), 1)
    for u, inside in ((-5, True), (0, True), (1, True), (2, False)):
        assert Solver(fix_coordinates(p, {"u.v0": u}).system).feasible is inside

    simplex = balas_union([point(1, 0), point(0, 1)])
    dual = polar_dualize(simplex, 1, {"v0": "v0", "v1": "v1"})
    upper = as_ef(LinearSystem(("v0", "v1"), [le({"v0": 1}, 1), le({"v1": 1}, 1)]))
    # both are unbounded for any negative weight, so compare on non-negative ones
    report = random_objective_equivalence(dual, upper, 50, 0, low=0)
    assert report.passed


def test_polar_size_law(K3):
    for q in (subgraph_system(K3), nonempty_balas_ef(K3), point(3, 4)):
        assert polar_dualize(q, 1).size == q.size + 1
    assert polar_dualize(subgraph_system(corpus.single_edge()), 5).size == 8


def test_polar_of_empty_set():
    empty = as_ef(LinearSystem(("v0",), [le({"v0": 1}, 0), ge({"v0": 1}, 1)]))
    with pytest.raises(ConstructionError):
        polar_dualize(empty, 1)


def test_martin_sizes(K3):
    fef = martin_forest_ef(K3)
    assert fef.size == martin_size(K3) == 52
    assert family_size(K3, 3) == 48
    out = solve_max(fef, {xv(e): 1 for e in K3.edge_ids})
    assert out.value == 2


def test_martin_rejects_cycle(K3):
    fef = martin_forest_ef(K3)
    assert not Solver(fix_coordinates(fef, {xv(e): 1 for e in K3.edge_ids}).system).feasible


def test_edmonds_rows(K3, edge):
    ed = edmonds_forest_system(K3)
    assert (ed.inequality_count, ed.equation_count) == (7, 1)
    assert sum(1 for r in ed.inequalities if r.rhs == 1) == 3
    assert sum(1 for r in ed.inequalities if r.rhs == 2) == 1
    single = edmonds_forest_system(edge)
    assert solve_max(single, [1]).value == 1 and solve_max(single, [-1]).value == -1


def test_outer_description_rows(edge, K3):
    assert nonempty_outer_description(edge).inequality_count == 8
    assert nonempty_outer_description(K3).inequality_count == 18


def test_forest_route_size(K3):
    fef = martin_forest_ef(K3)
    ne = nonempty_ef_from_forest_ef(K3, fef)
    assert ne.size == 15 + 52 + 1
    # any forest formulation works, e.g. the Edmonds description
    ne2 = nonempty_ef_from_forest_ef(K3, as_ef(edmonds_forest_system(K3)))
    assert ne2.size == 15 + 7 + 1
    assert random_objective_equivalence(ne, ne2, 30, 3).passed


@pytest.mark.parametrize("spec, value", [
    (sparsity_spec(corpus.triangle(), 1, 1), 2),
    (sparsity_spec(corpus.triangle(), 2, 2), 3),
])
def test_restricted_examples(spec, value):
    ef = count_matroid_ef_restricted(spec)
    assert solve_max(ef, {xv(e): 1 for e in spec.graph.edge_ids}).value == value


def test_restricted_refuses_low_m(K4):
    with pytest.raises(PreconditionError, match="m\\(v\\) >= ell"):
        count_matroid_ef_restricted(sparsity_spec(K4, 2, 3))


def test_general_rigidity_k4(K4):
    ef = count_matroid_ef_general(sparsity_spec(K4, 2, 3))
    assert solve_max(ef, {xv(e): 1 for e in K4.edge_ids}).value == 5


def test_general_nonuniform_path(P3):
    spec = make_count_matroid(P3, {"a": 0, "b": 2, "c": 1}, 2)
    ef = count_matroid_ef_general(spec)
    s = Solver(ef.system)
    # only {b-c} is independent besides the empty set
    assert s.maximize({xv("a-b"): 1}).value == 0
    assert s.maximize({xv("b-c"): 1}).value == 1


def test_capped_edges(K3):
    assert capped_edges(sparsity_spec(K3, 1, 1)) == []
    assert capped_edges(sparsity_spec(K3, 2, 2)) == list(K3.edge_ids)


def test_general_needs_edges():
    from subgraph_ef.graph import Graph
    G = Graph(("a", "b"), ())
    with pytest.raises(InputError):
        count_matroid_ef_general(sparsity_spec(G, 1, 1))
