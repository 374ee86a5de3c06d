import pytest

from subgraph_ef import corpus
from subgraph_ef.constructions import nonempty_outer_description, subgraph_system, zv
from subgraph_ef.errors import CompositionError, InputError, ScaleError
from subgraph_ef.lp import is_feasible, solve_max
from subgraph_ef.polyhedra import (
    ExtendedFormulation,
    LinearSystem,
    VertexSet,
    add_coordinates,
    as_ef,
    enumerate_01_points,
    eq,
    fix_coordinates,
    from_json,
    ge,
    intersect,
    le,
    to_json,
    to_lptext,
)
from subgraph_ef.rational import rat


def halfspace(row):
    return as_ef(LinearSystem(("x",), [row]))


def test_intersect_segment():
    seg = intersect(halfspace(le({"x": 1}, 1)), halfspace(ge({"x": 1}, 0)))
    assert seg.size == 2
    assert solve_max(seg, [1]).value == 1
    assert solve_max(seg, [-1]).value == 0


def test_intersect_keeps_auxiliaries_apart():
    a = ExtendedFormulation(LinearSystem(("x", "t"), [le({"x": 1, "t": -1}, 0), le({"t": 1}, 2)]), ("x",))
    b = ExtendedFormulation(LinearSystem(("x", "t"), [le({"x": -1, "t": 1}, 0), ge({"t": 1}, 1)]), ("x",))
    both = intersect(a, b)
    assert both.size == a.size + b.size
    assert len(both.auxiliary) == 2
    assert solve_max(both, {"x": 1}).value == 2
    assert solve_max(both, {"x": -1}).value == -1


def test_intersect_projection_mismatch():
    other = as_ef(LinearSystem(("w",), [le({"w": 1}, 1)]))
    with pytest.raises(CompositionError):
        intersect(halfspace(le({"x": 1}, 1)), other)


def test_fix_coordinates_face(edge):
    sub = subgraph_system(edge)
    face = fix_coordinates(sub, {zv("a"): 1})
    assert zv("a") not in face.projection
    assert face.size == sub.size
    assert len(enumerate_01_points(face)) == 3


def test_fix_all_coordinates(edge):
    sub = subgraph_system(edge)
    point = fix_coordinates(sub, {v: 1 for v in sub.projection})
    assert point.projection == () and is_feasible(point)
    bad = fix_coordinates(sub, {"y[a-b]": 1, zv("a"): 0, zv("b"): 1})
    assert not is_feasible(bad)


def test_fix_unknown_variable(edge):
    with pytest.raises(CompositionError):
        fix_coordinates(subgraph_system(edge), {"nope": 1})


def test_add_coordinates(edge):
    e = add_coordinates(subgraph_system(edge), {"k": -1})
    assert e.projection[-1] == "k"
    assert solve_max(e, {"k": 1}).value == -1
    assert solve_max(e, {"k": -1}).value == 1


@pytest.mark.parametrize("build, count", [
    (lambda: subgraph_system(corpus.single_edge()), 5),
    (lambda: subgraph_system(corpus.triangle()), 18),
    (lambda: nonempty_outer_description(corpus.single_edge()), 4),
    (lambda: nonempty_outer_description(corpus.triangle()), 17),
])
def test_01_point_counts(build, count):
    assert len(enumerate_01_points(build())) == count


def test_01_points_of_projection(K3):
    # only y-coordinates: every edge subset is the y-part of some subgraph
    sub = subgraph_system(K3)
    ys = [v for v in sub.projection if v.startswith("y")]
    assert len(enumerate_01_points(sub, ys)) == 8


def test_01_points_cap():
    s = LinearSystem(tuple(f"v{i}" for i in range(21)), [])
    with pytest.raises(ScaleError):
        enumerate_01_points(s)


def test_vertex_set_validation():
    with pytest.raises(InputError):
        VertexSet(("a",), ((2,),))
    with pytest.raises(InputError):
        VertexSet(("a",), ((1,), (1,)))
    assert VertexSet(("a",), ()).max_value([1]) is None


def test_inequality_count_ignores_equations(K3):
    sub = subgraph_system(K3)
    s = sub.system.extended(equations=[eq({zv("a"): 1}, 1)])
    assert s.inequality_count == sub.size == 15
    assert s.equation_count == 1


def test_json_roundtrip(K3):
    sub = fix_coordinates(subgraph_system(K3), {zv("a"): rat(1, 2)})
    back = from_json(to_json(sub))
    assert back == sub
    assert back.system.equations[0].rhs == rat(1, 2)


def test_json_rejects_garbage():
    with pytest.raises(InputError):
        from_json("{not json")
    with pytest.raises(InputError):
        from_json('{"inequalities": []}')


def test_lptext(edge):
    text = to_lptext(subgraph_system(edge))
    assert "Subject To" in text and "End" in text
    assert "y[a-b] - z[a] <= 0" in text
    assert "free" in text
