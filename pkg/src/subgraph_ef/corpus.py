"""Small graphs and count-matroid specs used by the verification suites."""

from __future__ import annotations

from .graph import Graph
from .matroid import CountMatroidSpec, make_count_matroid, sparsity_spec


def single_edge() -> Graph:
    return Graph.from_edges([("a", "b")])


def path3() -> Graph:
    return Graph.from_edges([("a", "b"), ("b", "c")])


def triangle() -> Graph:
    return Graph.from_edges([("a", "b"), ("a", "c"), ("b", "c")])


def star3() -> Graph:
    return Graph.from_edges([("o", "a"), ("o", "b"), ("o", "c")])


def cycle5() -> Graph:
    return Graph.from_edges([("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("e", "a")])


def k4() -> Graph:
    return Graph.from_edges([("a", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"), ("c", "d")])


def k4_minus_edge() -> Graph:
    return Graph.from_edges([("a", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")])


def triangle_plus_edge() -> Graph:
    """Two components: a triangle and a disjoint edge."""
    return Graph.from_edges([("a", "b"), ("a", "c"), ("b", "c"), ("d", "e")])


def triangle_parallel() -> Graph:
    """Triangle with the edge ab doubled."""
    return Graph.from_edges([("a", "b"), ("a", "c"), ("b", "c"), ("a", "b")])


GRAPHS = {
    "single_edge": single_edge,
    "P3": path3,
    "K3": triangle,
    "K1_3": star3,
    "C5": cycle5,
    "K4": k4,
    "K4-e": k4_minus_edge,
    "K3+K2": triangle_plus_edge,
    "K3_parallel": triangle_parallel,
}


def corpus_graphs() -> dict[str, Graph]:
    return {name: build() for name, build in GRAPHS.items()}


def restricted_specs() -> dict[str, CountMatroidSpec]:
    """Specs with m(v) >= ell everywhere."""
    K3 = triangle()
    P3 = path3()
    return {
        "(1,1) on K3": sparsity_spec(K3, 1, 1),
        "(2,2) on K3": sparsity_spec(K3, 2, 2),
        "m=(2,2,3),ell=2 on P3": make_count_matroid(P3, {"a": 2, "b": 2, "c": 3}, 2),
        "(2,1) on K4": sparsity_spec(k4(), 2, 1),
        "(1,1) on K3_parallel": sparsity_spec(triangle_parallel(), 1, 1),
        "(2,2) on K3+K2": sparsity_spec(triangle_plus_edge(), 2, 2),
    }


def general_only_specs() -> dict[str, CountMatroidSpec]:
    """Specs where some m(v) < ell, so only the general construction applies."""
    return {
        "(2,3) on K4": sparsity_spec(k4(), 2, 3),
        "(1,2) on K3": sparsity_spec(triangle(), 1, 2),
        "(1,2) on C5": sparsity_spec(cycle5(), 1, 2),
        "(2,3) on K4-e": sparsity_spec(k4_minus_edge(), 2, 3),
        "(2,3) on K3_parallel": sparsity_spec(triangle_parallel(), 2, 3),
        "m=(0,2,1),ell=2 on P3": make_count_matroid(path3(), {"a": 0, "b": 2, "c": 1}, 2),
    }


def corpus_specs() -> dict[str, CountMatroidSpec]:
    out = restricted_specs()
    out.update(general_only_specs())
    return out
