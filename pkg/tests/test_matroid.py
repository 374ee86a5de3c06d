import itertools
import random

import pytest

from subgraph_ef import corpus
from subgraph_ef.errors import InputError, SpecError
from subgraph_ef.graph import enumerate_forests, kruskal_max_weight_spanning_forest, edge_weight
from subgraph_ef.matroid import (
    enumerate_independent_sets,
    greedy_max_weight,
    is_independent,
    load_spec,
    make_count_matroid,
    partitionable_into_k_forests,
    rank,
    sparsity_spec,
)

from conftest import CORPUS


def brute_independent(spec, F):
    """Check every node subset S directly from the definition."""
    G = spec.graph
    F = set(F)
    for r in range(1, len(G.nodes) + 1):
        for S in itertools.combinations(G.nodes, r):
            inside = sum(1 for e in G.edges if e.id in F and e.u in S and e.v in S)
            if inside > max(sum(spec.m[v] for v in S) - spec.ell, 0):
                return False
    return True


def test_make_count_matroid(K3, P3):
    assert make_count_matroid(K3, 1, 1).ell == 1
    with pytest.raises(SpecError) as exc:
        make_count_matroid(K3, 1, 3)
    assert set(exc.value.witnesses) == set(K3.edge_ids)
    make_count_matroid(P3, {"a": 0, "b": 2, "c": 1}, 2)
    with pytest.raises(SpecError):
        make_count_matroid(P3, {"a": 0, "b": 1, "c": 1}, 2)
    with pytest.raises(SpecError):
        make_count_matroid(P3, {"a": -1, "b": 2, "c": 1}, 0)


def test_sparsity_spec(K3, K4):
    assert sparsity_spec(K4, 2, 3).m == {v: 2 for v in K4.nodes}
    with pytest.raises(SpecError):
        sparsity_spec(K3, 1, 3)


def test_load_spec(P3):
    spec = load_spec(P3, '{"ell": 2, "m": {"a": 0, "b": 2, "c": 1}}')
    assert spec.m == {"a": 0, "b": 2, "c": 1}
    assert load_spec(P3, '{"ell": 1, "m": 1}').m == {"a": 1, "b": 1, "c": 1}
    with pytest.raises(InputError):
        load_spec(P3, '{"m": 1}')


def test_independence_examples(K3, K4):
    graphic = sparsity_spec(K3, 1, 1)
    assert not is_independent(graphic, K3.edge_ids)
    rigid = sparsity_spec(K4, 2, 3)
    assert all(is_independent(rigid, F) for F in itertools.combinations(K4.edge_ids, 5))
    assert not is_independent(rigid, K4.edge_ids)
    assert is_independent(rigid, ())


def test_enumeration_counts(K3, K4):
    assert set(enumerate_independent_sets(sparsity_spec(K3, 1, 1))) == set(enumerate_forests(K3))
    assert len(enumerate_independent_sets(sparsity_spec(K3, 2, 2))) == 8
    # all 57 subsets of size <= 4 plus the six 5-sets
    assert len(enumerate_independent_sets(sparsity_spec(K4, 2, 3))) == 63


def test_rank(K3, K4):
    assert rank(sparsity_spec(K4, 2, 3)) == 5
    assert rank(sparsity_spec(K3, 1, 1)) == 2
    assert rank(sparsity_spec(K3, 1, 1), ["a-b"]) == 1


@pytest.mark.parametrize("name", sorted(corpus.corpus_specs()))
def test_oracle_matches_definition(name):
    spec = corpus.corpus_specs()[name]
    ids = spec.graph.edge_ids
    want = {frozenset(F) for r in range(len(ids) + 1)
            for F in itertools.combinations(ids, r) if brute_independent(spec, F)}
    assert set(enumerate_independent_sets(spec)) == want


def test_small_general_examples(K3, P3):
    assert enumerate_independent_sets(sparsity_spec(K3, 1, 2)) == [frozenset()]
    path = make_count_matroid(P3, {"a": 0, "b": 2, "c": 1}, 2)
    assert set(enumerate_independent_sets(path)) == {frozenset(), frozenset({"b-c"})}


def test_greedy(K3):
    w = {"a-b": 3, "a-c": 2, "b-c": 1}
    F = greedy_max_weight(sparsity_spec(K3, 1, 1), w)
    assert edge_weight(w, F) == 5 == edge_weight(w, kruskal_max_weight_spanning_forest(K3, w))


@pytest.mark.parametrize("name", sorted(corpus.corpus_specs()))
def test_greedy_is_optimal(name):
    spec = corpus.corpus_specs()[name]
    family = enumerate_independent_sets(spec)
    for seed in range(10):
        rng = random.Random(seed)
        w = {e: rng.randint(0, 9) for e in spec.graph.edge_ids}
        assert edge_weight(w, greedy_max_weight(spec, w)) == max(edge_weight(w, F) for F in family)


def test_partition_examples(K3):
    assert partitionable_into_k_forests(K3, K3.edge_ids, 2)
    assert not partitionable_into_k_forests(K3, K3.edge_ids, 1)
    assert partitionable_into_k_forests(K3, (), 1)
    assert partitionable_into_k_forests(K3, (), 3)


def test_partition_parallel_edges():
    G = corpus.triangle_parallel()
    assert not partitionable_into_k_forests(G, ["a-b", "a-b.1"], 1)
    assert partitionable_into_k_forests(G, G.edge_ids, 2)
