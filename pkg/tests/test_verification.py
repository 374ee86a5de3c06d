import json

import pytest

from subgraph_ef import corpus
from subgraph_ef.constructions import (
    count_matroid_ef_general,
    martin_forest_ef,
    nonempty_outer_description,
    subgraph_system,
)
from subgraph_ef.errors import InputError
from subgraph_ef.graph import enumerate_forests, enumerate_spanning_forests
from subgraph_ef.matroid import sparsity_spec
from subgraph_ef.polyhedra import VertexSet, as_ef
from subgraph_ef.verification import (
    BOUND_CONSTANTS,
    classify_mutations,
    edge_set_vectors,
    enumerate_subgraph_vertices,
    lift_feasibility_check,
    perturb_rhs,
    random_objective,
    random_objective_equivalence,
    run_suite,
    size_audit,
)


def test_vertex_counts(edge, K3):
    assert len(enumerate_subgraph_vertices(edge, "all")) == 5
    assert len(enumerate_subgraph_vertices(edge, "nonempty")) == 4
    assert len(enumerate_subgraph_vertices(K3, "all")) == 18
    assert len(enumerate_subgraph_vertices(K3, "nonempty")) == 17
    assert len(enumerate_subgraph_vertices(K3, [("a", "b"), ("a", "c"), ("b", "c")])) == 14


def test_random_objective_is_seeded():
    assert random_objective(5, 3, 2) == random_objective(5, 3, 2)
    assert random_objective(5, 3, 2) == random_objective(5, 4, 1)
    assert all(-10 <= c <= 10 for c in random_objective(50, 0, 0))


def test_equivalence_passes(K3):
    sub = subgraph_system(K3)
    report = random_objective_equivalence(sub, sub, 20, 0)
    assert report.passed
    forests = edge_set_vectors(K3, enumerate_spanning_forests(K3))
    report = random_objective_equivalence(martin_forest_ef(K3), forests, 50, 0)
    assert report.passed and "50/50" in report.checks[0].detail


def test_equivalence_exposes_origin(K3):
    report = random_objective_equivalence(subgraph_system(K3), enumerate_subgraph_vertices(K3, "nonempty"), 50, 0)
    assert not report.passed
    w = report.checks[0].witness
    # the origin wins on the subgraph side and is missing on the other
    assert w["a"] == "0"
    assert int(w["b"]) < 0


def test_equivalence_mismatched_variables(K3):
    report = random_objective_equivalence(subgraph_system(K3), martin_forest_ef(K3), 5, 0)
    assert not report.passed and "orderings" in report.checks[0].detail


def test_equivalence_needs_trials(K3):
    with pytest.raises(InputError):
        random_objective_equivalence(subgraph_system(K3), subgraph_system(K3), 0, 0)


def test_lift_checks(K3):
    fef = martin_forest_ef(K3)
    assert lift_feasibility_check(fef, edge_set_vectors(K3, enumerate_spanning_forests(K3))).passed
    forests = edge_set_vectors(K3, enumerate_forests(K3))
    assert lift_feasibility_check(count_matroid_ef_general(sparsity_spec(K3, 1, 1)), forests).passed
    cycle = VertexSet(fef.projection, ((1, 1, 1),))
    report = lift_feasibility_check(fef, cycle)
    assert not report.passed and report.checks[0].witness["point"] == {v: "1" for v in fef.projection}


def test_size_audit(K3, edge):
    assert size_audit(martin_forest_ef(K3), 52).passed
    assert not size_audit(martin_forest_ef(K3), 51).passed
    from subgraph_ef.constructions import polar_dualize
    assert size_audit(polar_dualize(subgraph_system(edge), 1), 8).passed
    report = size_audit(subgraph_system(K3), 15, bound=(14, "too small"))
    assert not report.passed and report.counts == (1, 1)


def test_perturb_rhs_copies(K3):
    sub = subgraph_system(K3)
    mutant = perturb_rhs(sub, 3)
    assert mutant.system.inequalities[3].rhs == sub.system.inequalities[3].rhs + 1
    assert sub.system.inequalities[3].rhs == 1


def test_mutation_classification(P3):
    outer = nonempty_outer_description(P3)
    counts, missed = classify_mutations(as_ef(outer), enumerate_subgraph_vertices(P3, "nonempty"), outer)
    assert missed is None
    assert counts["detected"] > 0
    assert sum(counts.values()) == outer.inequality_count


def test_mutation_of_redundant_row_is_invariant(edge):
    # z_a >= 0 is implied by y >= 0 and y <= z_a, so relaxing it changes nothing
    sub = subgraph_system(edge)
    counts, missed = classify_mutations(sub, enumerate_subgraph_vertices(edge, "all"), sub.system)
    assert counts == {"detected": 5, "invariant": 2, "missed": 0}


def test_reports_are_deterministic(K3):
    a = run_suite("nonempty-outer", K3, seed=7, trials=10).to_json()
    b = run_suite("nonempty-outer", K3, seed=7, trials=10).to_json()
    assert a == b and json.loads(a)["seed"] == 7


def test_sizes_suite_records_constants(K3):
    report = run_suite("sizes", K3)
    assert report.passed
    assert report.constants == BOUND_CONSTANTS


def test_all_on_single_edge():
    report = run_suite("all", corpus.single_edge())
    assert report.passed, report.to_text()


def test_unknown_suite(K3):
    with pytest.raises(InputError):
        run_suite("nope", K3)
