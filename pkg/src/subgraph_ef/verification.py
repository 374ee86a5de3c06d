"""Randomized LP-equivalence, lifting and size audits.

Two formulations are compared by maximizing the same seeded integer
objectives over both and demanding identical exact optima. Against an
enumerated vertex set the optimum of that side is a brute-force maximum.
Together with lifting every enumerated vertex into a formulation this is a
strong randomized check of equality, not a proof.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence, Union

from .constructions import (
    count_matroid_ef_general,
    count_matroid_ef_restricted,
    edmonds_forest_system,
    forest_vars,
    capped_edges,
    general_matroid_size,
    martin_forest_ef,
    martin_size,
    nonempty_balas_ef,
    nonempty_ef_from_forest_ef,
    nonempty_outer_description,
    polar_dualize,
    restricted_matroid_size,
    subgraph_size,
    subgraph_system,
    subgraph_vars,
    xv,
)
from .errors import InputError, PreconditionError, ScaleError
from .graph import Graph, enumerate_forests, enumerate_spanning_forests, induced_edges
from .lp import Solver, Status
from .matroid import (
    CountMatroidSpec,
    enumerate_independent_sets,
    greedy_max_weight,
    is_independent,
    partitionable_into_k_forests,
    rank,
    sparsity_spec,
)
from .polyhedra import ExtendedFormulation, LinearSystem, Row, VertexSet, as_ef, enumerate_01_points, eq, ge, le
from .rational import format_rational

SUBGRAPH_VERTEX_CAP = 20
OBJECTIVE_RANGE = 10

# explicit constants instantiating the asymptotic size bounds
BOUND_CONSTANTS = {
    "family_union": 4,   # size <= 4 |family| (|V| + |E|)
    "forest": 5,         # size <= 5 |V| (|V| + |E|)
    "restricted": 5,     # size <= 5 |V| (|V| + |E|)
    "general": 5,        # size <= 5 |E| (|V| + |E|)
    "additive": 4,       # size(P_ne route) - size(forest EF) <= 4 (|V| + |E|)
}


@dataclass
class Check:
    description: str
    passed: bool
    detail: str = ""
    witness: dict | None = None

    def to_dict(self) -> dict:
        out = {"description": self.description, "status": "pass" if self.passed else "fail"}
        if self.detail:
            out["detail"] = self.detail
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class VerificationReport:
    suite: str
    seed: int = 0
    checks: list[Check] = field(default_factory=list)
    constants: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def counts(self) -> tuple[int, int]:
        ok = sum(c.passed for c in self.checks)
        return ok, len(self.checks) - ok

    def add(self, check: Check) -> Check:
        self.checks.append(check)
        return check

    def extend(self, other: VerificationReport) -> VerificationReport:
        self.checks.extend(other.checks)
        self.constants.update(other.constants)
        return self

    def to_dict(self) -> dict:
        ok, bad = self.counts
        return {
            "suite": self.suite,
            "seed": self.seed,
            "summary": {"passed": ok, "failed": bad},
            "constants": self.constants,
            "checks": [c.to_dict() for c in self.checks],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1)

    def to_text(self) -> str:
        lines = [f"suite {self.suite} (seed {self.seed})"]
        for c in self.checks:
            line = f"  [{'PASS' if c.passed else 'FAIL'}] {c.description}"
            if c.detail:
                line += f" -- {c.detail}"
            lines.append(line)
            if c.witness is not None:
                lines.append(f"         witness: {json.dumps(c.witness)}")
        if self.constants:
            lines.append("  bound constants: " + ", ".join(f"{k}={v}" for k, v in self.constants.items()))
        ok, bad = self.counts
        lines.append(f"  {ok} passed, {bad} failed")
        return "\n".join(lines)


Side = Union[ExtendedFormulation, LinearSystem, VertexSet]


# -- vertex sets -------------------------------------------------------------

def enumerate_subgraph_vertices(G: Graph, family: str | Sequence[Iterable] = "all",
                                cap: int = SUBGRAPH_VERTEX_CAP) -> VertexSet:
    """Points (chi(F), chi(S)) with F inside E(S).

    ``family`` is ``"all"``, ``"nonempty"`` or a node family whose members
    S must contain at least one of.
    """
    if len(G.nodes) + len(G.edges) > cap:
        raise ScaleError(f"|V| + |E| = {len(G.nodes) + len(G.edges)} exceeds the cap of {cap}")
    if isinstance(family, str):
        if family not in ("all", "nonempty"):
            raise InputError(f"unknown vertex mode {family!r}")
        members = None
    else:
        members = [G.check_nodes(T) for T in family]
    ids = G.edge_ids
    points = []
    for bits in itertools.product((0, 1), repeat=len(G.nodes)):
        S = {v for v, b in zip(G.nodes, bits) if b}
        if family == "nonempty" and not S:
            continue
        if members is not None and not any(T <= S for T in members):
            continue
        inside = [i for i, e in enumerate(ids) if e in induced_edges(G, S)]
        for r in range(len(inside) + 1):
            for F in itertools.combinations(inside, r):
                y = [0] * len(ids)
                for i in F:
                    y[i] = 1
                points.append(tuple(y) + bits)
    points.sort()
    return VertexSet(subgraph_vars(G), points)


def edge_set_vectors(G: Graph, sets: Iterable[Iterable[str]]) -> VertexSet:
    ids = G.edge_ids
    points = sorted({tuple(1 if e in F else 0 for e in ids) for F in map(set, sets)})
    return VertexSet(forest_vars(G), points)


# -- core checks -------------------------------------------------------------

def random_objective(dim: int, seed: int, index: int, low: int = -OBJECTIVE_RANGE,
                     high: int = OBJECTIVE_RANGE) -> list[int]:
    rng = random.Random(seed + index)
    return [rng.randint(low, high) for _ in range(dim)]


class _Maximizer:
    def __init__(self, side: Side):
        self.side = side
        if isinstance(side, VertexSet):
            self.variables = side.variables
            self.solver = None
        else:
            ef = as_ef(side)
            self.variables = ef.projection
            self.solver = Solver(ef.system)

    def __call__(self, objective: Sequence[int]):
        if self.solver is None:
            value = self.side.max_value([Fraction(c) for c in objective])
            return ("infeasible", None) if value is None else ("optimal", value)
        out = self.solver.maximize(dict(zip(self.variables, objective)))
        return out.status.value, out.value


def _show(result) -> str:
    status, value = result
    return format_rational(value) if status == "optimal" else status


def random_objective_equivalence(a: Side, b: Side, trials: int = 50, seed: int = 0,
                                 description: str = "LP equivalence", low: int = -OBJECTIVE_RANGE,
                                 high: int = OBJECTIVE_RANGE) -> VerificationReport:
    if trials < 1:
        raise InputError("trials must be at least 1")
    report = VerificationReport("equivalence", seed)
    A, B = _Maximizer(a), _Maximizer(b)
    if tuple(A.variables) != tuple(B.variables):
        report.add(Check(description, False, "projection variable orderings differ",
                         {"a": list(A.variables), "b": list(B.variables)}))
        return report
    for t in range(trials):
        c = random_objective(len(A.variables), seed, t, low, high)
        ra, rb = A(c), B(c)
        if ra != rb:
            report.add(Check(description, False, f"trial {t} of {trials} differs",
                             {"objective": dict(zip(A.variables, c)), "a": _show(ra), "b": _show(rb)}))
            return report
    report.add(Check(description, True, f"{trials}/{trials} objectives agree"))
    return report


def _fixed(ef: ExtendedFormulation, point: Sequence[Fraction]) -> LinearSystem:
    return ef.system.extended(equations=[eq({v: 1}, x) for v, x in zip(ef.projection, point)])


def lift_feasibility_check(ef: Side, vs: VertexSet, description: str = "lift vertices") -> VerificationReport:
    ef = as_ef(ef)
    report = VerificationReport("lift")
    if tuple(ef.projection) != tuple(vs.variables):
        report.add(Check(description, False, "projection variable orderings differ"))
        return report
    for p in vs:
        if not Solver(_fixed(ef, p)).feasible:
            report.add(Check(description, False, "a vertex does not lift",
                             {"point": dict(zip(vs.variables, map(format_rational, p)))}))
            return report
    report.add(Check(description, True, f"{len(vs)} points lift"))
    return report


def point_set_check(ef: Side, expected: VertexSet, description: str) -> VerificationReport:
    """The 0/1 points of ``ef`` (after projection) equal ``expected`` exactly."""
    report = VerificationReport("points")
    got = enumerate_01_points(ef, expected.variables).as_set()
    want = expected.as_set()
    if got == want:
        report.add(Check(description, True, f"{len(got)} points"))
    else:
        extra = sorted(got - want)[:1]
        missing = sorted(want - got)[:1]
        report.add(Check(description, False, f"{len(got)} points vs {len(want)} expected",
                         {"extra": [list(map(str, p)) for p in extra],
                          "missing": [list(map(str, p)) for p in missing]}))
    return report


def size_audit(ef: Side, expected: int, description: str = "size",
               bound: tuple[int, str] | None = None) -> VerificationReport:
    """Exact inequality count, and optionally an instantiated upper bound."""
    size = as_ef(ef).size
    report = VerificationReport("size")
    report.add(Check(f"{description}: size = {expected}", size == expected, f"counted {size}"))
    if bound is not None:
        limit, formula = bound
        report.add(Check(f"{description}: size <= {formula} = {limit}", size <= limit, f"counted {size}"))
    return report


def perturb_rhs(ef: Side, index: int, delta=1) -> ExtendedFormulation:
    """Copy of ``ef`` with inequality ``index`` relaxed by ``delta``."""
    ef = as_ef(ef)
    rows = list(ef.system.inequalities)
    r = rows[index]
    rows[index] = Row(dict(r.coeffs), r.rhs + delta)
    system = LinearSystem(ef.system.variables, rows, ef.system.equations)
    return ExtendedFormulation(system, ef.projection)


def _within(ef: ExtendedFormulation, exact: LinearSystem) -> bool:
    # proj(ef) lies inside {exact}: every row of ``exact`` is valid over ``ef``
    solver = Solver(ef.system)
    for r in exact.inequalities:
        out = solver.maximize(dict(r.coeffs))
        if not out.optimal or out.value > r.rhs:
            return False
    for r in exact.equations:
        for sign in (1, -1):
            out = solver.maximize({v: sign * c for v, c in r.coeffs.items()})
            if not out.optimal or out.value != sign * r.rhs:
                return False
    return True


def classify_mutations(ef: Side, target: VertexSet, exact: LinearSystem, trials: int = 50,
                       seed: int = 0) -> tuple[dict[str, int], int | None]:
    """Relax each inequality by +1 in turn and classify the result.

    ``detected``: the equivalence or 0/1 point check against ``target`` fails.
    ``invariant``: the projection provably did not change, because every row
    of ``exact`` (an exact description of conv(target)) stays valid.
    ``missed``: neither, so the harness let a real change through.
    Returns the tallies and the index of the first missed row.
    """
    ef = as_ef(ef)
    counts = {"detected": 0, "invariant": 0, "missed": 0}
    first_missed = None
    for i in range(ef.size):
        mutant = perturb_rhs(ef, i)
        if not random_objective_equivalence(mutant, target, trials, seed).passed:
            counts["detected"] += 1
        elif _within(mutant, exact):
            counts["invariant"] += 1
        elif not point_set_check(mutant, target, "").passed:
            counts["detected"] += 1
        else:
            counts["missed"] += 1
            if first_missed is None:
                first_missed = i
    return counts, first_missed


def mutation_audit(ef: Side, target: VertexSet, exact: LinearSystem, trials: int = 50, seed: int = 0,
                   description: str = "formulation") -> VerificationReport:
    ef = as_ef(ef)
    counts, missed = classify_mutations(ef, target, exact, trials, seed)
    report = VerificationReport("mutation", seed)
    witness = None
    if missed is not None:
        r = ef.system.inequalities[missed]
        witness = {"row": missed, "rhs": format_rational(r.rhs),
                   "coeffs": {v: format_rational(c) for v, c in r.coeffs.items()}}
    report.add(Check(f"{description}: every +1 relaxation detected or invariant", missed is None,
                     ", ".join(f"{v} {k}" for k, v in counts.items()), witness))
    return report


def matroid_rank_system(spec: CountMatroidSpec) -> LinearSystem:
    """``x >= 0`` and ``x(A) <= r(A)`` for every edge subset A."""
    G = spec.graph
    ids = G.edge_ids
    rows = [ge({xv(e): 1}, 0) for e in ids]
    for size in range(1, len(ids) + 1):
        for A in itertools.combinations(ids, size):
            rows.append(le({xv(e): 1 for e in A}, rank(spec, A)))
    return LinearSystem(forest_vars(G), rows)


def mutation_targets(G: Graph, specs: Iterable[CountMatroidSpec] = ()) -> list[tuple]:
    """(name, formulation, vertex set, exact description) for every construction on G."""
    every = enumerate_subgraph_vertices(G, "all")
    nonempty = enumerate_subgraph_vertices(G, "nonempty")
    forests = edge_set_vectors(G, enumerate_spanning_forests(G))
    outer = nonempty_outer_description(G)
    edmonds = edmonds_forest_system(G)
    sub = subgraph_system(G)
    fef = martin_forest_ef(G)
    out = [
        ("subgraph", sub, every, sub.system),
        ("nonempty-balas", nonempty_balas_ef(G), nonempty, outer),
        ("nonempty-outer", as_ef(outer), nonempty, outer),
        ("nonempty-from-forest", nonempty_ef_from_forest_ef(G, fef), nonempty, outer),
        ("forest-martin", fef, forests, edmonds),
        ("forest-edmonds", as_ef(edmonds), forests, edmonds),
    ]
    for spec in specs:
        vs = _independent_vectors(spec)
        exact = matroid_rank_system(spec)
        if spec.satisfies_node_bound:
            out.append((f"count-restricted {spec.describe()}", count_matroid_ef_restricted(spec), vs, exact))
        if G.edges:
            out.append((f"count-general {spec.describe()}", count_matroid_ef_general(spec), vs, exact))
    return out


def suite_mutation(G: Graph, spec: CountMatroidSpec | None = None, seed: int = 0,
                   trials: int = 50, **_) -> VerificationReport:
    report = VerificationReport("mutation", seed)
    for name, ef, vs, exact in mutation_targets(G, [_default_spec(G, spec)]):
        report.extend(mutation_audit(ef, vs, exact, trials, seed, name))
    return report


# -- suites ------------------------------------------------------------------

def _independent_vectors(spec: CountMatroidSpec) -> VertexSet:
    return edge_set_vectors(spec.graph, enumerate_independent_sets(spec))


def suite_nonempty_outer(G: Graph, seed: int = 0, trials: int = 50, **_) -> VerificationReport:
    report = VerificationReport("nonempty-outer", seed)
    outer = nonempty_outer_description(G)
    balas = nonempty_balas_ef(G)
    nonempty = enumerate_subgraph_vertices(G, "nonempty")
    every = enumerate_subgraph_vertices(G, "all")
    expected_all = sum(2 ** len(induced_edges(G, S))
                       for r in range(len(G.nodes) + 1) for S in itertools.combinations(G.nodes, r))
    sub_points = enumerate_01_points(subgraph_system(G))
    report.add(Check("0/1 points of the subgraph system", len(sub_points) == expected_all
                     and sub_points.as_set() == every.as_set(), f"{len(sub_points)} points, expected {expected_all}"))
    report.extend(point_set_check(outer, nonempty, "0/1 points of the outer description = non-empty subgraphs"))
    origin = {v: 0 for v in subgraph_vars(G)}
    report.add(Check("origin is in the subgraph system", subgraph_system(G).system.satisfies(origin)))
    report.add(Check("origin is cut off by the outer description", not outer.satisfies(origin)))
    report.extend(random_objective_equivalence(outer, balas, trials, seed, "outer description == Balas union"))
    report.extend(random_objective_equivalence(outer, nonempty, trials, seed, "outer description == conv(non-empty subgraphs)"))
    report.extend(lift_feasibility_check(balas, nonempty, "non-empty subgraphs lift into the Balas union"))
    return report


def suite_nonempty_forest(G: Graph, seed: int = 0, trials: int = 50, **_) -> VerificationReport:
    report = VerificationReport("nonempty-forest", seed)
    fef = martin_forest_ef(G)
    ne = nonempty_ef_from_forest_ef(G, fef)
    expected = subgraph_size(G) + fef.size + 1
    report.extend(size_audit(ne, expected, "forest route to P_ne",
                             (fef.size + BOUND_CONSTANTS["additive"] * (len(G.nodes) + len(G.edges)),
                              "size(forest EF) + 4(|V|+|E|)")))
    report.extend(random_objective_equivalence(ne, nonempty_outer_description(G), trials, seed,
                                               "forest route == outer description"))
    report.extend(random_objective_equivalence(ne, nonempty_balas_ef(G), trials, seed,
                                               "forest route == Balas union"))
    report.extend(lift_feasibility_check(ne, enumerate_subgraph_vertices(G, "nonempty"),
                                         "non-empty subgraphs lift into the forest route"))
    report.constants["additive"] = BOUND_CONSTANTS["additive"]
    return report


def suite_martin(G: Graph, seed: int = 0, trials: int = 50, **_) -> VerificationReport:
    report = VerificationReport("martin", seed)
    ef = martin_forest_ef(G)
    forests = edge_set_vectors(G, enumerate_spanning_forests(G))
    report.extend(random_objective_equivalence(ef, forests, trials, seed, "Martin EF == conv(spanning forests)"))
    report.extend(lift_feasibility_check(ef, forests, "spanning forests lift into the Martin EF"))
    report.extend(point_set_check(ef, forests, "0/1 points of the Martin EF = spanning forests"))
    n, m = len(G.nodes), len(G.edges)
    report.extend(size_audit(ef, martin_size(G), "Martin EF",
                             (BOUND_CONSTANTS["forest"] * n * (n + m), "5|V|(|V|+|E|)")))
    report.constants["forest"] = BOUND_CONSTANTS["forest"]
    return report


def suite_edmonds(G: Graph, seed: int = 0, trials: int = 50, **_) -> VerificationReport:
    report = VerificationReport("edmonds-cross", seed)
    ed = edmonds_forest_system(G)
    report.extend(random_objective_equivalence(ed, martin_forest_ef(G), trials, seed,
                                               "Edmonds description == Martin EF"))
    forests = edge_set_vectors(G, enumerate_spanning_forests(G))
    report.extend(point_set_check(ed, forests, "0/1 points of the Edmonds description = spanning forests"))
    return report


def _default_spec(G: Graph, spec: CountMatroidSpec | None) -> CountMatroidSpec:
    return sparsity_spec(G, 1, 1) if spec is None else spec


def _matroid_checks(report, name, ef, spec, seed, trials):
    vs = _independent_vectors(spec)
    report.extend(random_objective_equivalence(ef, vs, trials, seed, f"{name} EF == conv(independent sets)"))
    report.extend(lift_feasibility_check(ef, vs, f"independent sets lift into the {name} EF"))
    report.extend(point_set_check(ef, vs, f"0/1 points of the {name} EF = independent sets"))


def suite_count_restricted(G: Graph, spec: CountMatroidSpec | None = None, seed: int = 0,
                           trials: int = 50, **_) -> VerificationReport:
    spec = _default_spec(G, spec)
    report = VerificationReport("count-restricted", seed)
    if not spec.satisfies_node_bound:
        try:
            count_matroid_ef_restricted(spec)
        except PreconditionError as exc:
            report.add(Check(f"{spec.describe()}: restricted route refuses m(v) < ell", True, str(exc)))
        else:
            report.add(Check(f"{spec.describe()}: restricted route refuses m(v) < ell", False))
        return report
    ef = count_matroid_ef_restricted(spec)
    _matroid_checks(report, "restricted", ef, spec, seed, trials)
    n, m = len(G.nodes), len(G.edges)
    report.extend(size_audit(ef, restricted_matroid_size(spec), "restricted EF",
                             (BOUND_CONSTANTS["restricted"] * n * (n + m), "5|V|(|V|+|E|)")))
    report.constants["restricted"] = BOUND_CONSTANTS["restricted"]
    return report


def suite_count_general(G: Graph, spec: CountMatroidSpec | None = None, seed: int = 0,
                        trials: int = 50, **_) -> VerificationReport:
    spec = _default_spec(G, spec)
    report = VerificationReport("count-general", seed)
    ef = count_matroid_ef_general(spec)
    _matroid_checks(report, "general", ef, spec, seed, trials)
    n, m = len(G.nodes), len(G.edges)
    report.extend(size_audit(ef, general_matroid_size(spec), "general EF",
                             (BOUND_CONSTANTS["general"] * m * (n + m), "5|E|(|V|+|E|)")))
    report.constants["general"] = BOUND_CONSTANTS["general"]
    return report


def suite_count_cross(G: Graph, spec: CountMatroidSpec | None = None, seed: int = 0,
                      trials: int = 50, **_) -> VerificationReport:
    spec = _default_spec(G, spec)
    report = VerificationReport("count-cross", seed)
    general = count_matroid_ef_general(spec)
    sides = [("general", general)]
    if spec.satisfies_node_bound:
        restricted = count_matroid_ef_restricted(spec)
        sides.append(("restricted", restricted))
        report.extend(random_objective_equivalence(restricted, general, trials, seed,
                                                   "restricted EF == general EF"))
    ids = G.edge_ids
    for name, ef in sides:
        solver = Solver(ef.system)
        ok = True
        for t in range(trials):
            c = random_objective(len(ids), seed, t, 0, OBJECTIVE_RANGE)
            w = dict(zip(ids, c))
            greedy = sum(w[e] for e in greedy_max_weight(spec, w))
            lp = solver.maximize(dict(zip(ef.projection, c)))
            if not lp.optimal or lp.value != greedy:
                report.add(Check(f"greedy == LP max over the {name} EF", False, f"trial {t}",
                                 {"objective": w, "greedy": greedy, "lp": str(lp)}))
                ok = False
                break
        if ok:
            report.add(Check(f"greedy == LP max over the {name} EF", True, f"{trials} non-negative objectives"))
    return report


def suite_nash_williams(G: Graph, k: int | None = None, **_) -> VerificationReport:
    report = VerificationReport("nash-williams")
    ks = [1, 2] if k is None else [k]
    ids = G.edge_ids
    for kk in ks:
        spec = sparsity_spec(G, kk, kk)
        bad = None
        for r in range(len(ids) + 1):
            for F in itertools.combinations(ids, r):
                if is_independent(spec, F) != partitionable_into_k_forests(G, F, kk):
                    bad = F
                    break
            if bad is not None:
                break
        report.add(Check(f"({kk},{kk})-sparsity independence == {kk}-forest partitionability",
                         bad is None, f"all {2 ** len(ids)} edge subsets" if bad is None else "",
                         None if bad is None else {"edges": list(bad)}))
    return report


def exchange_violation(spec: CountMatroidSpec):
    """First (A, B) breaking the exchange axiom, or None."""
    family = enumerate_independent_sets(spec)
    members = set(family)
    for A in family:
        for B in family:
            if len(A) < len(B) and not any(A | {e} in members for e in B - A):
                return A, B
    return None


def suite_matroid_axioms(G: Graph, spec: CountMatroidSpec | None = None, **_) -> VerificationReport:
    spec = _default_spec(G, spec)
    report = VerificationReport("matroid-axioms")
    family = enumerate_independent_sets(spec)
    members = set(family)
    report.add(Check(f"{spec.describe()}: empty set independent", frozenset() in members))
    down = all(F - {e} in members for F in family for e in F)
    report.add(Check(f"{spec.describe()}: independent sets closed under subsets", down))
    bad = exchange_violation(spec)
    report.add(Check(f"{spec.describe()}: exchange axiom", bad is None, f"{len(family)} independent sets",
                     None if bad is None else {"A": sorted(bad[0]), "B": sorted(bad[1])}))
    top = max(len(F) for F in family)
    report.add(Check(f"{spec.describe()}: greedy rank = largest independent set", rank(spec) == top,
                     f"rank {rank(spec)}"))
    graphic = set(enumerate_independent_sets(sparsity_spec(G, 1, 1)))
    report.add(Check("(1,1)-sparsity independent sets = forests", graphic == set(enumerate_forests(G)),
                     f"{len(graphic)} forests"))
    return report


def suite_sizes(G: Graph, spec: CountMatroidSpec | None = None, **_) -> VerificationReport:
    spec = _default_spec(G, spec)
    report = VerificationReport("sizes")
    n, m = len(G.nodes), len(G.edges)
    sub = subgraph_system(G)
    report.extend(size_audit(sub, 2 * n + 3 * m, "subgraph system"))
    ne = nonempty_balas_ef(G)
    report.extend(size_audit(ne, n * sub.size + n, "Balas union over singleton faces",
                             (BOUND_CONSTANTS["family_union"] * n * (n + m), "4|V|(|V|+|E|)")))
    report.extend(size_audit(polar_dualize(sub, 1), sub.size + 1, "dualized subgraph system"))
    report.extend(size_audit(polar_dualize(ne, -1), ne.size + 1, "dualized Balas union"))
    fef = martin_forest_ef(G)
    report.extend(size_audit(fef, ne.size + m + 1, "Martin EF",
                             (BOUND_CONSTANTS["forest"] * n * (n + m), "5|V|(|V|+|E|)")))
    report.extend(size_audit(nonempty_ef_from_forest_ef(G, fef), sub.size + fef.size + 1,
                             "forest route to P_ne"))
    c = len(capped_edges(spec))
    if spec.satisfies_node_bound:
        report.extend(size_audit(count_matroid_ef_restricted(spec, ne), ne.size + m + c + 1, "restricted EF",
                                 (BOUND_CONSTANTS["restricted"] * n * (n + m), "5|V|(|V|+|E|)")))
    if m:
        report.extend(size_audit(count_matroid_ef_general(spec), m * sub.size + m + m + c + 1, "general EF",
                                 (BOUND_CONSTANTS["general"] * m * (n + m), "5|E|(|V|+|E|)")))
    report.constants.update(BOUND_CONSTANTS)
    return report


SUITES: dict[str, Callable[..., VerificationReport]] = {
    "nonempty-outer": suite_nonempty_outer,
    "nonempty-forest": suite_nonempty_forest,
    "martin": suite_martin,
    "edmonds-cross": suite_edmonds,
    "count-restricted": suite_count_restricted,
    "count-general": suite_count_general,
    "count-cross": suite_count_cross,
    "nash-williams": suite_nash_williams,
    "matroid-axioms": suite_matroid_axioms,
    "sizes": suite_sizes,
    "mutation": suite_mutation,
}

# expensive and graph-sensitive, so "all" leaves it out
NOT_IN_ALL = {"mutation"}


def run_suite(name: str, G: Graph, spec: CountMatroidSpec | None = None, seed: int = 0,
              trials: int = 50, k: int | None = None) -> VerificationReport:
    if name == "all":
        report = VerificationReport("all", seed)
        for name, suite in SUITES.items():
            if name in NOT_IN_ALL:
                continue
            report.extend(suite(G, spec=spec, seed=seed, trials=trials, k=k))
        return report
    if name not in SUITES:
        raise InputError(f"unknown suite {name!r}; choose from {sorted(SUITES) + ['all']}")
    report = SUITES[name](G, spec=spec, seed=seed, trials=trials, k=k)
    report.seed = seed
    return report
