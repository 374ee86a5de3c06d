"""Count matroids on graphs and their brute-force oracles.

An edge set F is independent in the count matroid ``M(m, ell)`` when
``|F & E(S)| <= max(m(S) - ell, 0)`` for every node set S. This is a matroid
whenever ``m(u) + m(v) >= ell`` on every edge; constant ``m = k`` gives the
(k, ell)-sparsity matroids and (1, 1) is the graphic matroid.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import InputError, ScaleError, SpecError
from .graph import DEFAULT_EDGE_CAP, Graph, UnionFind

INDEPENDENCE_NODE_CAP = 16
PARTITION_EDGE_CAP = 15


@dataclass(frozen=True)
class CountMatroidSpec:
    graph: Graph
    m: Mapping
    ell: int

    @property
    def satisfies_node_bound(self) -> bool:
        """``m(v) >= ell`` for every node: the restricted construction applies."""
        return all(self.m[v] >= self.ell for v in self.graph.nodes)

    def describe(self) -> str:
        values = set(self.m.values())
        if len(values) == 1:
            return f"({values.pop()},{self.ell})-sparsity"
        return f"count matroid m={[self.m[v] for v in self.graph.nodes]}, ell={self.ell}"


def make_count_matroid(G: Graph, m: Mapping | int, ell: int) -> CountMatroidSpec:
    if isinstance(m, int):
        m = {v: m for v in G.nodes}
    missing = [v for v in G.nodes if v not in m]
    if missing:
        raise SpecError(f"m is undefined on nodes {missing}", missing)
    extra = [v for v in m if v not in set(G.nodes)]
    if extra:
        raise SpecError(f"m is defined on unknown nodes {extra}", extra)
    for v in G.nodes:
        if not isinstance(m[v], int) or isinstance(m[v], bool) or m[v] < 0:
            raise SpecError(f"m({v}) = {m[v]!r} is not a non-negative integer", [v])
    if isinstance(ell, bool) or not isinstance(ell, int):
        raise SpecError(f"ell = {ell!r} is not an integer")
    bad = [e.id for e in G.edges if m[e.u] + m[e.v] < ell]
    if bad:
        raise SpecError(f"m(u) + m(v) >= ell fails on edges {bad}", bad)
    return CountMatroidSpec(G, {v: m[v] for v in G.nodes}, ell)


def sparsity_spec(G: Graph, k: int, ell: int) -> CountMatroidSpec:
    if k < 0:
        raise SpecError(f"k = {k} must be non-negative")
    if 2 * k < ell:
        raise SpecError(f"(k, ell) = ({k}, {ell}) violates 2k >= ell")
    return make_count_matroid(G, k, ell)


def load_spec(G: Graph, text: str) -> CountMatroidSpec:
    """Parse ``{"ell": int, "m": int | {node: int}}``; node keys are matched
    against the graph's node ids by their string form."""
    try:
        data = json.loads(text)
        ell = data["ell"]
        m = data["m"]
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise InputError(f"malformed matroid spec: {exc}") from None
    if isinstance(m, dict):
        by_name = {str(v): v for v in G.nodes}
        try:
            m = {by_name[str(k)]: val for k, val in m.items()}
        except KeyError as exc:
            raise SpecError(f"m names unknown node {exc}") from None
    return make_count_matroid(G, m, ell)


class _Oracle:
    """Bitmask form of the count condition, cached per spec."""

    def __init__(self, spec: CountMatroidSpec):
        G = spec.graph
        n = len(G.nodes)
        if n > INDEPENDENCE_NODE_CAP:
            raise ScaleError(f"{n} nodes exceed the independence cap of {INDEPENDENCE_NODE_CAP}")
        bit = {v: 1 << i for i, v in enumerate(G.nodes)}
        self.edge_mask = {e.id: bit[e.u] | bit[e.v] for e in G.edges}
        mv = [spec.m[v] for v in G.nodes]
        self.capacity = []
        for S in range(1 << n):
            total = sum(mv[i] for i in range(n) if S >> i & 1)
            self.capacity.append(max(total - spec.ell, 0))

    def independent(self, F: Iterable[str]) -> bool:
        masks = [self.edge_mask[e] for e in F]
        if not masks:
            return True
        for S, cap in enumerate(self.capacity):
            if len(masks) > cap:
                count = sum(1 for em in masks if em & S == em)
                if count > cap:
                    return False
        return True


def _oracle(spec: CountMatroidSpec) -> _Oracle:
    oracle = spec.__dict__.get("_oracle")
    if oracle is None:
        oracle = _Oracle(spec)
        object.__setattr__(spec, "_oracle", oracle)
    return oracle


def is_independent(spec: CountMatroidSpec, F: Iterable[str]) -> bool:
    """Check the count condition on every subset S of nodes."""
    F = spec.graph.check_edges(F)
    return _oracle(spec).independent(F)


def enumerate_independent_sets(spec: CountMatroidSpec, cap: int = DEFAULT_EDGE_CAP) -> list[frozenset]:
    G = spec.graph
    if len(G.edges) > cap:
        raise ScaleError(f"{len(G.edges)} edges exceed the enumeration cap of {cap}")
    oracle = _oracle(spec)
    ids = G.edge_ids
    found = []

    # independence is inherited by subsets, so extending in edge order and
    # pruning on the first dependent set visits every independent set once
    def extend(start, chosen):
        found.append(frozenset(chosen))
        for i in range(start, len(ids)):
            chosen.append(ids[i])
            if oracle.independent(chosen):
                extend(i + 1, chosen)
            chosen.pop()

    extend(0, [])
    return found


def rank(spec: CountMatroidSpec, F: Iterable[str] | None = None) -> int:
    G = spec.graph
    F = G.edge_ids if F is None else sorted(G.check_edges(F), key=G.edge_position)
    oracle = _oracle(spec)
    basis: list[str] = []
    for e in F:
        if oracle.independent(basis + [e]):
            basis.append(e)
    return len(basis)


def greedy_max_weight(spec: CountMatroidSpec, w: Mapping[str, Fraction]) -> frozenset:
    """Matroid greedy over the positive-weight edges, heaviest first."""
    G = spec.graph
    oracle = _oracle(spec)
    order = sorted((i for i, e in enumerate(G.edges) if Fraction(w[e.id]) > 0),
                   key=lambda i: (-Fraction(w[G.edges[i].id]), i))
    chosen: list[str] = []
    for i in order:
        eid = G.edges[i].id
        if oracle.independent(chosen + [eid]):
            chosen.append(eid)
    return frozenset(chosen)


def partitionable_into_k_forests(G: Graph, F: Iterable[str], k: int,
                                 cap: int = PARTITION_EDGE_CAP) -> bool:
    """Brute-force search for a split of F into at most k forests."""
    F = sorted(G.check_edges(F), key=G.edge_position)
    if len(F) > cap:
        raise ScaleError(f"{len(F)} edges exceed the partition cap of {cap}")
    if not F:
        return True
    if k <= 0:
        return False
    edges = [G.edge(e) for e in F]

    def place(i, classes):
        if i == len(edges):
            return True
        e = edges[i]
        opened_empty = False
        for j, uf in enumerate(classes):
            # classes that are still empty are interchangeable
            if uf is None:
                if opened_empty:
                    continue
                opened_empty = True
            current = UnionFind(G.nodes) if uf is None else uf
            if current.find(e.u) == current.find(e.v):
                continue
            trial = UnionFind()
            trial.parent = dict(current.parent)
            trial.union(e.u, e.v)
            nxt = list(classes)
            nxt[j] = trial
            if place(i + 1, nxt):
                return True
        return False

    return place(0, [None] * k)
