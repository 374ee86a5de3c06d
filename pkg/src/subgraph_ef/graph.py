"""Undirected multigraphs and the combinatorial routines used as oracles."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Hashable, Iterable, Iterator, Mapping, Sequence

from .errors import InputError, ScaleError

Node = Hashable

DEFAULT_EDGE_CAP = 20


class UnionFind:
    def __init__(self, items: Iterable[Node] = ()):
        self.parent: dict = {x: x for x in items}

    def find(self, x):
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, a, b) -> bool:
        """Merge the classes of a and b; False if they were already merged."""
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[rb] = ra
        return True


@dataclass(frozen=True)
class Edge:
    id: str
    u: Node
    v: Node

    @property
    def ends(self) -> tuple:
        return (self.u, self.v)


@dataclass(frozen=True)
class Graph:
    """Loopless undirected multigraph with ordered nodes and edges.

    Edges are addressed by their string id. Parallel edges are allowed and
    get distinct ids.
    """

    nodes: tuple
    edges: tuple[Edge, ...]
    _edge_index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if len(set(self.nodes)) != len(self.nodes):
            raise InputError("duplicate node ids")
        known = set(self.nodes)
        index = {}
        for i, e in enumerate(self.edges):
            if e.id in index:
                raise InputError(f"duplicate edge id {e.id!r}")
            if e.u not in known or e.v not in known:
                raise InputError(f"edge {e.id!r} has an unknown endpoint")
            if e.u == e.v:
                raise InputError(f"edge {e.id!r} is a loop")
            index[e.id] = i
        object.__setattr__(self, "_edge_index", index)

    @classmethod
    def from_edges(cls, pairs: Iterable[Sequence[Node]], nodes: Iterable[Node] | None = None) -> Graph:
        """Build a graph from endpoint pairs.

        Edge ids are ``"u-v"``; repeated pairs get ``"u-v.1"``, ``"u-v.2"``, ...
        Nodes default to the endpoints in order of first appearance.
        """
        pairs = [tuple(p) for p in pairs]
        if nodes is None:
            seen: dict = {}
            for u, v in pairs:
                seen.setdefault(u, None)
                seen.setdefault(v, None)
            nodes = list(seen)
        edges = []
        used: set = set()
        for u, v in pairs:
            base = f"{u}-{v}"
            eid, k = base, 0
            while eid in used:
                k += 1
                eid = f"{base}.{k}"
            used.add(eid)
            edges.append(Edge(eid, u, v))
        return cls(tuple(nodes), tuple(edges))

    # -- basic accessors -------------------------------------------------

    @property
    def edge_ids(self) -> list[str]:
        return [e.id for e in self.edges]

    def edge(self, eid: str) -> Edge:
        try:
            return self.edges[self._edge_index[eid]]
        except KeyError:
            raise InputError(f"unknown edge {eid!r}") from None

    def edge_position(self, eid: str) -> int:
        try:
            return self._edge_index[eid]
        except KeyError:
            raise InputError(f"unknown edge {eid!r}") from None

    def check_nodes(self, S: Iterable[Node]) -> frozenset:
        S = frozenset(S)
        unknown = S - set(self.nodes)
        if unknown:
            raise InputError(f"unknown nodes: {sorted(map(str, unknown))}")
        return S

    def check_edges(self, F: Iterable[str]) -> frozenset:
        F = frozenset(F)
        for eid in F:
            self.edge(eid)
        return F

    def __str__(self):
        return f"Graph(|V|={len(self.nodes)}, |E|={len(self.edges)})"


def induced_edges(G: Graph, S: Iterable[Node]) -> frozenset:
    """Edges with both endpoints in S."""
    S = G.check_nodes(S)
    return frozenset(e.id for e in G.edges if e.u in S and e.v in S)


def connected_components(G: Graph) -> list[frozenset]:
    """Node partition into components, ordered by first node."""
    uf = UnionFind(G.nodes)
    for e in G.edges:
        uf.union(e.u, e.v)
    blocks: dict = {}
    for v in G.nodes:
        blocks.setdefault(uf.find(v), []).append(v)
    return [frozenset(b) for b in blocks.values()]


def num_components(G: Graph) -> int:
    return len(connected_components(G))


def is_forest(G: Graph, F: Iterable[str]) -> bool:
    uf = UnionFind(G.nodes)
    for eid in F:
        e = G.edge(eid)
        if not uf.union(e.u, e.v):
            return False
    return True


def _check_cap(G: Graph, cap: int):
    if len(G.edges) > cap:
        raise ScaleError(f"{len(G.edges)} edges exceed the enumeration cap of {cap}")


def _forests(G: Graph) -> Iterator[tuple[str, ...]]:
    # DFS over edges in order; acyclicity is inherited by subsets so
    # pruning on the first cycle is exact. Yields in lexicographic order
    # of edge positions.
    edges = G.edges

    def extend(start, chosen, uf_parent):
        yield tuple(chosen)
        for i in range(start, len(edges)):
            e = edges[i]
            uf = UnionFind()
            uf.parent = dict(uf_parent)
            if uf.union(e.u, e.v):
                chosen.append(e.id)
                yield from extend(i + 1, chosen, uf.parent)
                chosen.pop()

    yield from extend(0, [], {v: v for v in G.nodes})


def enumerate_forests(G: Graph, cap: int = DEFAULT_EDGE_CAP) -> list[frozenset]:
    """All acyclic edge subsets, the empty set included."""
    _check_cap(G, cap)
    return [frozenset(F) for F in _forests(G)]


def enumerate_spanning_forests(G: Graph, cap: int = DEFAULT_EDGE_CAP) -> list[frozenset]:
    """Forests with the same components as G, i.e. with |V| - nu(G) edges."""
    _check_cap(G, cap)
    target = len(G.nodes) - num_components(G)
    return [frozenset(F) for F in _forests(G) if len(F) == target]


def kruskal_max_weight_spanning_forest(G: Graph, w: Mapping[str, Fraction]) -> frozenset:
    """Maximum-weight spanning forest; ties broken by edge order."""
    order = sorted(range(len(G.edges)), key=lambda i: (-Fraction(w[G.edges[i].id]), i))
    uf = UnionFind(G.nodes)
    chosen = []
    for i in order:
        e = G.edges[i]
        if uf.union(e.u, e.v):
            chosen.append(e.id)
    return frozenset(chosen)


def edge_weight(w: Mapping[str, Fraction], F: Iterable[str]) -> Fraction:
    return sum((Fraction(w[e]) for e in F), Fraction(0))


def sorted_edges(G: Graph, F: Iterable[str]) -> list[str]:
    return sorted(F, key=G.edge_position)
