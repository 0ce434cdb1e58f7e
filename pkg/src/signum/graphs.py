"""Signed directed and undirected graphs of a sign pattern.

The digraph D has an arc (i, j) for every nonzero entry, carrying that
entry's sign.  For combinatorially symmetric patterns the undirected graph
G has an edge {i, j} whose sign is the sign of p_ij * p_ji.  The shape of
G (path, tree, single cycle, unicyclic, ...) routes the decision rules;
this module also computes maximal constant-sign runs along paths and
cycles, leaf-to-cycle distances, and path-adjacent cycle pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property

import networkx as nx

from .errors import CycleBudgetExceeded, Disconnected, NotCombinatoriallySymmetric
from .patterns import SignPattern, validate

__all__ = [
    "SignedDigraph",
    "SignedGraph",
    "ShapeKind",
    "GraphShape",
    "MaximalSignedRun",
    "CycleStructureReport",
    "build_graphs",
    "build_digraph",
    "classify_shape",
    "maximal_signed_runs",
    "path_edge_signs",
    "cycle_edge_order",
    "cycle_structure",
    "digraph_to_dot",
    "graph_to_dot",
]

UNDIRECTED_CYCLE_BUDGET = 10_000


@dataclass(frozen=True)
class SignedDigraph:
    """Directed arcs (i, j, sign) of a pattern, including any loops."""

    n: int
    arcs: tuple[tuple[int, int, int], ...]

    @cached_property
    def arc_sign(self) -> dict[tuple[int, int], int]:
        return {(i, j): s for i, j, s in self.arcs}

    @cached_property
    def successors(self) -> dict[int, tuple[int, ...]]:
        out: dict[int, list[int]] = {v: [] for v in range(self.n)}
        for i, j, _ in self.arcs:
            out[i].append(j)
        return {v: tuple(sorted(ws)) for v, ws in out.items()}

    def has_loops(self) -> bool:
        return any(i == j for i, j, _ in self.arcs)

    def without_vertices(self, removed: set[int]) -> "SignedDigraph":
        """Subgraph on the complementary vertex set, original labels kept."""
        keep = [(i, j, s) for i, j, s in self.arcs if i not in removed and j not in removed]
        return SignedDigraph(self.n, tuple(keep))

    def to_networkx(self) -> nx.DiGraph:
        g = nx.DiGraph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from((i, j, {"sign": s}) for i, j, s in self.arcs)
        return g


@dataclass(frozen=True)
class SignedGraph:
    """Undirected edges ((i, j), sign) with i < j; loops are only flagged."""

    n: int
    edges: tuple[tuple[tuple[int, int], int], ...]
    has_loops: bool = False

    @cached_property
    def edge_sign(self) -> dict[tuple[int, int], int]:
        return {e: s for e, s in self.edges}

    @cached_property
    def adjacency(self) -> dict[int, tuple[int, ...]]:
        adj: dict[int, list[int]] = {v: [] for v in range(self.n)}
        for (i, j), _ in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        return {v: tuple(sorted(ws)) for v, ws in adj.items()}

    def sign_of(self, u: int, v: int) -> int:
        return self.edge_sign[(min(u, v), max(u, v))]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def leaves(self) -> tuple[int, ...]:
        return tuple(v for v in range(self.n) if self.degree(v) == 1)

    def negative_edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(e for e, s in self.edges if s < 0)

    def positive_edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(e for e, s in self.edges if s > 0)

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for w in self.adjacency[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from((i, j, {"sign": s}) for (i, j), s in self.edges)
        return g


class ShapeKind(Enum):
    PATH = "path"
    TREE = "tree"
    SINGLE_CYCLE = "single_cycle"
    UNICYCLIC = "unicyclic"
    MULTI_CYCLE_NO_LEAF = "multi_cycle_no_leaf"
    OTHER = "other"


@dataclass(frozen=True)
class GraphShape:
    kind: ShapeKind
    cycles: tuple[tuple[int, ...], ...] = ()
    leaves: tuple[int, ...] = ()


@dataclass(frozen=True)
class MaximalSignedRun:
    """Maximal block of consecutive equal-sign edges along a traversal."""

    sign: int
    indices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.indices)


@dataclass(frozen=True)
class CycleStructureReport:
    """Undirected cycle inventory with leaf distances and cycle-pair links.

    ``path_adjacent_pairs`` entries are (cycle_a, cycle_b, edge_count,
    raw_distance): edge_count is the length of the shortest connecting path
    whose interior avoids every cycle vertex, raw_distance the unrestricted
    shortest distance between the two vertex sets.
    """

    cycles: tuple[tuple[int, ...], ...]
    cycle_edge_signs: tuple[tuple[int, ...], ...]
    leaf_cycle_distances: tuple[tuple[int, int, int], ...]
    path_adjacent_pairs: tuple[tuple[int, int, int, int], ...]


def build_digraph(pattern: SignPattern) -> SignedDigraph:
    """The signed digraph: one arc per nonzero entry."""
    arcs = tuple(
        (i, j, pattern.rows[i][j])
        for i in range(pattern.n)
        for j in range(pattern.n)
        if pattern.rows[i][j]
    )
    return SignedDigraph(pattern.n, arcs)


def build_graphs(pattern: SignPattern) -> tuple[SignedDigraph, SignedGraph]:
    """Build D and G; G needs combinatorial symmetry."""
    digraph = build_digraph(pattern)
    if not validate(pattern).combinatorially_symmetric:
        raise NotCombinatoriallySymmetric(
            "undirected edge signs need p_ij != 0 iff p_ji != 0"
        )
    edges = []
    has_loops = False
    for i in range(pattern.n):
        if pattern.rows[i][i]:
            has_loops = True
        for j in range(i + 1, pattern.n):
            if pattern.rows[i][j]:
                prod = pattern.rows[i][j] * pattern.rows[j][i]
                edges.append(((i, j), prod))
    return digraph, SignedGraph(pattern.n, tuple(edges), has_loops)


def classify_shape(graph: SignedGraph) -> GraphShape:
    """Classify the undirected graph; raises Disconnected otherwise.

    Tree means connected with n-1 edges, a path is a tree of maximum degree
    two, a single cycle has every degree equal to two, unicyclic means
    exactly n edges, and the multi-cycle kind additionally requires that
    there is no leaf.
    """
    if not graph.is_connected():
        raise Disconnected("shape classification needs a connected graph")
    n, m = graph.n, len(graph.edges)
    leaves = graph.leaves()
    if m == n - 1:
        kind = ShapeKind.PATH if all(graph.degree(v) <= 2 for v in range(n)) else ShapeKind.TREE
        return GraphShape(kind, (), leaves)
    cycles = _undirected_cycles(graph)
    if m == n:
        if all(graph.degree(v) == 2 for v in range(n)):
            return GraphShape(ShapeKind.SINGLE_CYCLE, cycles, leaves)
        return GraphShape(ShapeKind.UNICYCLIC, cycles, leaves)
    if not leaves:
        return GraphShape(ShapeKind.MULTI_CYCLE_NO_LEAF, cycles, leaves)
    return GraphShape(ShapeKind.OTHER, cycles, leaves)


def _canonical_cycle(vertices: list[int]) -> tuple[int, ...]:
    """Rotate/reflect an undirected vertex cycle to a canonical tuple."""
    k = len(vertices)
    best = None
    for seq in (vertices, vertices[::-1]):
        start = seq.index(min(seq))
        rot = tuple(seq[(start + t) % k] for t in range(k))
        if best is None or rot < best:
            best = rot
    assert best is not None
    return best


def _undirected_cycles(graph: SignedGraph) -> tuple[tuple[int, ...], ...]:
    out = []
    for count, cyc in enumerate(nx.simple_cycles(graph.to_networkx())):
        if count >= UNDIRECTED_CYCLE_BUDGET:
            raise CycleBudgetExceeded(
                f"more than {UNDIRECTED_CYCLE_BUDGET} undirected cycles"
            )
        out.append(_canonical_cycle(list(cyc)))
    return tuple(sorted(out))


def maximal_signed_runs(signs, cyclic: bool) -> list[MaximalSignedRun]:
    """Partition an edge-sign sequence into maximal constant-sign runs.

    With ``cyclic=True`` the first and last runs merge when they agree in
    sign and both signs occur; an all-equal cyclic sequence is one run of
    full length.
    """
    signs = [int(s) for s in signs]
    if not signs:
        return []
    if any(s not in (-1, 1) for s in signs):
        raise ValueError("edge signs must be -1 or +1")
    runs: list[MaximalSignedRun] = []
    start = 0
    for pos in range(1, len(signs) + 1):
        if pos == len(signs) or signs[pos] != signs[start]:
            runs.append(MaximalSignedRun(signs[start], tuple(range(start, pos))))
            start = pos
    if cyclic and len(runs) > 1 and runs[0].sign == runs[-1].sign:
        merged = MaximalSignedRun(runs[0].sign, runs[-1].indices + runs[0].indices)
        runs = [merged] + runs[1:-1]
    return runs


def path_edge_signs(graph: SignedGraph) -> tuple[tuple[tuple[int, int], ...], tuple[int, ...]]:
    """Ordered edges and signs along a path graph, from its smallest leaf."""
    shape = classify_shape(graph)
    if shape.kind is not ShapeKind.PATH:
        raise ValueError("edge ordering along a path needs a path graph")
    if graph.n == 1:
        return (), ()
    start = min(graph.leaves())
    order = [start]
    prev = None
    while len(order) < graph.n:
        nxt = [w for w in graph.adjacency[order[-1]] if w != prev]
        prev = order[-1]
        order.append(nxt[0])
    edges = tuple((min(a, b), max(a, b)) for a, b in zip(order, order[1:]))
    return edges, tuple(graph.sign_of(*e) for e in edges)


def cycle_edge_order(
    graph: SignedGraph, cycle: tuple[int, ...]
) -> tuple[tuple[tuple[int, int], ...], tuple[int, ...]]:
    """Edges and signs around a cycle, in the order the vertices are listed."""
    k = len(cycle)
    edges = tuple(
        (min(cycle[t], cycle[(t + 1) % k]), max(cycle[t], cycle[(t + 1) % k]))
        for t in range(k)
    )
    return edges, tuple(graph.sign_of(*e) for e in edges)


def _distances_from(graph: SignedGraph, sources: set[int]) -> dict[int, int]:
    dist = {v: 0 for v in sources}
    frontier = sorted(sources)
    while frontier:
        nxt = []
        for u in frontier:
            for w in graph.adjacency[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    nxt.append(w)
        frontier = sorted(nxt)
    return dist


def cycle_structure(graph: SignedGraph) -> CycleStructureReport:
    """Cycle inventory: every simple cycle, leaf distances, cycle-pair links.

    A pair of cycles is listed only if some connecting path has all interior
    vertices off every cycle; the reported edge count is minimal among such
    paths.  The unrestricted distance between the two vertex sets is
    reported alongside so both parity conventions can be checked.
    """
    if not graph.is_connected():
        raise Disconnected("cycle structure needs a connected graph")
    cycles = _undirected_cycles(graph)
    signs = tuple(cycle_edge_order(graph, cyc)[1] for cyc in cycles)
    on_cycle: set[int] = set()
    for cyc in cycles:
        on_cycle.update(cyc)

    leaf_rows = []
    for leaf in graph.leaves():
        dist = _distances_from(graph, {leaf})
        for c_idx, cyc in enumerate(cycles):
            leaf_rows.append((leaf, c_idx, min(dist[v] for v in cyc)))

    pair_rows = []
    for a in range(len(cycles)):
        for b in range(a + 1, len(cycles)):
            va, vb = set(cycles[a]), set(cycles[b])
            link = _restricted_link(graph, va, vb, on_cycle)
            if link is None:
                continue
            raw = min(_distances_from(graph, va)[v] for v in sorted(vb))
            pair_rows.append((a, b, link, raw))
    return CycleStructureReport(cycles, signs, tuple(leaf_rows), tuple(pair_rows))


def _restricted_link(
    graph: SignedGraph, va: set[int], vb: set[int], on_cycle: set[int]
) -> int | None:
    """Shortest connecting path edge count with cycle-free interior, or None."""
    if va & vb:
        return None
    dist = {v: 0 for v in va}
    frontier = sorted(va)
    best = None
    while frontier:
        nxt = []
        for u in frontier:
            for w in graph.adjacency[u]:
                if w in vb:
                    cand = dist[u] + 1
                    best = cand if best is None else min(best, cand)
                elif w not in dist and w not in on_cycle:
                    dist[w] = dist[u] + 1
                    nxt.append(w)
        if best is not None:
            return best
        frontier = sorted(nxt)
    return None


def digraph_to_dot(digraph: SignedDigraph) -> str:
    """Deterministic DOT text; arc labels carry the sign."""
    lines = ["digraph pattern {"]
    for v in range(digraph.n):
        lines.append(f"  {v + 1};")
    for i, j, s in sorted(digraph.arcs):
        label = "+" if s > 0 else "-"
        lines.append(f'  {i + 1} -> {j + 1} [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_to_dot(graph: SignedGraph) -> str:
    """Deterministic DOT text; negative edges are dashed."""
    lines = ["graph pattern {"]
    for v in range(graph.n):
        lines.append(f"  {v + 1};")
    for (i, j), s in sorted(graph.edges):
        label = "+" if s > 0 else "-"
        style = ', style="dashed"' if s < 0 else ""
        lines.append(f'  {i + 1} -- {j + 1} [label="{label}"{style}];')
    lines.append("}")
    return "\n".join(lines) + "\n"
