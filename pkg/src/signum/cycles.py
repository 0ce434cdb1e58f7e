"""Directed cycle combinatorics of a sign pattern.

A simple cycle through vertices (i1, ..., ik) carries the sign
(-1)^(k-1) times the product of its arc signs; vertex-disjoint unions of
simple cycles are composite cycles, and the length-n ones are exactly the
nonzero determinant terms.  This module enumerates simple and composite
cycles, computes the maximum composite length by an assignment relaxation
with zero-cost self slack, tests whether a cycle extends to a spanning
composite cycle, and builds the alternating matchings used by the
even-cycle decision rules.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

import networkx as nx
import numpy as np
from scipy.optimize import linear_sum_assignment
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_bipartite_matching

from .errors import (
    CycleBudgetExceeded,
    CycleNotEven,
    CycleNotInPattern,
    OrderCapExceeded,
    RunNotOdd,
    SignMismatch,
)
from .graphs import MaximalSignedRun, SignedDigraph

__all__ = [
    "SimpleCycle",
    "CompositeCycle",
    "Matching",
    "SignSet",
    "simple_cycles",
    "max_composite_length",
    "max_composite_cover",
    "composite_cycles_of_length",
    "max_composite_sign_set",
    "cover_extension_exists",
    "gamma_matchings_from_odd_run",
    "directed_cycle_from_vertices",
]

SIMPLE_CYCLE_BUDGET = 1_000_000
SIGN_SET_ORDER_CAP = 16


@dataclass(frozen=True)
class SimpleCycle:
    """Directed simple cycle, canonically rotated to start at its minimum vertex.

    A cycle and its reversal are distinct objects; for even lengths they can
    differ in sign.
    """

    vertices: tuple[int, ...]
    sign: int

    @property
    def length(self) -> int:
        return len(self.vertices)

    def arcs(self) -> tuple[tuple[int, int], ...]:
        k = len(self.vertices)
        if k == 1:
            return ((self.vertices[0], self.vertices[0]),)
        return tuple(
            (self.vertices[t], self.vertices[(t + 1) % k]) for t in range(k)
        )


@dataclass(frozen=True)
class CompositeCycle:
    """Vertex-disjoint simple cycles; sign is the product of part signs."""

    parts: tuple[SimpleCycle, ...]

    def __post_init__(self) -> None:
        seen: set[int] = set()
        for part in self.parts:
            for v in part.vertices:
                if v in seen:
                    raise ValueError("composite cycle parts must be vertex-disjoint")
                seen.add(v)

    @property
    def length(self) -> int:
        return sum(p.length for p in self.parts)

    @property
    def sign(self) -> int:
        s = 1
        for p in self.parts:
            s *= p.sign
        return s

    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(v for p in self.parts for v in p.vertices))

    def sort_key(self) -> tuple:
        return (self.vertices(), tuple(sorted(p.vertices for p in self.parts)))


@dataclass(frozen=True)
class Matching:
    """Pairwise non-adjacent undirected edges."""

    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        seen: set[int] = set()
        for i, j in self.edges:
            if i in seen or j in seen:
                raise ValueError("matching edges must be pairwise non-adjacent")
            seen.update((i, j))

    @property
    def length(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class SignSet:
    contains_plus: bool
    contains_minus: bool
    plus_witness: CompositeCycle | None = None
    minus_witness: CompositeCycle | None = None

    @property
    def ambiguous(self) -> bool:
        return self.contains_plus and self.contains_minus


def _canonical_rotation(vertices: Sequence[int]) -> tuple[int, ...]:
    k = len(vertices)
    start = min(range(k), key=lambda t: vertices[t])
    return tuple(vertices[(start + t) % k] for t in range(k))


def _cycle_sign(digraph: SignedDigraph, vertices: Sequence[int]) -> int:
    k = len(vertices)
    prod = 1
    for t in range(k):
        a = (vertices[t], vertices[(t + 1) % k]) if k > 1 else (vertices[0], vertices[0])
        try:
            prod *= digraph.arc_sign[a]
        except KeyError:
            raise CycleNotInPattern(f"arc {a[0] + 1}->{a[1] + 1} is not in the pattern")
    return prod * (-1) ** (k - 1)


def directed_cycle_from_vertices(
    digraph: SignedDigraph, vertices: Sequence[int]
) -> SimpleCycle:
    """Build a SimpleCycle from a vertex sequence, checking every arc exists."""
    verts = _canonical_rotation(list(vertices))
    return SimpleCycle(verts, _cycle_sign(digraph, verts))


def simple_cycles(
    digraph: SignedDigraph,
    max_len: int | None = None,
    budget: int = SIMPLE_CYCLE_BUDGET,
) -> Iterator[SimpleCycle]:
    """Every directed simple cycle of length <= max_len, exactly once.

    Loops count as length-1 cycles.  Raises CycleBudgetExceeded past the
    emission budget.
    """
    g = digraph.to_networkx()
    count = 0
    for cyc in nx.simple_cycles(g, length_bound=max_len):
        count += 1
        if count > budget:
            raise CycleBudgetExceeded(f"more than {budget} simple cycles")
        verts = _canonical_rotation(cyc)
        yield SimpleCycle(verts, _cycle_sign(digraph, verts))


def max_composite_length(digraph: SignedDigraph) -> int:
    """Maximum total length of vertex-disjoint directed cycles, loops excluded.

    A composite cycle of length l is a fixed-point-free partial permutation
    supported on l vertices with every arc present.  Solved exactly as an
    assignment problem: off-diagonal arcs cost -1, the diagonal is free
    slack meaning "vertex unused", all else forbidden.
    """
    n = digraph.n
    if n == 0:
        return 0
    big = float(n + 1)
    cost = np.full((n, n), big)
    np.fill_diagonal(cost, 0.0)
    for i, j, _ in digraph.arcs:
        if i != j:
            cost[i, j] = -1.0
    rows, cols = linear_sum_assignment(cost)
    return int(sum(1 for i, j in zip(rows, cols) if i != j and cost[i, j] < 0))


def max_composite_cover(digraph: SignedDigraph) -> CompositeCycle | None:
    """One composite cycle achieving the maximum length, or None if none exist."""
    n = digraph.n
    if n == 0:
        return None
    big = float(n + 1)
    cost = np.full((n, n), big)
    np.fill_diagonal(cost, 0.0)
    for i, j, _ in digraph.arcs:
        if i != j:
            cost[i, j] = -1.0
    rows, cols = linear_sum_assignment(cost)
    succ = {int(i): int(j) for i, j in zip(rows, cols) if i != j and cost[i, j] < 0}
    parts = []
    seen: set[int] = set()
    for start in sorted(succ):
        if start in seen:
            continue
        cyc = [start]
        v = succ[start]
        while v != start:
            cyc.append(v)
            v = succ[v]
        seen.update(cyc)
        parts.append(directed_cycle_from_vertices(digraph, cyc))
    if not parts:
        return None
    return CompositeCycle(tuple(sorted(parts, key=lambda p: p.vertices)))


def composite_cycles_of_length(
    digraph: SignedDigraph,
    length: int,
    include_loops: bool = False,
    budget: int = SIMPLE_CYCLE_BUDGET,
) -> Iterator[CompositeCycle]:
    """All composite cycles of exactly the given length, each exactly once.

    Enumerates simple cycles first, then combines disjoint ones in a fixed
    order.  The budget bounds both phases.
    """
    cycles = [
        c
        for c in simple_cycles(digraph, max_len=length, budget=budget)
        if include_loops or c.length > 1
    ]
    cycles.sort(key=lambda c: (c.vertices[0], c.length, c.vertices, -c.sign))
    emitted = 0
    free = digraph.n

    def rec(start: int, chosen: list[SimpleCycle], used: set[int], cur: int):
        nonlocal emitted
        if cur == length:
            emitted += 1
            if emitted > budget:
                raise CycleBudgetExceeded(f"more than {budget} composite cycles")
            yield CompositeCycle(tuple(chosen))
            return
        if cur + (free - len(used)) < length:
            return
        for t in range(start, len(cycles)):
            c = cycles[t]
            if cur + c.length > length:
                continue
            if used.intersection(c.vertices):
                continue
            chosen.append(c)
            used.update(c.vertices)
            yield from rec(t + 1, chosen, used, cur + c.length)
            chosen.pop()
            used.difference_update(c.vertices)

    yield from rec(0, [], set(), 0)


def max_composite_sign_set(digraph: SignedDigraph) -> SignSet:
    """Signs occurring among maximum-length composite cycles, with witnesses.

    Witness choice is deterministic: smallest vertex set, then smallest part
    layout.  If the enumeration budget is hit after both signs have already
    appeared, the ambiguous answer is still returned.
    """
    if digraph.n > SIGN_SET_ORDER_CAP:
        raise OrderCapExceeded(f"sign-set enumeration capped at order {SIGN_SET_ORDER_CAP}")
    m = max_composite_length(digraph)
    if m == 0:
        return SignSet(False, False)
    best: dict[int, CompositeCycle] = {}
    try:
        for comp in composite_cycles_of_length(digraph, m):
            prev = best.get(comp.sign)
            if prev is None or comp.sort_key() < prev.sort_key():
                best[comp.sign] = comp
    except CycleBudgetExceeded:
        if not (1 in best and -1 in best):
            raise
    return SignSet(1 in best, -1 in best, best.get(1), best.get(-1))


def cover_extension_exists(digraph: SignedDigraph, cycle: SimpleCycle) -> bool:
    """Whether some length-n composite cycle contains the given cycle.

    Equivalent to the off-diagonal arcs on the remaining vertices having a
    perfect matching (rows to columns).
    """
    for i, j in cycle.arcs():
        if (i, j) not in digraph.arc_sign:
            raise CycleNotInPattern(f"arc {i + 1}->{j + 1} is not in the pattern")
    remaining = sorted(set(range(digraph.n)) - set(cycle.vertices))
    if not remaining:
        return True
    pos = {v: t for t, v in enumerate(remaining)}
    rows, cols = [], []
    for i, j, _ in digraph.arcs:
        if i != j and i in pos and j in pos:
            rows.append(pos[i])
            cols.append(pos[j])
    if not rows:
        return False
    r = len(remaining)
    graph = csr_matrix((np.ones(len(rows)), (rows, cols)), shape=(r, r))
    match = maximum_bipartite_matching(graph, perm_type="column")
    return bool(np.all(match >= 0))


def gamma_matchings_from_odd_run(
    cycle_edges: Sequence[tuple[tuple[int, int], int]],
    run: MaximalSignedRun,
) -> tuple[Matching, Matching]:
    """Split the alternating near-cover of an even cycle by edge sign.

    Given an even cycle and a maximal constant-sign run of odd length, take
    every other edge inside the run (both ends included), every other edge
    of the complementary path, and the edge closing the cycle.  Only the two
    seams are adjacent pairs, and the seam edges differ in sign, so the
    negative part M1 and positive part M2 are each matchings, with
    2(|M1| + |M2|) = k + 2.
    """
    k = len(cycle_edges)
    if k % 2:
        raise CycleNotEven(f"cycle length {k} is odd")
    if run.length % 2 == 0:
        raise RunNotOdd(f"run length {run.length} is even")
    signs = [s for _, s in cycle_edges]
    for t in run.indices:
        if signs[t] != run.sign:
            raise SignMismatch(f"edge {t} does not carry the run sign")
    r0 = run.indices[0]
    for offset, t in enumerate(run.indices):
        if t != (r0 + offset) % k:
            raise SignMismatch("run indices are not cyclically contiguous")
    length = run.length
    if length < k and signs[(r0 + length) % k] == run.sign:
        raise SignMismatch("run is not maximal: the following edge has the same sign")
    if length < k and signs[(r0 - 1) % k] == run.sign:
        raise SignMismatch("run is not maximal: the preceding edge has the same sign")
    rel = list(range(0, length, 2))
    rel += list(range(length, k - 1, 2))
    rel += [k - 1]
    chosen = [(r0 + t) % k for t in rel]
    neg = tuple(sorted(cycle_edges[t][0] for t in chosen if signs[t] < 0))
    pos = tuple(sorted(cycle_edges[t][0] for t in chosen if signs[t] > 0))
    return Matching(neg), Matching(pos)
