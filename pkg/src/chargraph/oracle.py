"""Brute-force reference computations and the oracle suite.

Nothing here touches blocks or bit-set search: cycles are found by plain
path enumeration and dominating sets by trying every subset, so these
serve as independent checks on the fast paths in ``graph``/``domination``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Optional

from .domination import domination_number, is_dominating, minimum_odd_dominating_set
from .graph import PrimeGraph, complement, is_bipartite, odd_cycle_vertices
from .theorem import condition_a, condition_b, condition_c

FIRST_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53)


def _adjacency_sets(g: PrimeGraph) -> dict[int, set[int]]:
    adj: dict[int, set[int]] = {v: set() for v in g.vertices}
    for a, b in g.edges():
        adj[a].add(b)
        adj[b].add(a)
    return adj


def simple_cycles(g: PrimeGraph) -> Iterator[tuple[int, ...]]:
    """Every simple cycle once, as a vertex tuple starting at its minimum.

    Both traversal directions are produced by the search; only the one whose
    second vertex is smaller than its last is kept.
    """
    adj = _adjacency_sets(g)
    for s in g.vertices:
        stack = [(s, [s])]
        while stack:
            v, path = stack.pop()
            for w in adj[v]:
                if w == s and len(path) >= 3 and path[1] < path[-1]:
                    yield tuple(path)
                elif w > s and w not in path:
                    stack.append((w, path + [w]))


def brute_odd_cycle_vertices(g: PrimeGraph) -> set[int]:
    """Union of vertex sets of all odd simple cycles."""
    out: set[int] = set()
    for cyc in simple_cycles(g):
        if len(cyc) % 2:
            out.update(cyc)
    return out


def _reaches(adj: dict[int, set[int]], start: int, targets: set[int], blocked: set[int]) -> bool:
    seen = {start}
    todo = [start]
    while todo:
        x = todo.pop()
        if x in targets:
            return True
        for y in adj[x]:
            if y not in seen and y not in blocked:
                seen.add(y)
                todo.append(y)
    return False


def on_odd_cycle(g: PrimeGraph, v: int) -> bool:
    """Depth-first search for an odd simple cycle through ``v``.

    Paths that can no longer return to a neighbour of ``v`` are cut off,
    which keeps the search practical on random graphs up to ~12 vertices.
    """
    adj = _adjacency_sets(g)
    ends = adj[v]

    def walk(path: list[int], used: set[int]) -> bool:
        x = path[-1]
        if len(path) >= 3 and len(path) % 2 == 1 and x in ends:
            return True
        for y in adj[x]:
            if y in used:
                continue
            left = ends - used - {y}
            if y not in ends and not left:
                continue
            if not (y in ends or _reaches(adj, y, left, used)):
                continue
            used.add(y)
            path.append(y)
            if walk(path, used):
                return True
            path.pop()
            used.discard(y)
        return False

    return walk([v], {v})


def search_odd_cycle_vertices(g: PrimeGraph) -> set[int]:
    return {v for v in g.vertices if on_odd_cycle(g, v)}


def brute_domination_number(g: PrimeGraph) -> int:
    adj = _adjacency_sets(g)
    verts = list(g.vertices)
    for k in range(len(verts) + 1):
        for d in combinations(verts, k):
            chosen = set(d)
            if all(v in chosen or adj[v] & chosen for v in verts):
                return k
    raise AssertionError("unreachable: the full vertex set dominates")


def brute_min_odd_dominating(g: PrimeGraph, odd: set[int]) -> Optional[int]:
    adj = _adjacency_sets(g)
    verts = list(g.vertices)
    for k in range(1, len(odd) + 1):
        for d in combinations(sorted(odd), k):
            chosen = set(d)
            if all(v in chosen or adj[v] & chosen for v in verts):
                return k
    return None


# ---------------------------------------------------------------------------
# Graph sources

def graph_from_code(n: int, code: int, labels: tuple[int, ...] = FIRST_PRIMES) -> PrimeGraph:
    """Labelled graph on n vertices whose edge set is the bit pattern ``code``
    over the pairs of ``combinations(range(n), 2)``."""
    verts = labels[:n]
    edges = [
        (verts[i], verts[j])
        for k, (i, j) in enumerate(combinations(range(n), 2))
        if code >> k & 1
    ]
    return PrimeGraph.from_edges(verts, edges, f"G{n}#{code}")


def all_graphs(n: int) -> Iterator[PrimeGraph]:
    pairs = n * (n - 1) // 2
    for code in range(1 << pairs):
        yield graph_from_code(n, code)


def random_graphs(count: int, max_vertices: int, seed: int) -> Iterator[PrimeGraph]:
    """Seeded G(n, p) samples with n uniform in [1, max_vertices], p uniform."""
    rng = random.Random(seed)
    for k in range(count):
        n = rng.randint(1, max_vertices)
        p = rng.random()
        pairs = n * (n - 1) // 2
        code = sum(1 << i for i in range(pairs) if rng.random() < p)
        g = graph_from_code(n, code)
        yield PrimeGraph(g.vertices, g.adjacency, f"R{seed}#{k}")


# ---------------------------------------------------------------------------
# Suite

@dataclass
class OracleSummary:
    graphs: int = 0
    mismatches: int = 0
    failures: list[str] = field(default_factory=list)

    def record(self, g: PrimeGraph, what: str) -> None:
        self.mismatches += 1
        if len(self.failures) < 20:
            self.failures.append(f"{g.label}: {what} (edges {g.edges()})")

    def line(self) -> str:
        return f"{self.graphs} graphs, {self.mismatches} mismatches"


def check_graph(
    g: PrimeGraph,
    summary: OracleSummary,
    *,
    oracles: bool = True,
    exhaustive_cycles: bool = True,
) -> None:
    """Run every check on one graph, recording mismatches into ``summary``."""
    summary.graphs += 1
    odd = set(odd_cycle_vertices(g))
    if oracles:
        truth = brute_odd_cycle_vertices(g) if exhaustive_cycles else search_odd_cycle_vertices(g)
        if odd != truth:
            summary.record(g, f"odd_cycle_vertices {sorted(odd)} != oracle {sorted(truth)}")
        k, _ = domination_number(g)
        if k != brute_domination_number(g):
            summary.record(g, f"domination_number {k} != oracle")
        mods = minimum_odd_dominating_set(g)
        expect = brute_min_odd_dominating(g, truth)
        if (None if mods is None else len(mods.set)) != expect:
            summary.record(g, "minimum_odd_dominating_set size disagrees with oracle")
    if is_bipartite(g).bipartite != (not odd):
        summary.record(g, "bipartite iff no odd-cycle vertices violated")
    mods = minimum_odd_dominating_set(g)
    exists = bool(odd) and is_dominating(g, odd)
    if (mods is not None) != exists:
        summary.record(g, "odd dominating set existence criterion violated")
    if mods is not None and not mods.verify(g):
        summary.record(g, "odd dominating certificate does not verify")
    # g plays the Delta role in the implications
    a, b, c = condition_a(g), condition_b(g), condition_c(g)
    if a.holds and is_bipartite(complement(g)).bipartite:
        summary.record(g, "(a) holds but complement is bipartite")
    if b.holds and not c.holds:
        summary.record(g, "(b) holds but (c) fails")


def run_exhaustive(max_vertices: int, *, oracles: bool = True) -> OracleSummary:
    """All labelled graphs on exactly ``max_vertices`` vertices."""
    summary = OracleSummary()
    for g in all_graphs(max_vertices):
        check_graph(g, summary, oracles=oracles)
    return summary


def run_random(count: int, max_vertices: int, seed: int, *, oracles: bool = True) -> OracleSummary:
    summary = OracleSummary()
    for g in random_graphs(count, max_vertices, seed):
        check_graph(g, summary, oracles=oracles, exhaustive_cycles=False)
    return summary
