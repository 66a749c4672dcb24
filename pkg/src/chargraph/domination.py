"""Exact dominating sets over bit-set vertex subsets.

Searches run by increasing cardinality over ``itertools.combinations`` of
vertex indices, so the first hit at a given size is the lexicographically
smallest set by sorted label.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Optional

from .arith import DomainError
from .graph import BlockWitness, PrimeGraph, bits, odd_cycle_vertices


@dataclass(frozen=True)
class DominationCertificate:
    set: tuple[int, ...]
    kind: str = "plain"
    member_evidence: dict[int, BlockWitness] = field(default_factory=dict)

    def verify(self, g: PrimeGraph) -> bool:
        if not set(self.set) <= set(g.vertices):
            return False
        if not is_dominating(g, self.set):
            return False
        if self.kind == "plain":
            return True
        if self.kind != "odd" or not self.set:
            return False
        return all(
            x in self.member_evidence and self.member_evidence[x].verify(g, x)
            for x in self.set
        )


def closed_neighborhoods(g: PrimeGraph) -> list[int]:
    return [row | 1 << i for i, row in enumerate(g.adjacency)]


def _dominates(closed: list[int], mask: int, full: int) -> bool:
    covered = 0
    for i in bits(mask):
        covered |= closed[i]
    return covered == full


def is_dominating(g: PrimeGraph, d: Iterable[int]) -> bool:
    """Every vertex outside ``d`` has a neighbour in ``d``."""
    d = tuple(d)
    if not set(d) <= set(g.vertices):
        raise DomainError(f"{sorted(set(d) - set(g.vertices))} not vertices of the graph")
    return _dominates(closed_neighborhoods(g), g.mask_of(d), g.full_mask)


def _greedy_size(closed: list[int], full: int) -> int:
    covered = size = 0
    while covered != full:
        best = max(range(len(closed)), key=lambda i: (closed[i] & ~covered).bit_count())
        covered |= closed[best]
        size += 1
    return size


def _smallest(closed: list[int], pool: list[int], full: int, lo: int, hi: int) -> Optional[int]:
    for k in range(lo, hi + 1):
        for combo in combinations(pool, k):
            covered = 0
            for i in combo:
                covered |= closed[i]
            if covered == full:
                mask = 0
                for i in combo:
                    mask |= 1 << i
                return mask
    return None


def domination_number(g: PrimeGraph) -> tuple[int, DominationCertificate]:
    if g.n == 0:
        return 0, DominationCertificate(())
    closed = closed_neighborhoods(g)
    full = g.full_mask
    upper = _greedy_size(closed, full)
    widest = max(c.bit_count() for c in closed)
    lower = -(-g.n // widest)
    mask = _smallest(closed, list(range(g.n)), full, lower, upper)
    assert mask is not None  # greedy size is always attainable
    return mask.bit_count(), DominationCertificate(g.labels(mask))


def minimum_odd_dominating_set(g: PrimeGraph) -> Optional[DominationCertificate]:
    """Smallest nonempty dominating set drawn from odd-cycle vertices.

    None when the odd-cycle vertices themselves do not dominate (supersets
    of dominating sets dominate, so nothing smaller could).
    """
    evidence = odd_cycle_vertices(g)
    if not evidence:
        return None
    pool_mask = g.mask_of(evidence)
    closed = closed_neighborhoods(g)
    full = g.full_mask
    if not _dominates(closed, pool_mask, full):
        return None
    pool = list(bits(pool_mask))
    mask = _smallest(closed, pool, full, 1, len(pool))
    assert mask is not None
    members = g.labels(mask)
    return DominationCertificate(members, "odd", {x: evidence[x] for x in members})
