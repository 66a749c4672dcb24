"""Decide conditions (a), (b), (c) on a character-graph candidate.

All three are evaluated on arbitrary graphs. For a genuine character graph
they always agree; disagreement certifies the input is not Delta(G) for any
finite group.

    (a) the complement has an odd dominating set
    (b) the complement is non-bipartite with domination number 1
    (c) the graph is disconnected and its complement is non-bipartite
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Optional

from .arith import MAX_N, DomainError, is_prime
from .domination import DominationCertificate, domination_number, minimum_odd_dominating_set
from .graph import (
    BipartiteCertificate,
    PrimeGraph,
    complement,
    connected_components,
    is_bipartite,
    is_cycle,
)

DEFAULT_ALPHA_CAP = 40
MAX_WITNESS_SIZE = 9

PLUS, MINUS = "plus", "minus"


class ConditionA(NamedTuple):
    holds: bool
    odd_dominating_set: Optional[DominationCertificate]


class ConditionB(NamedTuple):
    holds: bool
    domination_number: int
    domination_witness: DominationCertificate
    complement_bipartite: BipartiteCertificate


class ConditionC(NamedTuple):
    holds: bool
    components: list[tuple[int, ...]]
    complement_bipartite: BipartiteCertificate


def condition_a(delta: PrimeGraph) -> ConditionA:
    cert = minimum_odd_dominating_set(complement(delta))
    return ConditionA(cert is not None, cert)


def condition_b(delta: PrimeGraph) -> ConditionB:
    comp = complement(delta)
    bip = is_bipartite(comp)
    k, dom = domination_number(comp)
    return ConditionB(not bip.bipartite and k == 1, k, dom, bip)


def condition_c(delta: PrimeGraph) -> ConditionC:
    comps = connected_components(delta)
    bip = is_bipartite(complement(delta))
    return ConditionC(len(comps) >= 2 and not bip.bipartite, comps, bip)


# ---------------------------------------------------------------------------
# PSL2(u^alpha) cycle witnesses

@dataclass(frozen=True)
class CycleWitness:
    """An odd cycle pi in the complement matched to q = u**alpha.

    ``ordering`` starts at u; ``sides[p]`` says whether p divides q + 1
    (``"plus"``) or q - 1 (``"minus"``).
    """

    pi: tuple[int, ...]
    u: int
    alpha: int
    ordering: tuple[int, ...]
    sides: dict[int, str] = field(default_factory=dict)

    @property
    def q(self) -> int:
        return self.u**self.alpha

    def to_json(self) -> dict:
        note = None
        if (self.u, self.alpha) == (2, 2):
            note = "PSL2(4) = PSL2(5) = A5; u=5 is inadmissible here since 2 lies in pi"
        return {
            "u": self.u,
            "alpha": self.alpha,
            "pi": list(self.pi),
            "ordering": list(self.ordering),
            "sides": {str(p): self.sides[p] for p in self.ordering if p != self.u},
            "note": note,
        }


def _side(p: int, q: int) -> Optional[str]:
    if p % 2 == 0:
        return None
    if (q + 1) % p == 0:
        return PLUS
    if (q - 1) % p == 0:
        return MINUS
    return None


def alternation_check(g_complement: PrimeGraph, w: CycleWitness) -> bool:
    """Validate a witness against the graph and the divisibility conditions.

    Sides must alternate along the cyclic ordering once u is deleted; with
    |pi| odd that sequence has even length, so the wrap-around pair
    alternates automatically.
    """
    missing = set(w.pi) - set(g_complement.vertices)
    if missing:
        raise DomainError(f"{sorted(missing)} are not vertices of the graph")
    pi = set(w.pi)
    if len(pi) != len(w.pi) or len(pi) < 3 or len(pi) % 2 == 0:
        return False
    if w.u not in pi or not is_prime(w.u) or w.alpha < 1 or w.q >= MAX_N:
        return False
    if len(w.ordering) != len(pi) or set(w.ordering) != pi:
        return False
    if not is_cycle(g_complement, w.ordering):
        return False
    k = w.ordering.index(w.u)
    rest = w.ordering[k + 1 :] + w.ordering[:k]
    for p in rest:
        side = w.sides.get(p)
        if side not in (PLUS, MINUS) or _side(p, w.q) != side:
            return False
    return all(w.sides[a] != w.sides[b] for a, b in zip(rest, rest[1:]))


def _candidates(g: PrimeGraph, alpha_cap: int) -> list[tuple[int, int, int]]:
    out = []
    for u in g.vertices:
        if not is_prime(u):
            continue
        q = u
        for alpha in range(1, alpha_cap + 1):
            if q >= MAX_N:
                break
            out.append((q, u, alpha))
            q *= u
    out.sort()
    return out


def find_psl2_witness(
    g_complement: PrimeGraph,
    alpha_cap: int = DEFAULT_ALPHA_CAP,
    max_size: int = MAX_WITNESS_SIZE,
) -> Optional[CycleWitness]:
    """Search for an alternating odd cycle through some prime u.

    Candidates (u, alpha) are tried by increasing u**alpha; for the first
    one admitting any cycle, the lexicographically smallest pi (and the
    smallest ordering of it) is returned.
    """
    g = g_complement
    for q, u, alpha in _candidates(g, alpha_cap):
        sides = {p: s for p in g.vertices if p != u and (s := _side(p, q))}
        if len(sides) < 2:
            continue
        best: Optional[tuple[tuple[int, ...], tuple[int, ...]]] = None

        def extend(path: list[int]) -> None:
            nonlocal best
            last = path[-1]
            if len(path) >= 3 and len(path) % 2 == 1 and g.has_edge(last, u):
                key = (tuple(sorted(path)), tuple(path))
                if best is None or key < best:
                    best = key
            if len(path) >= max_size:
                return
            for p in g.neighbors(last):
                if p in sides and p not in path and (
                    len(path) == 1 or sides[p] != sides[last]
                ):
                    path.append(p)
                    extend(path)
                    path.pop()

        extend([u])
        if best is not None:
            pi, ordering = best
            return CycleWitness(pi, u, alpha, ordering, {p: sides[p] for p in ordering[1:]})
    return None


# ---------------------------------------------------------------------------
# Reports

OBSTRUCTION = "not the character graph of any finite group"


@dataclass(frozen=True)
class TheoremReport:
    graph: PrimeGraph
    a: ConditionA
    b: ConditionB
    c: ConditionC
    psl2_witness: Optional[CycleWitness] = None

    @property
    def equivalent(self) -> bool:
        return self.a.holds == self.b.holds == self.c.holds

    @property
    def failed_implications(self) -> list[str]:
        flags = {"a": self.a.holds, "b": self.b.holds, "c": self.c.holds}
        return [
            f"({x}) => ({y})"
            for x, y in (("a", "b"), ("b", "c"), ("c", "a"))
            if flags[x] and not flags[y]
        ]

    @property
    def obstruction(self) -> Optional[str]:
        if self.equivalent:
            return None
        return f"{OBSTRUCTION}: {', '.join(self.failed_implications)} fails"

    def verify(self) -> bool:
        """Re-check every stored certificate against the graph."""
        comp = complement(self.graph)
        ok = self.b.domination_witness.verify(comp)
        ok &= len(self.b.domination_witness.set) == self.b.domination_number
        ok &= self.b.complement_bipartite.verify(comp)
        ok &= self.c.complement_bipartite.verify(comp)
        if self.a.odd_dominating_set is not None:
            ok &= self.a.odd_dominating_set.verify(comp)
        if self.psl2_witness is not None:
            ok &= alternation_check(comp, self.psl2_witness)
        return bool(ok)

    def to_json(self) -> dict:
        odd = self.a.odd_dominating_set
        bip = self.b.complement_bipartite
        return {
            "name": self.graph.label,
            "graph": {
                "vertices": list(self.graph.vertices),
                "edges": [list(e) for e in self.graph.edges()],
            },
            "conditions": {"a": self.a.holds, "b": self.b.holds, "c": self.c.holds},
            "equivalent": self.equivalent,
            "certificates": {
                "odd_dominating_set": None if odd is None else {
                    "set": list(odd.set),
                    "evidence": {
                        str(x): {
                            "block": list(ev.block),
                            "odd_cycle": list(ev.odd_cycle),
                        }
                        for x, ev in odd.member_evidence.items()
                    },
                },
                "domination_witness": {
                    "number": self.b.domination_number,
                    "set": list(self.b.domination_witness.set),
                },
                "odd_cycle": None if bip.odd_cycle is None else list(bip.odd_cycle),
                "two_coloring": None if bip.two_coloring is None else {
                    str(v): c for v, c in bip.two_coloring.items()
                },
                "components": [list(c) for c in self.c.components],
            },
            "psl2_witness": None if self.psl2_witness is None else self.psl2_witness.to_json(),
            "obstruction": self.obstruction,
        }


def check_equivalence(delta: PrimeGraph, alpha_cap: int = DEFAULT_ALPHA_CAP) -> TheoremReport:
    a, b, c = condition_a(delta), condition_b(delta), condition_c(delta)
    witness = find_psl2_witness(complement(delta), alpha_cap) if c.holds else None
    return TheoremReport(delta, a, b, c, witness)
