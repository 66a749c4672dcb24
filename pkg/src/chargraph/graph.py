"""Prime graphs: the character graph of a degree set and its structure.

Vertices are positive integers (primes for character graphs) kept in
ascending order; vertex ``vertices[i]`` owns bit ``1 << i`` so vertex sets
are plain ints. Everything here is a pure function of an immutable graph.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Optional, Sequence

from .arith import DomainError, prime_divisors
from .degrees import DegreeMultiset

MAX_VERTICES = 64


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class PrimeGraph:
    vertices: tuple[int, ...]
    adjacency: tuple[int, ...]
    label: str = ""

    def __post_init__(self) -> None:
        n = len(self.vertices)
        if n > MAX_VERTICES:
            raise DomainError(f"{n} vertices exceeds the {MAX_VERTICES}-vertex cap")
        if list(self.vertices) != sorted(set(self.vertices)):
            raise ValueError("vertices must be distinct and ascending")
        if len(self.adjacency) != n:
            raise ValueError("adjacency length does not match vertex count")
        for i, row in enumerate(self.adjacency):
            if row >> n or row >> i & 1:
                raise ValueError(f"bad adjacency row for vertex {self.vertices[i]}")
            for j in bits(row):
                if not self.adjacency[j] >> i & 1:
                    raise ValueError("adjacency is not symmetric")

    @classmethod
    def from_edges(
        cls, vertices: Iterable[int], edges: Iterable[tuple[int, int]], label: str = ""
    ) -> "PrimeGraph":
        verts = tuple(sorted(set(vertices)))
        if any(not isinstance(v, int) or v < 1 for v in verts):
            raise ValueError("vertex labels must be positive integers")
        pos = {v: i for i, v in enumerate(verts)}
        rows = [0] * len(verts)
        for a, b in edges:
            if a == b:
                raise ValueError(f"self-loop on {a}")
            if a not in pos or b not in pos:
                raise ValueError(f"edge ({a}, {b}) uses an unknown vertex")
            i, j = pos[a], pos[b]
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        return cls(verts, tuple(rows), label)

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def index(self, v: int) -> int:
        try:
            return self.vertices.index(v)
        except ValueError:
            raise DomainError(f"{v} is not a vertex") from None

    def mask_of(self, vs: Iterable[int]) -> int:
        m = 0
        for v in vs:
            m |= 1 << self.index(v)
        return m

    def labels(self, mask: int) -> tuple[int, ...]:
        return tuple(self.vertices[i] for i in bits(mask))

    def labels_seq(self, idx: Sequence[int]) -> tuple[int, ...]:
        return tuple(self.vertices[i] for i in idx)

    def has_edge(self, a: int, b: int) -> bool:
        return bool(self.adjacency[self.index(a)] >> self.index(b) & 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.labels(self.adjacency[self.index(v)])

    def edges(self) -> list[tuple[int, int]]:
        return [
            (self.vertices[i], self.vertices[j])
            for i in range(self.n)
            for j in bits(self.adjacency[i] >> (i + 1) << (i + 1))
        ]

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adjacency) // 2


def build_character_graph(d: DegreeMultiset) -> PrimeGraph:
    """Primes dividing some degree; p ~ q iff pq divides some degree."""
    verts: set[int] = set()
    edges: set[tuple[int, int]] = set()
    for degree in d.support:
        ps = prime_divisors(degree)
        verts.update(ps)
        edges.update(combinations(ps, 2))
    return PrimeGraph.from_edges(verts, sorted(edges), d.name)


def complement(g: PrimeGraph) -> PrimeGraph:
    full = g.full_mask
    rows = tuple(full & ~row & ~(1 << i) for i, row in enumerate(g.adjacency))
    return PrimeGraph(g.vertices, rows, f"{g.label}^c" if g.label else "")


def _component_masks(g: PrimeGraph, within: Optional[int] = None) -> list[int]:
    todo = g.full_mask if within is None else within
    comps = []
    while todo:
        seed = todo & -todo
        comp = frontier = seed
        while frontier:
            nxt = 0
            for i in bits(frontier):
                nxt |= g.adjacency[i]
            frontier = nxt & todo & ~comp
            comp |= frontier
        comps.append(comp)
        todo &= ~comp
    return comps


def connected_components(g: PrimeGraph) -> list[tuple[int, ...]]:
    """Vertex partition into components, ordered by smallest member."""
    return [g.labels(m) for m in _component_masks(g)]


def is_connected(g: PrimeGraph) -> bool:
    return len(_component_masks(g)) <= 1


# ---------------------------------------------------------------------------
# Bipartiteness

@dataclass(frozen=True)
class BipartiteCertificate:
    """A proper 2-colouring or an odd cycle, never both."""

    two_coloring: Optional[dict[int, int]] = None
    odd_cycle: Optional[tuple[int, ...]] = None

    def __post_init__(self) -> None:
        if (self.two_coloring is None) == (self.odd_cycle is None):
            raise ValueError("exactly one of two_coloring / odd_cycle must be given")

    @property
    def bipartite(self) -> bool:
        return self.two_coloring is not None

    def verify(self, g: PrimeGraph) -> bool:
        if self.two_coloring is not None:
            col = self.two_coloring
            if set(col) != set(g.vertices) or not set(col.values()) <= {0, 1}:
                return False
            return all(col[a] != col[b] for a, b in g.edges())
        return is_cycle(g, self.odd_cycle) and len(self.odd_cycle) % 2 == 1


def is_cycle(g: PrimeGraph, seq: Sequence[int]) -> bool:
    """True iff ``seq`` lists >= 3 distinct vertices forming a closed walk."""
    if len(seq) < 3 or len(set(seq)) != len(seq):
        return False
    if any(v not in g.vertices for v in seq):
        return False
    return all(g.has_edge(seq[k], seq[(k + 1) % len(seq)]) for k in range(len(seq)))


def _two_color(g: PrimeGraph, mask: int) -> tuple[dict[int, int], Optional[list[int]]]:
    """BFS 2-colouring of the subgraph induced on ``mask``.

    Returns ``(colour, None)`` on success or ``(partial, cycle)`` where cycle
    is an odd cycle of vertex indices.
    """
    color: dict[int, int] = {}
    parent: dict[int, int] = {}
    depth: dict[int, int] = {}
    for root in bits(mask):
        if root in color:
            continue
        color[root], depth[root], parent[root] = 0, 0, -1
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in bits(g.adjacency[x] & mask):
                if y not in color:
                    color[y] = 1 - color[x]
                    depth[y] = depth[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif color[y] == color[x]:
                    return color, _close_cycle(x, y, parent, depth)
    return color, None


def _close_cycle(x: int, y: int, parent: dict[int, int], depth: dict[int, int]) -> list[int]:
    left, right = [x], [y]
    while depth[x] > depth[y]:
        x = parent[x]
        left.append(x)
    while depth[y] > depth[x]:
        y = parent[y]
        right.append(y)
    while x != y:
        x, y = parent[x], parent[y]
        left.append(x)
        right.append(y)
    # left ends at the common ancestor; right repeats it
    return left + right[-2::-1]


def is_bipartite(g: PrimeGraph) -> BipartiteCertificate:
    color, cycle = _two_color(g, g.full_mask)
    if cycle is not None:
        return BipartiteCertificate(odd_cycle=_canonical_cycle(g.labels_seq(cycle)))
    return BipartiteCertificate(two_coloring={g.vertices[i]: color[i] for i in range(g.n)})


def _canonical_cycle(seq: Sequence[int]) -> tuple[int, ...]:
    """Rotate to start at the smallest label, direction with smaller second entry."""
    k = seq.index(min(seq))
    fwd = tuple(seq[k:]) + tuple(seq[:k])
    back = (fwd[0],) + fwd[:0:-1]
    return min(fwd, back)


# ---------------------------------------------------------------------------
# Blocks and odd cycles

@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[tuple[int, ...], ...]
    cut_vertices: tuple[int, ...]
    block_bipartite: tuple[bool, ...]


def _block_masks(g: PrimeGraph) -> list[int]:
    n = g.n
    disc = [-1] * n
    low = [0] * n
    clock = 0
    blocks: list[int] = []
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = clock
        clock += 1
        stack = [(root, -1, bits(g.adjacency[root]))]
        edge_stack: list[tuple[int, int]] = []
        while stack:
            v, par, it = stack[-1]
            for w in it:
                if disc[w] == -1:
                    edge_stack.append((v, w))
                    disc[w] = low[w] = clock
                    clock += 1
                    stack.append((w, v, bits(g.adjacency[w])))
                    break
                if w != par and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            else:
                stack.pop()
                if not stack:
                    continue
                p = stack[-1][0]
                low[p] = min(low[p], low[v])
                if low[v] >= disc[p]:
                    block = 0
                    while True:
                        a, b = edge_stack.pop()
                        block |= 1 << a | 1 << b
                        if (a, b) == (p, v):
                            break
                    blocks.append(block)
    return blocks


def block_decomposition(g: PrimeGraph) -> BlockDecomposition:
    """Biconnected blocks (bridges included), cut vertices, bipartite flags.

    Isolated vertices belong to no block. Blocks are sorted by their
    ascending label tuples.
    """
    masks = _block_masks(g)
    masks.sort(key=g.labels)
    seen = cut = 0
    for m in masks:
        cut |= seen & m
        seen |= m
    flags = tuple(_two_color(g, m)[1] is None for m in masks)
    return BlockDecomposition(tuple(g.labels(m) for m in masks), g.labels(cut), flags)


@dataclass(frozen=True)
class BlockWitness:
    """A non-bipartite block containing the vertex, and an odd cycle inside it.

    The cycle need not pass through the vertex itself.
    """

    block: tuple[int, ...]
    odd_cycle: tuple[int, ...]

    def verify(self, g: PrimeGraph, v: int) -> bool:
        if v not in self.block or not set(self.odd_cycle) <= set(self.block):
            return False
        if len(self.odd_cycle) % 2 == 0 or not is_cycle(g, self.odd_cycle):
            return False
        return _is_biconnected_block(g, g.mask_of(self.block))


def _is_biconnected_block(g: PrimeGraph, mask: int) -> bool:
    # A vertex set carrying an odd cycle is one block iff its induced
    # subgraph is 2-connected; cheap enough for certificate checks.
    if mask.bit_count() < 3:
        return False
    for i in bits(mask):
        rest = mask & ~(1 << i)
        if len(_component_masks(g, rest)) != 1:
            return False
    return len(_component_masks(g, mask)) == 1


def odd_cycle_vertices(g: PrimeGraph) -> dict[int, BlockWitness]:
    """Vertices lying on some odd cycle, each with a block witness.

    A vertex is on an odd cycle iff one of its blocks is non-bipartite.
    Keys are in ascending vertex order.
    """
    found: dict[int, BlockWitness] = {}
    masks = _block_masks(g)
    masks.sort(key=g.labels)
    for m in masks:
        _, cycle = _two_color(g, m)
        if cycle is None:
            continue
        witness = BlockWitness(g.labels(m), _canonical_cycle(g.labels_seq(cycle)))
        for i in bits(m):
            found.setdefault(g.vertices[i], witness)
    return dict(sorted(found.items()))


def odd_cycle_mask(g: PrimeGraph) -> int:
    m = 0
    for block in _block_masks(g):
        if _two_color(g, block)[1] is not None:
            m |= block
    return m


THROUGH_CYCLE_LIMIT = 12


def odd_cycle_through(g: PrimeGraph, v: int) -> Optional[tuple[int, ...]]:
    """Exhaustively find an odd cycle passing through ``v``, shortest first.

    Exponential; only graphs with at most 12 vertices are accepted.
    """
    if g.n > THROUGH_CYCLE_LIMIT:
        raise DomainError(f"through-cycle search is limited to {THROUGH_CYCLE_LIMIT} vertices")
    start = g.index(v)
    best: Optional[list[int]] = None

    def extend(path: list[int], used: int) -> None:
        nonlocal best
        x = path[-1]
        if len(path) >= 3 and len(path) % 2 == 1 and g.adjacency[x] >> start & 1:
            if best is None or len(path) < len(best):
                best = list(path)
        if best is not None and len(path) + 2 >= len(best):
            return
        for y in bits(g.adjacency[x] & ~used):
            path.append(y)
            extend(path, used | 1 << y)
            path.pop()

    extend([start], 1 << start)
    if best is None:
        return None
    return tuple(g.vertices[i] for i in best)


# ---------------------------------------------------------------------------
# Text formats

def parse_edge_list(text: str, label: str = "") -> PrimeGraph:
    """Parse the edge-list format.

    First non-blank line: space-separated vertex labels. Every later line:
    ``u v``. Lines starting with ``#`` are ignored.
    """
    lines = [
        (no, ln.split())
        for no, ln in enumerate(text.splitlines(), 1)
        if ln.strip() and not ln.lstrip().startswith("#")
    ]
    if not lines:
        raise ValueError("edge list has no vertex line")
    no, head = lines[0]
    try:
        verts = [int(tok) for tok in head]
    except ValueError:
        raise ValueError(f"line {no}: vertex labels must be integers") from None
    if len(set(verts)) != len(verts):
        raise ValueError(f"line {no}: duplicate vertex label")
    edges = []
    for no, parts in lines[1:]:
        if len(parts) != 2:
            raise ValueError(f"line {no}: expected 'u v'")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(f"line {no}: edge endpoints must be integers") from None
        if a not in verts or b not in verts:
            raise ValueError(f"line {no}: edge ({a}, {b}) uses an unknown vertex")
        if a == b:
            raise ValueError(f"line {no}: self-loop on {a}")
        edges.append((a, b))
    try:
        return PrimeGraph.from_edges(verts, edges, label)
    except ValueError as exc:
        raise ValueError(f"line {lines[0][0]}: {exc}") from None


def format_edge_list(g: PrimeGraph) -> str:
    out = [" ".join(map(str, g.vertices))]
    out.extend(f"{a} {b}" for a, b in g.edges())
    return "\n".join(out) + "\n"


def _dot_body(g: PrimeGraph, prefix: str, dashed: bool) -> list[str]:
    lines = [f'    {prefix}{v} [label="{v}"];' for v in g.vertices]
    style = " [style=dashed]" if dashed else ""
    lines += [f"    {prefix}{a} -- {prefix}{b}{style};" for a, b in g.edges()]
    return lines


def to_dot(g: PrimeGraph, *, dashed: bool = False) -> str:
    name = g.label.replace('"', "'")
    return "\n".join([f'graph "{name}" {{', *_dot_body(g, "v", dashed), "}"]) + "\n"


def pair_to_dot(delta: PrimeGraph) -> str:
    """Render a graph and its complement (dashed) side by side in one file."""
    name = delta.label.replace('"', "'")
    comp = complement(delta)
    lines = [f'graph "{name}" {{', "  rankdir=LR;"]
    lines += ["  subgraph cluster_delta {", f'    label="{name}";']
    lines += _dot_body(delta, "d", False)
    lines += ["  }", "  subgraph cluster_complement {", f'    label="{name} complement";']
    lines += _dot_body(comp, "c", True)
    lines += ["  }", "}"]
    return "\n".join(lines) + "\n"
