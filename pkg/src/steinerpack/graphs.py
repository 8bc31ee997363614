"""Bit-row graph representation and basic operations.

A graph on n <= 64 vertices is stored as one integer bitmask per vertex
(bit u of row v set iff uv is an edge), so neighbourhood intersections,
vertex sets and connectivity checks are single-word operations.  Vertex
sets throughout the package are plain ints interpreted as bitmasks.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

from .errors import GraphInputError

MAX_VERTICES = 64
MAX_GRAPH6_VERTICES = 62  # long-form graph6 headers are rejected

Edge = tuple[int, int]


def mask_of(vertices: Iterable[int]) -> int:
    """Bitmask with the given vertex indices set."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: int) -> Iterator[int]:
    """Iterate set bit positions in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def norm_edge(u: int, v: int) -> Edge:
    if u == v:
        raise GraphInputError(f"loop edge ({u},{v}) not allowed")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph with bit-row adjacency."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_VERTICES:
            raise GraphInputError(f"vertex count {self.n} outside [1, {MAX_VERTICES}]")
        if len(self.rows) != self.n:
            raise GraphInputError("row count does not match vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise GraphInputError(f"row {v} has bits outside the vertex range")
            if row >> v & 1:
                raise GraphInputError(f"loop at vertex {v}")
        for v in range(self.n):
            for u in bits(self.rows[v]):
                if not self.rows[u] >> v & 1:
                    raise GraphInputError(f"asymmetric adjacency between {u} and {v}")

    # -- basic queries ------------------------------------------------

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> int:
        return self.rows[v]

    def degree(self, v: int) -> int:
        if not 0 <= v < self.n:
            raise GraphInputError(f"vertex {v} out of range")
        return self.rows[v].bit_count()

    def min_degree(self) -> int:
        return min(row.bit_count() for row in self.rows)

    def max_degree(self) -> int:
        return max(row.bit_count() for row in self.rows)

    def edges(self) -> list[Edge]:
        out = []
        for u in range(self.n):
            for v in bits(self.rows[u] >> (u + 1) << (u + 1)):
                out.append((u, v))
        return out

    def is_connected(self) -> bool:
        return reachable_from(self.rows, 0, self.full_mask) == self.full_mask

    # -- derived graphs -----------------------------------------------

    def delete_edges(self, edges: Iterable[Edge]) -> "Graph":
        """New graph with the given edges removed; all must be present."""
        rows = list(self.rows)
        for u, v in edges:
            u, v = norm_edge(u, v)
            if not rows[u] >> v & 1:
                raise GraphInputError(f"edge ({u},{v}) not present")
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
        return Graph(self.n, tuple(rows))

    def add_edges(self, edges: Iterable[Edge]) -> "Graph":
        rows = list(self.rows)
        for u, v in edges:
            u, v = norm_edge(u, v)
            if v >= self.n:
                raise GraphInputError(f"vertex {v} out of range")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return Graph(self.n, tuple(rows))

    def complement(self) -> "Graph":
        full = self.full_mask
        return Graph(
            self.n, tuple((~row & full & ~(1 << v)) for v, row in enumerate(self.rows))
        )

    def induced_subgraph(self, s: int) -> tuple["Graph", list[int]]:
        """Induced graph on the vertex mask s plus the index map.

        Vertices are relabelled 0..|s|-1 in ascending original order; the
        returned list maps new index -> original vertex.
        """
        if s == 0:
            raise GraphInputError("empty vertex set")
        if s & ~self.full_mask:
            raise GraphInputError("vertex set outside graph")
        order = list(bits(s))
        pos = {v: i for i, v in enumerate(order)}
        rows = []
        for v in order:
            row = 0
            for u in bits(self.rows[v] & s):
                row |= 1 << pos[u]
            rows.append(row)
        return Graph(len(order), tuple(rows)), order


def reachable_from(rows: Sequence[int], start: int, allowed: int) -> int:
    """Mask of vertices reachable from start inside the allowed mask."""
    if not allowed >> start & 1:
        return 0
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= rows[v]
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


# -- constructors ------------------------------------------------------


def complete_graph(n: int) -> Graph:
    if not 1 <= n <= MAX_VERTICES:
        raise GraphInputError(f"vertex count {n} outside [1, {MAX_VERTICES}]")
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def empty_graph(n: int) -> Graph:
    if not 1 <= n <= MAX_VERTICES:
        raise GraphInputError(f"vertex count {n} outside [1, {MAX_VERTICES}]")
    return Graph(n, (0,) * n)


def from_edges(n: int, edges: Iterable[Edge]) -> Graph:
    return empty_graph(n).add_edges(edges)


def path_graph(n: int) -> Graph:
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(n: int) -> Graph:
    """Star with center 0 and n-1 leaves."""
    return from_edges(n, [(0, i) for i in range(1, n)])


# -- degree-based helpers ----------------------------------------------


def second_min_degree_vertex(g: Graph) -> int:
    """Second minimal degree vertex under the smallest-index convention.

    If at least two vertices attain the minimum degree, this is the
    second smallest-indexed of them; otherwise the smallest-indexed
    vertex attaining the second smallest degree value.
    """
    if g.n < 2:
        raise GraphInputError("need at least two vertices")
    degs = [(g.degree(v), v) for v in range(g.n)]
    dmin = min(d for d, _ in degs)
    at_min = [v for d, v in degs if d == dmin]
    if len(at_min) >= 2:
        return at_min[1]
    d2 = min(d for d, _ in degs if d != dmin)
    return next(v for d, v in degs if d == d2)


def second_min_degree_value(g: Graph) -> int:
    """Degree of any second minimal degree vertex (they all agree)."""
    return g.degree(second_min_degree_vertex(g))


def boundary_edge_count(g: Graph, s: int) -> int:
    """Number of edges between the mask s and its complement."""
    if s == 0:
        raise GraphInputError("empty vertex set")
    comp = g.full_mask & ~s
    return sum((g.rows[v] & comp).bit_count() for v in bits(s))


# -- graph6 ------------------------------------------------------------


def write_graph6(g: Graph) -> str:
    """Standard short-form graph6 encoding (n <= 62)."""
    if g.n > MAX_GRAPH6_VERTICES:
        raise GraphInputError(f"graph6 short form caps at {MAX_GRAPH6_VERTICES} vertices")
    out = [chr(g.n + 63)]
    acc = 0
    nbits = 0
    for v in range(1, g.n):
        for u in range(v):
            acc = acc << 1 | (g.rows[u] >> v & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        acc <<= 6 - nbits
        out.append(chr(acc + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    """Parse a short-form graph6 string (optionally with the format header)."""
    if text.startswith(">>graph6<<"):
        text = text[len(">>graph6<<") :]
    text = text.strip()
    if not text:
        raise GraphInputError("empty graph6 string")
    head = ord(text[0]) - 63
    if head == 63:  # '~' introduces the long form
        raise GraphInputError("graph6 long form (n > 62) not supported")
    if not 0 <= head <= MAX_GRAPH6_VERTICES:
        raise GraphInputError(f"malformed graph6 header {text[0]!r}")
    n = head
    if n == 0:
        raise GraphInputError("graph6 with zero vertices not supported")
    npairs = n * (n - 1) // 2
    need = (npairs + 5) // 6
    body = text[1:]
    if len(body) != need:
        raise GraphInputError(f"graph6 body length {len(body)}, expected {need}")
    bitbuf = 0
    for ch in body:
        val = ord(ch) - 63
        if not 0 <= val < 64:
            raise GraphInputError(f"invalid graph6 byte {ch!r}")
        bitbuf = bitbuf << 6 | val
    pad = need * 6 - npairs
    if pad and bitbuf & ((1 << pad) - 1):
        raise GraphInputError("nonzero padding bits in graph6 string")
    bitbuf >>= pad
    rows = [0] * n
    # pair order (0,1),(0,2),(1,2),(0,3),...: first pair sits at the top bit
    idx = npairs - 1
    for v in range(1, n):
        for u in range(v):
            if bitbuf >> idx & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            idx -= 1
    return Graph(n, tuple(rows))


# -- tree certificates --------------------------------------------------


@dataclass(frozen=True)
class TreeCertificate:
    """Edge list of one Steiner/spanning tree plus its terminal set."""

    edges: frozenset[Edge]
    terminals: int

    def vertex_mask(self) -> int:
        m = 0
        for u, v in self.edges:
            m |= 1 << u | 1 << v
        return m


def validate_tree_certificate(g: Graph, t: TreeCertificate) -> tuple[bool, str]:
    """Check a tree certificate against its host graph.

    Returns (True, "ok") or (False, reason) where reason is one of
    "missing-edge", "cycle", "disconnected", "terminal-not-spanned",
    "no-edges".
    """
    if not t.edges:
        return False, "no-edges"
    for u, v in t.edges:
        if u >= v or v >= g.n or not g.has_edge(u, v):
            return False, "missing-edge"
    span = t.vertex_mask()
    nv = span.bit_count()
    if len(t.edges) != nv - 1:
        return False, "cycle"
    rows = [0] * g.n
    for u, v in t.edges:
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    start = (span & -span).bit_length() - 1
    if reachable_from(rows, start, span) != span:
        return False, "disconnected"
    if t.terminals & ~span:
        return False, "terminal-not-spanned"
    return True, "ok"


# -- Hamiltonian cycles --------------------------------------------------


def hamiltonian_cycle(g: Graph) -> Optional[list[int]]:
    """Exact backtracking search for a Hamilton cycle.

    Branches from vertex 0 with neighbours ordered by ascending degree.
    Returns the cycle as a vertex sequence (without repeating the start)
    or None.  Exponential in the worst case; callers stay at n <= 13.
    """
    n = g.n
    if n < 3:
        raise GraphInputError("Hamilton cycles need at least 3 vertices")
    if g.min_degree() < 2 or not g.is_connected():
        return None
    order = sorted(range(n), key=g.degree)
    nbr_sorted = [[v for v in order if g.has_edge(u, v)] for u in range(n)]
    path = [0]
    full = g.full_mask

    def extend(visited: int) -> bool:
        if visited == full:
            return g.has_edge(path[-1], 0)
        last = path[-1]
        # the unvisited region plus both cycle endpoints must be connected
        region = (full & ~visited) | 1 << last | 1
        if reachable_from(g.rows, last, region) != region:
            return False
        for v in nbr_sorted[last]:
            if visited >> v & 1:
                continue
            path.append(v)
            if extend(visited | 1 << v):
                return True
            path.pop()
        return False

    if extend(1):
        return path
    return None
