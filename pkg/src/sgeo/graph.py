"""Immutable bitset graphs, family generators, and geodesic machinery.

Vertices are dense 0-based indices; each adjacency row is a Python int
used as a bit set over vertex indices.  Hypercube vertices encode the
bit string b1..bn with b1 as the most significant bit, so string labels
from the construction templates map directly onto integers.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator, Optional

from .errors import (
    DimensionTooLarge,
    Disconnected,
    DisconnectedFamily,
    GeodesicExplosion,
    IndexOutOfRange,
    ParseError,
    Unreachable,
)

Path = list[int]

DEFAULT_GEODESIC_CAP = 10**6

MAX_HYPERCUBE_DIM = 24


def iter_bits(mask: int) -> Iterator[int]:
    """Yield set bit positions of ``mask`` in ascending order."""
    while mask:
        lsb = mask & -mask
        yield lsb.bit_length() - 1
        mask ^= lsb


class Graph:
    """Simple undirected graph, immutable after construction."""

    __slots__ = ("n", "adj", "family")

    def __init__(self, n: int, adj: Iterable[int], family: Optional[tuple] = None):
        rows = tuple(adj)
        if len(rows) != n:
            raise ValueError("adjacency must have one row per vertex")
        for u, row in enumerate(rows):
            if row >> n:
                raise IndexOutOfRange(f"row {u} refers to vertices >= {n}")
            if row >> u & 1:
                raise ValueError(f"self-loop at vertex {u}")
        for u, row in enumerate(rows):
            for v in iter_bits(row):
                if not rows[v] >> u & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        self.n = n
        self.adj = rows
        self.family = family

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        tag = f", family={self.family!r}" if self.family else ""
        return f"Graph(n={self.n}, edges={self.edge_count()}{tag})"

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            row = self.adj[u] >> (u + 1) << (u + 1)
            for v in iter_bits(row):
                out.append((u, v))
        return out

    def degree(self, u: int) -> int:
        return self.adj[u].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def label(self, v: int) -> str:
        """Human-readable vertex label derived from the family tag."""
        if self.family and self.family[0] == "hypercube":
            return format(v, f"0{max(self.family[1], 1)}b") if self.family[1] else "0"
        if self.family and self.family[0] in ("complete_bipartite", "crown"):
            n = self.family[1]
            return f"x{v}" if v < n else f"y{v - n}"
        return str(v)


def graph_from_edges(n: int, edges: Iterable[tuple[int, int]], family: Optional[tuple] = None) -> Graph:
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise IndexOutOfRange(f"edge ({u},{v}) out of range for {n} vertices")
        if u == v:
            raise ParseError(f"self-loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows, family)


def hypercube(n: int) -> Graph:
    """Hypercube on 2^n vertices; i ~ j iff they differ in exactly one bit.

    Memory grows as 4^n, so dimensions above MAX_HYPERCUBE_DIM are rejected.
    """
    if n < 0 or n > MAX_HYPERCUBE_DIM:
        raise DimensionTooLarge(f"hypercube dimension {n} outside [0, {MAX_HYPERCUBE_DIM}]")
    size = 1 << n
    rows = []
    for v in range(size):
        row = 0
        for b in range(n):
            row |= 1 << (v ^ (1 << b))
        rows.append(row)
    return Graph(size, rows, ("hypercube", n))


def complete_bipartite(n: int, m: int) -> Graph:
    """K_{n,m} with X = 0..n-1 and Y = n..n+m-1."""
    if n < 1 or m < 1:
        raise ParseError("both sides must be nonempty")
    x_mask = (1 << n) - 1
    y_mask = ((1 << m) - 1) << n
    rows = [y_mask] * n + [x_mask] * m
    return Graph(n + m, rows, ("complete_bipartite", n, m))


def crown(n: int) -> Graph:
    """K_{n,n} minus a perfect matching: x_i ~ y_j iff i != j.

    For n < 3 the graph is disconnected, so those sizes are rejected.
    """
    if n < 3:
        raise DisconnectedFamily(f"crown({n}) is disconnected; need n >= 3")
    rows = []
    y_all = ((1 << n) - 1) << n
    x_all = (1 << n) - 1
    for i in range(n):
        rows.append(y_all ^ (1 << (n + i)))
    for i in range(n):
        rows.append(x_all ^ (1 << i))
    return Graph(2 * n, rows, ("crown", n))


def from_edge_list(text: str) -> Graph:
    """Parse the edge-list format: ``p <n> <m>`` header then ``e <u> <v>`` lines.

    Lines starting with ``c`` and blank lines are ignored; duplicate edges
    are deduplicated silently.
    """
    n = None
    edges: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] == "p":
            if n is not None:
                raise ParseError(f"line {lineno}: duplicate header")
            if len(fields) != 3:
                raise ParseError(f"line {lineno}: header must be 'p <vertices> <edges>'")
            try:
                n = int(fields[1])
                declared = int(fields[2])
            except ValueError:
                raise ParseError(f"line {lineno}: non-integer header field") from None
            if n < 0 or declared < 0:
                raise ParseError(f"line {lineno}: negative header field")
        elif fields[0] == "e":
            if n is None:
                raise ParseError(f"line {lineno}: edge before header")
            if len(fields) != 3:
                raise ParseError(f"line {lineno}: edge must be 'e <u> <v>'")
            try:
                u, v = int(fields[1]), int(fields[2])
            except ValueError:
                raise ParseError(f"line {lineno}: non-integer endpoint") from None
            if not (0 <= u < n and 0 <= v < n):
                raise IndexOutOfRange(f"line {lineno}: vertex out of range")
            if u == v:
                raise ParseError(f"line {lineno}: self-loop")
            edges.add((min(u, v), max(u, v)))
        else:
            raise ParseError(f"line {lineno}: unknown record {fields[0]!r}")
    if n is None:
        raise ParseError("missing 'p' header line")
    return graph_from_edges(n, edges)


def to_edge_list(g: Graph) -> str:
    """Emit the edge-list format; parse(emit(g)) reproduces g exactly."""
    lines = [f"p {g.n} {g.edge_count()}"]
    for u, v in g.edges():
        lines.append(f"e {u} {v}")
    return "\n".join(lines) + "\n"


def distances_from(g: Graph, u: int) -> list[Optional[int]]:
    """BFS distances from u; unreachable vertices carry None."""
    if not 0 <= u < g.n:
        raise IndexOutOfRange(f"vertex {u} out of range")
    dist: list[Optional[int]] = [None] * g.n
    dist[u] = 0
    queue = deque([u])
    adj = g.adj
    while queue:
        w = queue.popleft()
        dw = dist[w]
        row = adj[w]
        while row:
            lsb = row & -row
            x = lsb.bit_length() - 1
            row ^= lsb
            if dist[x] is None:
                dist[x] = dw + 1
                queue.append(x)
    return dist


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    return all(d is not None for d in distances_from(g, 0))


def _geodesic_interior(g: Graph, u: int, v: int):
    """Distances and the set of vertices lying on some u-v geodesic."""
    du = distances_from(g, u)
    if du[v] is None:
        raise Unreachable(f"no path between {u} and {v}")
    dv = distances_from(g, v)
    d = du[v]
    on = [
        w
        for w in range(g.n)
        if du[w] is not None and dv[w] is not None and du[w] + dv[w] == d
    ]
    return du, dv, d, on


def count_geodesics(g: Graph, u: int, v: int) -> int:
    """Number of distinct shortest u-v paths, counted exactly on the BFS DAG."""
    if u == v:
        raise ValueError("endpoints must differ")
    du, dv, d, on = _geodesic_interior(g, u, v)
    ways = {v: 1}
    for w in sorted(on, key=lambda w: -du[w]):
        if w == v:
            continue
        total = 0
        for x in iter_bits(g.adj[w]):
            if x in ways and du[x] == du[w] + 1:
                total += ways[x]
        ways[w] = total
    return ways[u]


def enumerate_geodesics(g: Graph, u: int, v: int, cap: int = DEFAULT_GEODESIC_CAP) -> list[Path]:
    """All shortest u-v paths in lexicographic order of vertex sequences.

    The count is established first via DAG counting; if it exceeds ``cap``
    a GeodesicExplosion is raised without enumerating anything.
    """
    if u == v:
        raise ValueError("endpoints must differ")
    du, dv, d, on = _geodesic_interior(g, u, v)
    on_set = set(on)
    total = count_geodesics(g, u, v)
    if total > cap:
        raise GeodesicExplosion(f"{total} geodesics between {u} and {v} exceed cap {cap}")

    paths: list[Path] = []
    path = [u]

    def walk(w: int) -> None:
        if w == v:
            paths.append(list(path))
            return
        for x in iter_bits(g.adj[w]):
            if x in on_set and du[x] == du[w] + 1:
                path.append(x)
                walk(x)
                path.pop()

    walk(u)
    return paths


def diameter(g: Graph) -> int:
    """Max eccentricity over all vertices; raises Disconnected when apt."""
    if g.n == 0:
        raise Disconnected("empty graph")
    best = 0
    for u in range(g.n):
        dist = distances_from(g, u)
        for d in dist:
            if d is None:
                raise Disconnected("graph is not connected")
            if d > best:
                best = d
    return best


def is_geodesic(g: Graph, path: Path) -> bool:
    """True iff path is a shortest path of g (adjacency, no repeats, length)."""
    if not path:
        return False
    if len(set(path)) != len(path):
        return False
    for a, b in zip(path, path[1:]):
        if not g.has_edge(a, b):
            return False
    if len(path) == 1:
        return True
    du = distances_from(g, path[0])
    return du[path[-1]] == len(path) - 1
