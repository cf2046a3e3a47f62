"""Bitset graphs: construction, graph6/edge-list codecs, and structural profiles.

Vertices are 0..n-1 with n <= 64.  A vertex set is a plain int bitmask and a
graph stores one adjacency mask per vertex, so neighbourhood queries inside the
solvers are single AND operations.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator

MAX_VERTICES = 64


class GraphFormatError(ValueError):
    """Malformed graph text.  offset is the 0-based byte position when known."""

    def __init__(self, message: str, offset: int | None = None):
        self.offset = offset
        if offset is not None:
            message = f"{message} (byte {offset})"
        super().__init__(message)


def mask_of(vertices: Iterable[int]) -> int:
    """Pack an iterable of vertex indices into a bitmask."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Immutable simple graph on at most 64 vertices."""

    __slots__ = ("n", "adj", "closed")

    def __init__(self, n: int, adj: Iterable[int]):
        adj = tuple(adj)
        if not 0 <= n <= MAX_VERTICES:
            raise ValueError(f"order {n} outside 0..{MAX_VERTICES}")
        if len(adj) != n:
            raise ValueError(f"adjacency has {len(adj)} rows for order {n}")
        full = (1 << n) - 1
        for v, nb in enumerate(adj):
            if nb & ~full:
                raise ValueError(f"vertex {v} has neighbours outside 0..{n - 1}")
            if nb >> v & 1:
                raise ValueError(f"vertex {v} has a loop")
            for u in bits(nb):
                if not adj[u] >> v & 1:
                    raise ValueError(f"edge {v}-{u} is not symmetric")
        self.n = n
        self.adj = adj
        # closed neighbourhoods N[v]; the solvers' hot loops index these
        self.closed = tuple(nb | (1 << v) for v, nb in enumerate(adj))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} outside 0..{n - 1}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [nb.bit_count() for nb in self.adj]

    def edge_count(self) -> int:
        return sum(nb.bit_count() for nb in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for v in range(self.n):
            for u in bits(self.adj[v]):
                if u > v:
                    out.append((v, u))
        return out

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()!r})"


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.n, (full & ~nb & ~(1 << v) for v, nb in enumerate(g.adj)))


def induced_subgraph(g: Graph, mask: int) -> Graph:
    """Subgraph induced by the vertices of mask, relabelled to 0..k-1 in order."""
    keep = list(bits(mask))
    index = {v: i for i, v in enumerate(keep)}
    adj = [0] * len(keep)
    for v in keep:
        for u in bits(g.adj[v] & mask):
            adj[index[v]] |= 1 << index[u]
    return Graph(len(keep), adj)


def disjoint_union(*graphs: Graph) -> Graph:
    total = sum(g.n for g in graphs)
    if total > MAX_VERTICES:
        raise ValueError(f"union order {total} exceeds {MAX_VERTICES}")
    adj: list[int] = []
    shift = 0
    for g in graphs:
        adj.extend(nb << shift for nb in g.adj)
        shift += g.n
    return Graph(total, adj)


# ---------------------------------------------------------------------------
# graph6 codec (printable bytes 63..126, upper triangle column-major)

def parse_graph6(text: str | bytes) -> Graph:
    if isinstance(text, str):
        data = text.encode("ascii", errors="replace")
    else:
        data = bytes(text)
    data = data.rstrip(b"\r\n")
    if not data:
        raise GraphFormatError("empty graph6 input", 0)

    pos = 0
    if data[0] == 126:  # '~' marks an extended order header
        if len(data) >= 2 and data[1] == 126:
            raise GraphFormatError(f"order exceeds {MAX_VERTICES}", 0)
        if len(data) < 4:
            raise GraphFormatError("truncated graph6 order header", len(data))
        n = 0
        for i in range(1, 4):
            b = data[i]
            if not 63 <= b <= 126:
                raise GraphFormatError(f"byte {b} outside graph6 range 63..126", i)
            n = n << 6 | (b - 63)
        pos = 4
    else:
        b = data[0]
        if not 63 <= b <= 126:
            raise GraphFormatError(f"byte {b} outside graph6 range 63..126", 0)
        n = b - 63
        pos = 1
    if n > MAX_VERTICES:
        raise GraphFormatError(f"order {n} exceeds {MAX_VERTICES}", 0)

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - pos < nbytes:
        raise GraphFormatError("truncated graph6 body", len(data))
    if len(data) - pos > nbytes:
        raise GraphFormatError("trailing garbage after graph6 body", pos + nbytes)

    adj = [0] * n
    bit_index = 0
    for i in range(nbytes):
        b = data[pos + i]
        if not 63 <= b <= 126:
            raise GraphFormatError(f"byte {b} outside graph6 range 63..126", pos + i)
        chunk = b - 63
        for j in range(5, -1, -1):
            if bit_index >= nbits:
                if chunk >> j & 1:
                    raise GraphFormatError("nonzero padding bits", pos + i)
                continue
            if chunk >> j & 1:
                u, v = _triangle_pair(bit_index)
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            bit_index += 1
    return Graph(n, adj)


def _triangle_pair(bit_index: int) -> tuple[int, int]:
    # column-major upper triangle: (0,1), (0,2), (1,2), (0,3), ...
    v = 1
    while v * (v - 1) // 2 <= bit_index:
        v += 1
    v -= 1
    return bit_index - v * (v - 1) // 2, v


def emit_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        head = [n + 63]
    else:
        head = [126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63]
    body = []
    chunk = 0
    filled = 0
    for v in range(1, n):
        for u in range(v):
            chunk = chunk << 1 | (g.adj[u] >> v & 1)
            filled += 1
            if filled == 6:
                body.append(chunk + 63)
                chunk = 0
                filled = 0
    if filled:
        body.append((chunk << (6 - filled)) + 63)
    return bytes(head + body).decode("ascii")


# ---------------------------------------------------------------------------
# edge-list format: first line "n m", then m lines "u v" (0-based)

def parse_edge_list(text: str) -> Graph:
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise GraphFormatError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2:
        raise GraphFormatError("edge-list line 1 must be 'n m'")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise GraphFormatError("edge-list line 1 must be 'n m'") from None
    if not 0 <= n <= MAX_VERTICES:
        raise GraphFormatError(f"order {n} outside 0..{MAX_VERTICES}")
    if len(lines) - 1 != m:
        raise GraphFormatError(f"expected {m} edge lines, found {len(lines) - 1}")
    edges = []
    for i, ln in enumerate(lines[1:], start=2):
        parts = ln.split()
        if len(parts) != 2:
            raise GraphFormatError(f"edge-list line {i} must be 'u v'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"edge-list line {i} must be 'u v'") from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"edge-list line {i}: vertex outside 0..{n - 1}")
        if u == v:
            raise GraphFormatError(f"edge-list line {i}: loop at {u}")
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def format_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"]
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# structural profile

@dataclass(frozen=True)
class GraphProfile:
    connected: bool
    is_tree: bool
    max_degree: int
    min_degree: int
    min_nonleaf_degree: int | None  # min degree over vertices of degree >= 2; None if none
    diameter: int | None            # None when disconnected; 0 for n <= 1
    girth: int | None               # None for acyclic graphs
    cut_vertices: int               # bitmask
    every_edge_on_triangle: bool


def _bfs_dist(g: Graph, source: int, allowed: int) -> list[int]:
    """Distances from source inside the allowed mask; -1 marks unreachable."""
    dist = [-1] * g.n
    dist[source] = 0
    frontier = 1 << source
    seen = frontier
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        nxt &= allowed & ~seen
        for v in bits(nxt):
            dist[v] = d
        seen |= nxt
        frontier = nxt
    return dist


def _component_count(g: Graph, allowed: int) -> int:
    count = 0
    remaining = allowed
    while remaining:
        start = (remaining & -remaining).bit_length() - 1
        comp = 1 << start
        frontier = comp
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v]
            nxt &= allowed & ~comp
            comp |= nxt
            frontier = nxt
        remaining &= ~comp
        count += 1
    return count


def _girth(g: Graph) -> int | None:
    """Shortest cycle length, via BFS from every vertex with parent tracking."""
    best: int | None = None
    full = g.full_mask
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            if best is not None and dist[v] * 2 >= best:
                break
            for u in bits(g.adj[v] & full):
                if dist[u] == -1:
                    dist[u] = dist[v] + 1
                    parent[u] = v
                    queue.append(u)
                elif u != parent[v] and v != parent[u]:
                    cycle = dist[v] + dist[u] + 1
                    if best is None or cycle < best:
                        best = cycle
    return best


def profile(g: Graph) -> GraphProfile:
    n = g.n
    degs = g.degrees()
    max_deg = max(degs, default=0)
    min_deg = min(degs, default=0)
    nonleaf = [d for d in degs if d >= 2]
    min_nonleaf = min(nonleaf) if nonleaf else None

    if n == 0:
        return GraphProfile(True, False, 0, 0, None, 0, None, 0, True)

    full = g.full_mask
    comp = _component_count(g, full)
    connected = comp == 1
    diameter: int | None
    if n == 1:
        diameter = 0
    elif not connected:
        diameter = None
    else:
        diameter = 0
        for v in range(n):
            d = max(_bfs_dist(g, v, full))
            if d > diameter:
                diameter = d

    m = g.edge_count()
    is_tree = connected and m == n - 1
    # a graph with c components is acyclic iff m == n - c
    girth = None if m == n - comp else _girth(g)

    cut = 0
    for v in range(n):
        rest = full & ~(1 << v)
        if rest and _component_count(g, rest) > comp:
            cut |= 1 << v

    triangle = True
    for v in range(n):
        for u in bits(g.adj[v]):
            if u > v and not g.adj[v] & g.adj[u]:
                triangle = False
                break
        if not triangle:
            break

    return GraphProfile(connected, is_tree, max_deg, min_deg, min_nonleaf,
                        diameter, girth, cut, triangle)
