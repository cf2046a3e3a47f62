"""Graph corpora for the verification campaign.

Three sources: exhaustive labeled graphs in edge-mask order, labeled trees via
the Pruefer bijection (with an isomorphism-class mode for campaign sweeps),
and seeded random connected graphs.  The random stream is splitmix64, fixed
here so reports reproduce bit-for-bit anywhere:

    state += 0x9E3779B97F4A7C15            (mod 2^64)
    z = state
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    z =  z ^ (z >> 31)

An edge is present when the next draw is below edge_prob * 2^64.
"""
from __future__ import annotations

from itertools import combinations, product
from typing import Iterator

from .graphs import Graph, bits

LABELED_LIMIT = 6
LABELED_LIMIT_OVERRIDE = 7
TREE_EXHAUSTIVE_LIMIT = 10

_MASK64 = (1 << 64) - 1


class RejectionBudgetError(RuntimeError):
    """Random generation failed to hit a connected graph within budget."""


def splitmix64(seed: int) -> Iterator[int]:
    """Endless stream of 64-bit values from the documented mix function."""
    state = seed & _MASK64
    while True:
        state = (state + 0x9E3779B97F4A7C15) & _MASK64
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        yield z ^ (z >> 31)


# ---------------------------------------------------------------------------
# exhaustive labeled graphs

def edge_order(n: int) -> list[tuple[int, int]]:
    """Edge positions in mask order: (0,1), (0,2), (1,2), (0,3), ..."""
    return [(i, j) for j in range(1, n) for i in range(j)]


def enumerate_labeled_graphs(n: int, allow_large: bool = False) -> Iterator[Graph]:
    """All 2^(n(n-1)/2) labeled simple graphs of order n, in edge-mask order."""
    limit = LABELED_LIMIT_OVERRIDE if allow_large else LABELED_LIMIT
    if not 1 <= n <= limit:
        raise ValueError(
            f"exhaustive enumeration capped at n <= {limit}"
            + ("" if allow_large else " (pass allow_large=True for 7)"))
    pairs = edge_order(n)
    for mask in range(1 << len(pairs)):
        adj = [0] * n
        m = mask
        while m:
            low = m & -m
            i, j = pairs[low.bit_length() - 1]
            adj[i] |= 1 << j
            adj[j] |= 1 << i
            m ^= low
        yield Graph(n, adj)


# ---------------------------------------------------------------------------
# labeled trees via the Pruefer bijection

def prufer_decode(seq: tuple[int, ...], n: int) -> list[tuple[int, int]]:
    """Edges of the labeled tree on 0..n-1 with Pruefer sequence seq."""
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    ptr = 0
    while degree[ptr] != 1:
        ptr += 1
    leaf = ptr
    edges = []
    for x in seq:
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1 and x < ptr:
            leaf = x
        else:
            ptr += 1
            while degree[ptr] != 1:
                ptr += 1
            leaf = ptr
    edges.append((leaf, n - 1))
    return edges


def enumerate_labeled_trees(n: int) -> Iterator[Graph]:
    """All n^(n-2) labeled trees of order n (2 <= n <= 10)."""
    if not 2 <= n <= TREE_EXHAUSTIVE_LIMIT:
        raise ValueError(f"exhaustive tree enumeration needs 2 <= n <= {TREE_EXHAUSTIVE_LIMIT}")
    if n == 2:
        yield Graph.from_edges(2, [(0, 1)])
        return
    for seq in product(range(n), repeat=n - 2):
        yield Graph.from_edges(n, prufer_decode(seq, n))


def tree_canonical_key(n: int, adj_lists: list[list[int]]) -> str:
    """AHU canonical form: exact up to isomorphism for trees."""
    if n == 0:
        return ""
    if n == 1:
        return "()"
    # peel leaves to find the one or two centres
    degree = [len(a) for a in adj_lists]
    layer = [v for v in range(n) if degree[v] == 1]
    removed = 0
    alive = [True] * n
    while n - removed > 2:
        nxt = []
        for v in layer:
            alive[v] = False
            removed += 1
            for u in adj_lists[v]:
                if alive[u]:
                    degree[u] -= 1
                    if degree[u] == 1:
                        nxt.append(u)
        layer = nxt
    centers = [v for v in range(n) if alive[v]]

    def encode(root: int, block: int) -> str:
        # iterative post-order; block is the neighbour not to cross
        parent = {root: block}
        order = [root]
        idx = 0
        while idx < len(order):
            v = order[idx]
            idx += 1
            for u in adj_lists[v]:
                if u != parent[v]:
                    parent[u] = v
                    order.append(u)
        label = {}
        for v in reversed(order):
            kids = sorted(label[u] for u in adj_lists[v] if parent.get(u) == v and u != parent[v])
            label[v] = "(" + "".join(kids) + ")"
        return label[root]

    if len(centers) == 1:
        return encode(centers[0], -1)
    a, b = centers
    return "".join(sorted((encode(a, b), encode(b, a))))


def graph_canonical_tree_key(g: Graph) -> str:
    adj_lists = [list(bits(nb)) for nb in g.adj]
    return tree_canonical_key(g.n, adj_lists)


def enumerate_tree_classes(n: int) -> list[Graph]:
    """One representative per isomorphism class of trees of order n.

    Built by attaching a leaf everywhere on each (n-1)-class representative
    and deduplicating with the AHU form; every tree arises from a smaller one
    by deleting a leaf, so this is exhaustive.  Output is sorted by canonical
    key, so the representatives are deterministic.
    """
    if n < 1:
        raise ValueError("tree classes need n >= 1")
    reps = {"()": Graph.empty(1)}
    for size in range(2, n + 1):
        nxt: dict[str, Graph] = {}
        for g in reps.values():
            for v in range(g.n):
                grown = Graph(size, tuple(nb | ((1 << (size - 1)) if u == v else 0)
                                          for u, nb in enumerate(g.adj)) + (1 << v,))
                key = graph_canonical_tree_key(grown)
                if key not in nxt:
                    nxt[key] = grown
        reps = nxt
    return [reps[key] for key in sorted(reps)]


# ---------------------------------------------------------------------------
# seeded random connected graphs

def random_connected(n: int, count: int, seed: int, edge_prob: float = 0.5,
                     budget: int = 10_000) -> list[Graph]:
    """count connected graphs of order n drawn from G(n, edge_prob).

    Rejection sampling on one splitmix64 stream; raises RejectionBudgetError
    when budget consecutive draws stay disconnected (raise edge_prob).
    """
    if not 2 <= n <= 16:
        raise ValueError("random corpus supports 2 <= n <= 16")
    if not 0.0 < edge_prob <= 1.0:
        raise ValueError("edge_prob must be in (0, 1]")
    threshold = int(edge_prob * (1 << 64))
    pairs = edge_order(n)
    stream = splitmix64(seed)
    out = []
    while len(out) < count:
        for _ in range(budget):
            adj = [0] * n
            for i, j in pairs:
                if next(stream) < threshold:
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
            g = Graph(n, adj)
            if _connected(g):
                out.append(g)
                break
        else:
            raise RejectionBudgetError(
                f"no connected graph on {n} vertices in {budget} draws at p={edge_prob}")
    return out


def _connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    comp = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        nxt &= ~comp
        comp |= nxt
        frontier = nxt
    return comp == g.full_mask


# ---------------------------------------------------------------------------
# corpus specs

class Corpus:
    """A parsed corpus description; iterating yields graphs deterministically."""

    def __init__(self, spec: str, parts: list):
        self.spec = spec
        self._parts = parts

    def __iter__(self) -> Iterator[Graph]:
        for kind, args in self._parts:
            if kind == "all_labeled":
                for order in range(1, args + 1):
                    yield from enumerate_labeled_graphs(order, allow_large=args >= 7)
            elif kind == "trees":
                for order in range(2, args + 1):
                    yield from enumerate_tree_classes(order)
            elif kind == "random_connected":
                lo, hi, count, seed, prob = args
                sizes = [lo + (i % (hi - lo + 1)) for i in range(count)]
                per_size: dict[int, int] = {}
                for s in sizes:
                    per_size[s] = per_size.get(s, 0) + 1
                for s in sorted(per_size):
                    yield from random_connected(s, per_size[s], seed + s, prob)
            elif kind == "file":
                from .graphs import parse_graph6
                with open(args) as fh:
                    for line in fh:
                        line = line.strip()
                        if line.startswith(">>graph6<<"):
                            line = line[len(">>graph6<<"):]
                        if line:
                            yield parse_graph6(line)
            else:
                raise ValueError(f"unknown corpus part {kind!r}")


def parse_corpus_spec(text: str, default_seed: int | None = None) -> Corpus:
    """Grammar: terms joined by '+'.

    all_labeled(N)                            orders 1..N, exhaustive
    trees(<=N) or trees(N)                    class representatives, orders 2..N
    random_connected(n=LO..HI,COUNT,seed=S[,p=P])
    file(PATH)                                graph6 lines

    default_seed fills in for a random_connected term that omits seed=.
    """
    parts = []
    for term in text.split("+"):
        term = term.strip()
        if term.startswith("all_labeled(") and term.endswith(")"):
            parts.append(("all_labeled", int(term[12:-1])))
        elif term.startswith("trees(") and term.endswith(")"):
            inner = term[6:-1].replace("≤", "<=").strip()
            if inner.startswith("<="):
                inner = inner[2:]
            parts.append(("trees", int(inner)))
        elif term.startswith("random_connected(") and term.endswith(")"):
            inner = term[17:-1]
            lo = hi = count = seed = None
            prob = 0.5
            for field in inner.split(","):
                field = field.strip()
                if field.startswith("n="):
                    span = field[2:]
                    if ".." in span:
                        a, b = span.split("..")
                        lo, hi = int(a), int(b)
                    else:
                        lo = hi = int(span)
                elif field.startswith("seed="):
                    seed = int(field[5:])
                elif field.startswith("p="):
                    prob = float(field[2:])
                else:
                    count = int(field)
            if seed is None:
                seed = default_seed
            if lo is None or count is None or seed is None:
                raise ValueError(f"random_connected needs n=, count, seed=: {term!r}")
            if hi < lo or count < 1:
                raise ValueError(f"empty random_connected range: {term!r}")
            parts.append(("random_connected", (lo, hi, count, seed, prob)))
        elif term.startswith("file(") and term.endswith(")"):
            parts.append(("file", term[5:-1]))
        else:
            raise ValueError(f"cannot parse corpus term {term!r}")
    return Corpus(text, parts)
