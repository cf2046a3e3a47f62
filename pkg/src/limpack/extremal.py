"""Extremal characterizations: structural recognizers and tight constructions.

Recognizers are purely structural (no solver equality inside); the test suite
and campaign cross-validate them against the exact solvers, which is the point
of keeping the two routes independent.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graphs import Graph, bits, mask_of, profile
from .solvers import ORACLE_LIMIT, OracleLimitError, open_packing_number


# ---------------------------------------------------------------------------
# graphs with L_k == k

def check_Lk_equals_k(g: Graph, k: int) -> bool:
    """Structural test for L_k(G) == k.

    Orders at most k demand n == k exactly; order k+1 demands max degree k;
    larger graphs demand that every (k+1)-subset either has an internal vertex
    adjacent to the rest of it or an outside vertex adjacent to all of it.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    n = g.n
    if n <= k:
        return n == k
    adj = g.adj
    if n == k + 1:
        return max(nb.bit_count() for nb in adj) == k
    for combo in combinations(range(n), k + 1):
        x_mask = mask_of(combo)
        if any((adj[v] & x_mask).bit_count() == k for v in combo):
            continue
        if any(adj[u] & x_mask == x_mask for u in range(n) if not x_mask >> u & 1):
            continue
        return False
    return True


# ---------------------------------------------------------------------------
# the family attaining L_2 == n + 1 - max_degree

@dataclass(frozen=True)
class ClassGWitness:
    a0: int  # bitmask
    b0: int  # bitmask


def _class_g_witness_ok(g: Graph, a0: int, b0: int) -> bool:
    if (a0 | b0) != g.full_mask or (a0 & b0).bit_count() != 2:
        return False
    # spanning star inside A0
    if not any(a0 & ~g.closed[c] == 0 for c in bits(a0)):
        return False
    # components of the induced B0 are single vertices or single edges
    for v in bits(b0):
        if (g.adj[v] & b0).bit_count() > 1:
            return False
    # vertices outside B0 see at most two B0 vertices
    for v in bits(g.full_mask & ~b0):
        if (g.adj[v] & b0).bit_count() > 2:
            return False
    return True


def recognize_class_G(g: Graph, exhaustive: bool = False) -> ClassGWitness | None:
    """Find an (A0, B0) witness, or None.

    The bounded search only tries A0 == N[v] for maximum-degree v: any witness
    has a spanning-star centre of maximum degree whose closed neighbourhood is
    exactly A0, so this is complete.  exhaustive=True scans every A0 subset
    instead (n <= 10), used to validate the bounded search.
    """
    n = g.n
    full = g.full_mask
    if exhaustive:
        if n > 10:
            raise ValueError("exhaustive class search capped at n <= 10")
        candidates = ((a0, pair) for a0 in range(1, 1 << n)
                      for pair in combinations(list(bits(a0)), 2))
    else:
        degs = g.degrees()
        dmax = max(degs, default=0)
        tops = [v for v in range(n) if degs[v] == dmax]
        candidates = ((g.closed[v], pair) for v in tops
                      for pair in combinations(list(bits(g.closed[v])), 2))
    for a0, pair in candidates:
        b0 = (full & ~a0) | mask_of(pair)
        if _class_g_witness_ok(g, a0, b0):
            return ClassGWitness(a0, b0)
    return None


# ---------------------------------------------------------------------------
# spiders (stars with t subdivided edges)

@dataclass(frozen=True)
class SpiderShape:
    center: int
    t: int  # legs of length two
    s: int  # pendant leaves on the centre


def spider_shapes(g: Graph) -> list[SpiderShape]:
    """All ways to read a tree as a spider; empty when it is not one."""
    shapes = []
    n = g.n
    adj = g.adj
    degs = g.degrees()
    for c in range(n):
        level1 = adj[c]
        level2 = 0
        for v in bits(level1):
            level2 |= adj[v] & ~(1 << c)
        if (1 << c) | level1 | level2 != g.full_mask:
            continue
        if level2 & level1 or level2 >> c & 1:
            continue  # trees cannot do this, but keep the check shape-local
        ok = all(degs[v] == 1 for v in bits(level2))
        t = s = 0
        for v in bits(level1):
            if degs[v] == 1:
                s += 1
            elif degs[v] == 2:
                t += 1
            else:
                ok = False
                break
        if ok and 1 + s + 2 * t == n:
            shapes.append(SpiderShape(c, t, s))
    shapes.sort(key=lambda sh: (sh.t, sh.center))
    return shapes


def recognize_spider(g: Graph) -> SpiderShape | None:
    """Canonical spider shape of a tree (smallest t, then smallest centre)."""
    if not profile(g).is_tree:
        raise ValueError("spider recognition expects a tree")
    shapes = spider_shapes(g)
    return shapes[0] if shapes else None


def is_spider_below_max_degree(g: Graph) -> bool:
    """True iff the tree reads as a t-spider for some t < max_degree."""
    dmax = max(g.degrees(), default=0)
    return any(sh.t < dmax for sh in spider_shapes(g))


# ---------------------------------------------------------------------------
# trees whose open packing number equals L_2

@dataclass(frozen=True)
class ClassTWitness:
    s0: int  # bitmask
    r0: int  # bitmask


def _class_t_witness_ok(g: Graph, s0: int) -> bool:
    if s0 == 0:
        return False
    adj = g.adj
    # induced S0 must be a disjoint union of edges
    for v in bits(s0):
        if (adj[v] & s0).bit_count() != 1:
            return False
    # each matched pair needs an endpoint that is a leaf of the whole tree
    seen = 0
    for v in bits(s0):
        if seen >> v & 1:
            continue
        partner = (adj[v] & s0).bit_length() - 1
        seen |= (1 << v) | (1 << partner)
        if adj[v].bit_count() != 1 and adj[partner].bit_count() != 1:
            return False
    # everything outside S0 sees exactly one S0 vertex
    for r in bits(g.full_mask & ~s0):
        if (adj[r] & s0).bit_count() != 1:
            return False
    return True


def recognize_class_T(g: Graph, exhaustive: bool = False) -> ClassTWitness | None:
    """Find an (S0, R0) partition witness for a tree, or None.

    Any valid S0 is a maximum open packing, so the bounded search enumerates
    exactly those.  exhaustive=True tries every subset (n <= 10) to validate.
    """
    if not profile(g).is_tree or g.n < 2:
        raise ValueError("class-T recognition expects a tree with >= 2 vertices")
    n = g.n
    full = g.full_mask
    if exhaustive:
        if n > 10:
            raise ValueError("exhaustive class search capped at n <= 10")
        for s0 in range(1, 1 << n):
            if _class_t_witness_ok(g, s0):
                return ClassTWitness(s0, full & ~s0)
        return None
    if n > ORACLE_LIMIT:
        raise OracleLimitError(f"class-T search enumerates subsets; capped at n <= {ORACLE_LIMIT}")
    target = open_packing_number(g).value
    adj = g.adj
    for s0 in range(1 << n):
        if s0.bit_count() != target:
            continue
        for nb in adj:
            if (nb & s0).bit_count() > 1:
                break
        else:
            if _class_t_witness_ok(g, s0):
                return ClassTWitness(s0, full & ~s0)
    return None


# ---------------------------------------------------------------------------
# constructions

def construct_diam2(a: int) -> Graph:
    """Diameter-2 graph with L_2 == a: an independent set of size a plus a
    clique holding one private common neighbour per pair, in colex order."""
    if a < 2:
        raise ValueError("construction needs a >= 2")
    pairs = a * (a - 1) // 2
    n = a + pairs
    if n > 64:
        raise ValueError(f"order {n} exceeds 64 (a <= 10)")
    edges = []
    for j in range(1, a):
        for i in range(j):
            y = a + j * (j - 1) // 2 + i
            edges.append((i, y))
            edges.append((j, y))
    for y1 in range(a, n):
        for y2 in range(y1 + 1, n):
            edges.append((y1, y2))
    return Graph.from_edges(n, edges)


def construct_tree_prescribed(a: int, b: int) -> Graph:
    """Tree with L_1 == rho0 == a and L_2 == b, for a+1 <= b <= 2a.

    b == 2a chains a paths of length two by their middles; smaller b hangs
    pendants off a star so that exactly b - a - 1 leaves get doubled.
    """
    if a < 2:
        raise ValueError("construction needs a >= 2")
    if not a + 1 <= b <= 2 * a:
        raise ValueError(f"b must satisfy a+1 <= b <= 2a, got a={a}, b={b}")
    if b == 2 * a:
        n = 3 * a
        if n > 64:
            raise ValueError(f"order {n} exceeds 64")
        edges = []
        for i in range(a):
            x, y, z = 3 * i, 3 * i + 1, 3 * i + 2
            edges.append((x, y))
            edges.append((y, z))
            if i + 1 < a:
                edges.append((y, 3 * (i + 1) + 1))
        return Graph.from_edges(n, edges)
    r = b - a
    n = 2 * a + r - 1
    if n > 64:
        raise ValueError(f"order {n} exceeds 64")
    edges = [(0, i) for i in range(1, a + 1)]
    nxt = a + 1
    for i in range(1, r):
        edges.append((i, nxt))
        edges.append((i, nxt + 1))
        nxt += 2
    for i in range(r, a):
        edges.append((i, nxt))
        nxt += 1
    return Graph.from_edges(n, edges)


def construct_spider(t: int, s: int) -> Graph:
    """Star K_{1,t+s} with t of its edges subdivided once.  Order 1 + 2t + s."""
    if t < 0 or s < 0:
        raise ValueError("spider needs t >= 0 and s >= 0")
    n = 1 + 2 * t + s
    if n > 64:
        raise ValueError(f"order {n} exceeds 64")
    edges = []
    for i in range(t):
        mid, leaf = 1 + 2 * i, 2 + 2 * i
        edges.append((0, mid))
        edges.append((mid, leaf))
    edges.extend((0, 1 + 2 * t + j) for j in range(s))
    return Graph.from_edges(n, edges)


def construct_comb(a: int, pendants: tuple[int, ...] = ()) -> Graph:
    """Spine r_1..r_a, each spine vertex carrying a cherry v_i-u_i, plus
    optional extra leaves on the v_i.  Every such tree keeps rho0 == L_2."""
    if a < 1:
        raise ValueError("comb needs a >= 1")
    if pendants and len(pendants) != a:
        raise ValueError("pendants tuple must have one count per spine vertex")
    pendants = pendants or (0,) * a
    n = 3 * a + sum(pendants)
    if n > 64:
        raise ValueError(f"order {n} exceeds 64")
    edges = []
    for i in range(a):
        r, v, u = i, a + 2 * i, a + 2 * i + 1
        if i + 1 < a:
            edges.append((r, i + 1))
        edges.append((r, v))
        edges.append((v, u))
    nxt = 3 * a
    for i, count in enumerate(pendants):
        v = a + 2 * i
        for _ in range(count):
            edges.append((v, nxt))
            nxt += 1
    return Graph.from_edges(n, edges)


def construct_family(name: str, params) -> Graph:
    """Named parametric families with fixed labellings."""
    if name == "path":
        n = int(params)
        if n < 1:
            raise ValueError("path needs n >= 1")
        return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])
    if name == "cycle":
        n = int(params)
        if n < 3:
            raise ValueError("cycle needs n >= 3")
        return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])
    if name == "complete":
        n = int(params)
        if n < 1:
            raise ValueError("complete graph needs n >= 1")
        return Graph.from_edges(n, list(combinations(range(n), 2)))
    if name == "complete_bipartite":
        m, n = params
        if m < 1 or n < 1:
            raise ValueError("complete bipartite graph needs both parts >= 1")
        return Graph.from_edges(m + n, [(i, m + j) for i in range(m) for j in range(n)])
    if name == "star":
        n = int(params)
        if n < 1:
            raise ValueError("star needs n >= 1")
        return Graph.from_edges(n, [(0, i) for i in range(1, n)])
    if name == "spider":
        t, s = params
        return construct_spider(t, s)
    if name == "complete_minus_edge":
        n = int(params)
        if n < 2:
            raise ValueError("complete graph minus an edge needs n >= 2")
        edges = [e for e in combinations(range(n), 2) if e != (0, 1)]
        return Graph.from_edges(n, edges)
    if name == "comb":
        a = int(params)
        return construct_comb(a)
    raise ValueError(f"unknown family {name!r}")


def build_from_spec(text: str) -> Graph:
    """Parse a family spec like 'spider:3,2', 'diam2:4', 'prescribed:8,12', 'path:7'."""
    name, sep, arg = text.partition(":")
    name = name.strip()
    if not sep or not arg.strip():
        raise ValueError(f"family spec needs 'name:params', got {text!r}")
    try:
        nums = [int(x) for x in arg.split(",")]
    except ValueError:
        raise ValueError(f"family parameters must be integers, got {arg!r}") from None
    if name == "diam2":
        (a,) = nums
        return construct_diam2(a)
    if name == "prescribed":
        a, b = nums
        return construct_tree_prescribed(a, b)
    if name in ("spider", "complete_bipartite"):
        t, s = nums
        return construct_family(name, (t, s))
    if name in ("path", "cycle", "complete", "star", "complete_minus_edge", "comb"):
        (n,) = nums
        return construct_family(name, n)
    raise ValueError(f"unknown family {name!r}")
