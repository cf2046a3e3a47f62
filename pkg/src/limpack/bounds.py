"""Closed formulas and hypothesis-gated bounds for the k-limited packing number.

Every bound is emitted as a BoundEntry whose hypothesis was actually checked
against the graph profile; entries whose hypothesis fails (or whose auxiliary
exact values were not supplied) carry applicable=False and no value.  Bounds
derived from gamma, L_1, or rho0 never recompute those parameters: callers
pass them in through AuxValues.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graphs import Graph, GraphProfile, complement, emit_graph6, profile
from . import solvers


@dataclass(frozen=True)
class BoundEntry:
    id: str
    direction: str          # "lower" | "upper" | "exact"
    value: int | None
    applicable: bool
    hypothesis: str
    citation: str           # theorem-registry id backing the entry
    raw: str | None = None  # untruncated rational, when the bound is fractional

    def as_dict(self) -> dict:
        return {
            "id": self.id,
            "direction": self.direction,
            "applicable": self.applicable,
            "value": self.value,
            "raw": self.raw,
            "hypothesis": self.hypothesis,
            "citation": self.citation,
        }


@dataclass(frozen=True)
class AuxValues:
    """Exact companion parameters supplied by the caller (solver outputs)."""
    gamma: int | None = None
    l1: int | None = None
    rho0: int | None = None


def _entry(id: str, direction: str, hypothesis: str, citation: str,
           applicable: bool, value: int | None = None, raw: str | None = None) -> BoundEntry:
    return BoundEntry(id, direction, value if applicable else None, applicable,
                      hypothesis, citation, raw if applicable else None)


# ---------------------------------------------------------------------------
# closed formulas

def closed_form(family: str, params, k: int) -> int:
    """Exact L_k for paths, cycles, complete, and complete bipartite graphs."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if family == "path":
        n = int(params)
        if n < 1:
            raise ValueError("path needs n >= 1")
        return n if k >= 3 else -(-k * n // 3)          # ceil(kn/3)
    if family == "cycle":
        n = int(params)
        if n < 3:
            raise ValueError("cycle needs n >= 3")
        return n if k >= 3 else k * n // 3              # floor(kn/3)
    if family == "complete":
        n = int(params)
        if n < 1:
            raise ValueError("complete graph needs n >= 1")
        return min(k, n)
    if family == "complete_bipartite":
        m, n = params
        if m < 1 or n < 1:
            raise ValueError("complete bipartite graph needs both parts >= 1")
        if k == 1:
            return 1
        return min(k - 1, m) + min(k - 1, n)
    raise ValueError(f"no closed formula for family {family!r}")


def small_order_value(g: Graph, k: int) -> int | None:
    """Exact L_k for graphs of order at most k+1; None when the order is larger."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    n = g.n
    if n <= k:
        return n
    if n == k + 1:
        max_deg = max(g.degrees(), default=0)
        return k if max_deg == k else k + 1
    return None


# ---------------------------------------------------------------------------
# bound entries

def lower_bounds(g: Graph, k: int, p: GraphProfile, aux: AuxValues | None = None) -> list[BoundEntry]:
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    aux = aux or AuxValues()
    n = g.n
    dmax = p.max_degree
    out = []

    out.append(_entry(
        "exact-order-le-k", "exact", "n <= k", "prop-small-order",
        applicable=n <= k, value=n))
    kp1 = n == k + 1
    out.append(_entry(
        "exact-order-k-plus-1", "exact", "n == k+1", "prop-order-kplus1",
        applicable=kp1, value=(k if dmax == k else k + 1) if kp1 else None))
    out.append(_entry(
        "order-lower", "lower", "n >= k+2", "prop-lk-geq-k",
        applicable=n >= k + 2, value=k))

    diam_ok = p.connected and p.diameter is not None
    out.append(_entry(
        "diam-lower", "lower", "connected and k in {1,2}", "lem-diam-lower-k12",
        applicable=diam_ok and k in (1, 2),
        value=-(-(k + k * p.diameter) // 3) if diam_ok else None))
    out.append(_entry(
        "diam-lower-k3", "lower", "connected and max_degree >= k >= 3", "th-diam-lower-k3",
        applicable=diam_ok and k >= 3 and dmax >= k,
        value=(p.diameter + k - 2) if diam_ok else None))

    girth = p.girth
    if k == 1:
        g_ok, g_val, g_cite = girth is not None, (girth or 0) // 3, "th-girth-l1"
        g_hyp = "girth finite and k == 1"
    elif k == 2:
        g_ok, g_val, g_cite = girth is not None, 2 * (girth or 0) // 3, "th-girth-l2-lk"
        g_hyp = "girth finite and k == 2"
    else:
        g_ok, g_val, g_cite = girth is not None and dmax >= k, (girth or 0) + k - 3, "th-girth-l2-lk"
        g_hyp = "girth finite and max_degree >= k >= 3"
    out.append(_entry("girth-lower", "lower", g_hyp, g_cite, applicable=g_ok, value=g_val))

    if k == 1:
        denom = dmax * dmax + 1
        out.append(_entry(
            "maxdeg-sq-lower", "lower", "k == 1", "lem-l1-maxdeg-lower",
            applicable=n >= 1, value=-(-n // denom), raw=f"{n}/{denom}"))

    out.append(_entry(
        "chain-lower", "lower", "k >= 2 and max_degree >= k-1, needs exact L_1",
        "lem-monotone-chain",
        applicable=k >= 2 and dmax >= k - 1 and aux.l1 is not None,
        value=(aux.l1 + k - 1) if aux.l1 is not None else None))

    out.append(_entry(
        "openpack-half-lower", "lower", "k == 1, needs exact rho0", "lem-openpack-sandwich",
        applicable=k == 1 and aux.rho0 is not None,
        value=-(-(aux.rho0 or 0) // 2) if aux.rho0 is not None else None,
        raw=f"{aux.rho0}/2" if aux.rho0 is not None else None))
    out.append(_entry(
        "openpack-lower", "lower", "tree and k == 2, needs exact rho0",
        "th-classT-characterization",
        applicable=k == 2 and p.is_tree and aux.rho0 is not None,
        value=aux.rho0))

    out.sort(key=lambda e: e.id)
    return out


def upper_bounds(g: Graph, k: int, p: GraphProfile, aux: AuxValues | None = None) -> list[BoundEntry]:
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    aux = aux or AuxValues()
    n = g.n
    dmax, dmin = p.max_degree, p.min_degree
    edge_count = g.edge_count()
    out = []

    out.append(_entry(
        "kgamma-upper", "upper", "needs exact gamma", "lem-kgamma",
        applicable=aux.gamma is not None,
        value=k * aux.gamma if aux.gamma is not None else None))
    out.append(_entry(
        "mindeg-ratio-upper", "upper", "always", "lem-delta-upper",
        applicable=n >= 1, value=k * n // (dmin + 1), raw=f"{k * n}/{dmin + 1}"))
    out.append(_entry(
        "order-degree-upper", "upper", "always", "th-order-degree-upper",
        applicable=n >= 1, value=n + k - 1 - dmax))

    connected = p.connected
    out.append(_entry(
        "improved-diam-upper", "upper", "connected and k == 2", "th-improved-diam-upper",
        applicable=connected and k == 2 and p.diameter is not None,
        value=(n + 1 - dmax - (p.diameter - 4) // 3) if p.diameter is not None else None))
    out.append(_entry(
        "four-fifths-upper", "upper", "connected, n >= 3, k == 2", "lem-45-upper",
        applicable=connected and n >= 3 and k == 2,
        value=4 * n // 5, raw=f"{4 * n}/5"))
    out.append(_entry(
        "deg-ratio-upper", "upper", "connected and min_degree >= k", "lem-kk1-upper",
        applicable=connected and dmin >= k,
        value=k * n // (k + 1), raw=f"{k * n}/{k + 1}"))
    out.append(_entry(
        "tree-nonleaf-upper", "upper",
        "tree with every internal vertex of degree >= 4, k == 2", "th-tree-deltaprime",
        applicable=k == 2 and p.is_tree and p.min_nonleaf_degree is not None
        and p.min_nonleaf_degree >= 4,
        value=2 * n // 3, raw=f"{2 * n}/3"))
    out.append(_entry(
        "l1-ratio-upper", "upper", "k == 2 and graph has an edge, needs exact L_1",
        "prop-l1-l2-sandwich",
        applicable=k == 2 and edge_count >= 1 and aux.l1 is not None,
        value=(2 * (dmax * dmax + 1) * aux.l1) // (dmin + 1) if aux.l1 is not None else None,
        raw=f"{2 * (dmax * dmax + 1) * aux.l1}/{dmin + 1}" if aux.l1 is not None else None))
    out.append(_entry(
        "openpack-upper", "upper", "k == 1, needs exact rho0", "lem-openpack-sandwich",
        applicable=k == 1 and aux.rho0 is not None, value=aux.rho0))
    out.append(_entry(
        "double-openpack-upper", "upper", "tree and k == 2, needs exact rho0",
        "th-classT-characterization",
        applicable=k == 2 and p.is_tree and aux.rho0 is not None,
        value=2 * aux.rho0 if aux.rho0 is not None else None))

    out.append(_entry(
        "universal-vertex-exact", "exact", "k == 2, n >= 2, max_degree == n-1",
        "lem-maxdeg-n1",
        applicable=k == 2 and n >= 2 and dmax == n - 1, value=2))
    out.append(_entry(
        "cutvertex-diam2-exact", "exact", "k == 2, diameter 2, has a cut vertex",
        "lem-cutvertex-diam2",
        applicable=k == 2 and p.diameter == 2 and p.cut_vertices != 0, value=2))

    out.sort(key=lambda e: e.id)
    return out


@dataclass(frozen=True)
class BoundReport:
    graph6: str
    k: int
    n: int
    entries: tuple[BoundEntry, ...]
    exact: int | None

    def best_lower(self) -> int | None:
        vals = [e.value for e in self.entries
                if e.applicable and e.direction in ("lower", "exact")]
        return max(vals) if vals else None

    def best_upper(self) -> int | None:
        vals = [e.value for e in self.entries
                if e.applicable and e.direction in ("upper", "exact")]
        return min(vals) if vals else None

    def as_dict(self) -> dict:
        return {
            "graph6": self.graph6,
            "k": self.k,
            "n": self.n,
            "exact": self.exact,
            "best_lower": self.best_lower(),
            "best_upper": self.best_upper(),
            "entries": [e.as_dict() for e in self.entries],
        }


def bound_report(g: Graph, k: int, with_exact: bool = False) -> BoundReport:
    """Assemble every bound entry for (g, k), solving for aux parameters.

    Auxiliary exact values (gamma, L_1, rho0) are solver calls, so they are
    only attempted within the enumeration guard; otherwise those entries are
    inapplicable.
    """
    p = profile(g)
    aux = AuxValues()
    if g.n <= solvers.ORACLE_LIMIT:
        aux = AuxValues(
            gamma=solvers.domination_number(g).value,
            l1=solvers.limited_packing_number(g, 1).value,
            rho0=solvers.open_packing_number(g).value,
        )
    entries = tuple(lower_bounds(g, k, p, aux) + upper_bounds(g, k, p, aux))
    exact = solvers.limited_packing_number(g, k).value if with_exact else None
    return BoundReport(emit_graph6(g), k, g.n, entries, exact)


# ---------------------------------------------------------------------------
# Nordhaus-Gaddum sums

@dataclass(frozen=True)
class NGReport:
    graph6: str
    k: int
    n: int
    value: int
    value_complement: int
    total: int
    lower_bound: int
    lower_applicable: bool
    upper_bound: int
    case: str               # both-small-delta | both-large-delta | mixed
    refinement_upper: int | None  # n+2 when k == 2

    def as_dict(self) -> dict:
        return {
            "graph6": self.graph6,
            "k": self.k,
            "n": self.n,
            "value": self.value,
            "value_complement": self.value_complement,
            "total": self.total,
            "lower_bound": self.lower_bound,
            "lower_applicable": self.lower_applicable,
            "upper_bound": self.upper_bound,
            "case": self.case,
            "refinement_upper": self.refinement_upper,
        }


def nordhaus_gaddum(g: Graph, k: int, method: str = "auto") -> NGReport:
    """Exact L_k(G) + L_k(complement) with the matching case-split upper bound."""
    gbar = complement(g)
    val = solvers.limited_packing_number(g, k, method).value
    val_bar = solvers.limited_packing_number(gbar, k, method).value
    n = g.n
    dmax = max(g.degrees(), default=0)
    dmax_bar = max(gbar.degrees(), default=0)
    if k >= max(dmax, dmax_bar) + 1:
        case, upper = "both-small-delta", 2 * n
    elif k <= min(dmax, dmax_bar):
        case, upper = "both-large-delta", n + 2 * k - 2
    else:
        case, upper = "mixed", 2 * n - 1
    return NGReport(
        graph6=emit_graph6(g), k=k, n=n,
        value=val, value_complement=val_bar, total=val + val_bar,
        lower_bound=2 * k, lower_applicable=n >= k,
        upper_bound=upper, case=case,
        refinement_upper=n + 2 if k == 2 else None)


def ng_lower_equality_condition(g: Graph, k: int) -> bool:
    """Structural test for L_k(G) + L_k(complement) == 2k.

    Either the graph has exactly k vertices, or every (k+1)-subset X satisfies
    one of: (a) some vertex of X is adjacent to the rest of X and some outside
    vertex misses all of X; (b) some outside vertex covers all of X and X has
    an isolated vertex in its induced subgraph; (c) one outside vertex covers
    all of X and another outside vertex misses all of X.
    """
    n = g.n
    if n == k:
        return True
    if n < k + 1:
        return False
    adj = g.adj
    for combo in combinations(range(n), k + 1):
        x_mask = 0
        for v in combo:
            x_mask |= 1 << v
        max_deg_k = any((adj[v] & x_mask).bit_count() == k for v in combo)
        isolated = any(adj[v] & x_mask == 0 for v in combo)
        cover = miss = False
        for u in range(n):
            if x_mask >> u & 1:
                continue
            if adj[u] & x_mask == x_mask:
                cover = True
            if adj[u] & x_mask == 0:
                miss = True
        if not ((max_deg_k and miss) or (cover and isolated) or (cover and miss)):
            return False
    return True


# ---------------------------------------------------------------------------
# regular graphs attaining the order/degree upper bound

@dataclass(frozen=True)
class RegularEqualityResult:
    regular: bool
    degree: int | None
    applicable: bool        # regular and k <= degree
    premise_holds: bool     # L_k == n + k - 1 - degree
    conclusion_holds: bool  # 2*degree >= n
    vacuous: bool
    passed: bool


def regular_equality_check(g: Graph, k: int, method: str = "auto") -> RegularEqualityResult:
    degs = g.degrees()
    regular = g.n >= 1 and min(degs) == max(degs)
    d = degs[0] if regular else None
    applicable = regular and k <= (d or 0)
    premise = False
    if applicable:
        premise = solvers.limited_packing_number(g, k, method).value == g.n + k - 1 - d
    conclusion = regular and 2 * (d or 0) >= g.n
    vacuous = not (applicable and premise)
    return RegularEqualityResult(regular, d, applicable, premise, conclusion,
                                 vacuous, vacuous or conclusion)
