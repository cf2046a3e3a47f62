"""Verification campaign: statement evaluators, verdicts, and JSON reports.

Every registered statement id maps to an evaluator.  Per-graph evaluators run
against each corpus graph (once, or once per k); standalone evaluators sweep
their own constructed instances.  A check is "substantive" when the statement's
hypothesis held, and "positive" when its sharp side was exercised: membership
for characterizations, a tight value for inequalities, a satisfied premise for
exact-conclusion implications.

Evaluators compare structure against exact solver output, so a violation is
evidence of an implementation bug and carries both sides plus the graph6
string for standalone replay.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterable

from . import bounds, solvers
from .extremal import (check_Lk_equals_k, construct_comb, construct_diam2,
                       construct_family, construct_spider,
                       construct_tree_prescribed, is_spider_below_max_degree,
                       recognize_class_G, recognize_class_T)
from .graphs import Graph, complement, emit_graph6, parse_graph6, profile


def _tool_version() -> str:
    from . import __version__
    return f"limpack {__version__}"


# ---------------------------------------------------------------------------
# per-graph fact cache

_UNSET = object()


class GraphFacts:
    """Lazily computed exact parameters for one graph.

    Solver policy is limited_packing_number's default: subset oracle through
    12 vertices, branch and bound beyond.
    """

    __slots__ = ("g", "n", "_g6", "_profile", "_comp", "_lk", "_lk_bar",
                 "_gamma", "_rho0", "_gamma_t", "_eq_k", "_ng_eq",
                 "_class_g", "_class_t", "_spider")

    def __init__(self, g: Graph):
        self.g = g
        self.n = g.n
        self._g6 = None
        self._profile = None
        self._comp = None
        self._lk: dict[int, int] = {}
        self._lk_bar: dict[int, int] = {}
        self._gamma = None
        self._rho0 = None
        self._gamma_t = None
        self._eq_k: dict[int, bool] = {}
        self._ng_eq: dict[int, bool] = {}
        self._class_g = _UNSET
        self._class_t = _UNSET
        self._spider = _UNSET

    @property
    def graph6(self) -> str:
        if self._g6 is None:
            self._g6 = emit_graph6(self.g)
        return self._g6

    @property
    def profile(self):
        if self._profile is None:
            self._profile = profile(self.g)
        return self._profile

    def lk(self, k: int) -> int:
        if k not in self._lk:
            self._lk[k] = solvers.limited_packing_number(self.g, k).value
        return self._lk[k]

    def lk_bar(self, k: int) -> int:
        if k not in self._lk_bar:
            if self._comp is None:
                self._comp = complement(self.g)
            self._lk_bar[k] = solvers.limited_packing_number(self._comp, k).value
        return self._lk_bar[k]

    @property
    def gamma(self) -> int:
        if self._gamma is None:
            self._gamma = solvers.domination_number(self.g).value
        return self._gamma

    @property
    def rho0(self) -> int:
        if self._rho0 is None:
            self._rho0 = solvers.open_packing_number(self.g).value
        return self._rho0

    @property
    def gamma_t(self) -> int:
        if self._gamma_t is None:
            self._gamma_t = solvers.total_domination_number(self.g).value
        return self._gamma_t

    def structural_lk_eq_k(self, k: int) -> bool:
        if k not in self._eq_k:
            self._eq_k[k] = check_Lk_equals_k(self.g, k)
        return self._eq_k[k]

    def ng_equality(self, k: int) -> bool:
        if k not in self._ng_eq:
            self._ng_eq[k] = bounds.ng_lower_equality_condition(self.g, k)
        return self._ng_eq[k]

    @property
    def class_g_witness(self):
        if self._class_g is _UNSET:
            self._class_g = recognize_class_G(self.g)
        return self._class_g

    @property
    def class_t_witness(self):
        if self._class_t is _UNSET:
            self._class_t = recognize_class_T(self.g)
        return self._class_t

    @property
    def spider_member(self) -> bool:
        if self._spider is _UNSET:
            self._spider = is_spider_below_max_degree(self.g)
        return self._spider


# ---------------------------------------------------------------------------
# evaluator outcomes

@dataclass(frozen=True)
class Outcome:
    substantive: bool
    positive: bool = False
    detail: str | None = None


SKIP = Outcome(False)
PASS = Outcome(True, False)
POSITIVE = Outcome(True, True)


def _bad(detail: str) -> Outcome:
    return Outcome(True, False, detail)


# ---------------------------------------------------------------------------
# per-k evaluators

def _ev_kgamma(f: GraphFacts, k: int) -> Outcome:
    lk, gam = f.lk(k), f.gamma
    if lk > k * gam:
        return _bad(f"L_{k}={lk} exceeds k*gamma={k * gam}")
    return Outcome(True, lk == k * gam)


def _ev_delta_upper(f: GraphFacts, k: int) -> Outcome:
    lk, dmin = f.lk(k), f.profile.min_degree
    if lk * (dmin + 1) > k * f.n:
        return _bad(f"L_{k}={lk} exceeds k*n/(min_degree+1)={k * f.n}/{dmin + 1}")
    return Outcome(True, lk * (dmin + 1) == k * f.n)


def _ev_monotone_chain(f: GraphFacts, k: int) -> Outcome:
    dmax = f.profile.max_degree
    substantive = False
    fails = []
    if k <= dmax:
        substantive = True
        if f.lk(k + 1) < f.lk(k) + 1:
            fails.append(f"L_{k + 1}={f.lk(k + 1)} < L_{k}+1={f.lk(k) + 1}")
    if k >= 2 and dmax >= k - 1:
        substantive = True
        if f.lk(k) < f.lk(1) + k - 1:
            fails.append(f"L_{k}={f.lk(k)} < L_1+k-1={f.lk(1) + k - 1}")
    if not substantive:
        return SKIP
    return _bad("; ".join(fails)) if fails else POSITIVE


def _ev_diam_lower_k12(f: GraphFacts, k: int) -> Outcome:
    p = f.profile
    if k not in (1, 2) or not p.connected:
        return SKIP
    need = -(-(k + k * p.diameter) // 3)
    if f.lk(k) < need:
        return _bad(f"L_{k}={f.lk(k)} < ceil((k+k*diam)/3)={need} at diam={p.diameter}")
    return Outcome(True, f.lk(k) == need)


def _ev_small_order(f: GraphFacts, k: int) -> Outcome:
    if f.n > k:
        return SKIP
    if f.lk(k) != f.n:
        return _bad(f"order {f.n} <= k but L_{k}={f.lk(k)}")
    return POSITIVE


def _ev_order_kplus1(f: GraphFacts, k: int) -> Outcome:
    if f.n != k + 1:
        return SKIP
    expect = k if f.profile.max_degree == k else k + 1
    if f.lk(k) != expect:
        return _bad(f"order k+1 with max_degree={f.profile.max_degree}: "
                    f"L_{k}={f.lk(k)}, expected {expect}")
    return POSITIVE


def _ev_lk_geq_k(f: GraphFacts, k: int) -> Outcome:
    if f.n < k + 2:
        return SKIP
    if f.lk(k) < k:
        return _bad(f"order {f.n} >= k+2 but L_{k}={f.lk(k)} < {k}")
    return Outcome(True, f.lk(k) == k)


def _ev_lk_eq_k_characterization(f: GraphFacts, k: int) -> Outcome:
    semantic = f.lk(k) == k
    structural = f.structural_lk_eq_k(k)
    if semantic != structural:
        return _bad(f"L_{k}={f.lk(k)} but structural test says {structural}")
    return Outcome(True, semantic)


def _ev_diam_le_2(f: GraphFacts, k: int) -> Outcome:
    if f.n < k + 1 or f.lk(k) != k:
        return SKIP
    p = f.profile
    if p.diameter is None or p.diameter > 2:
        return _bad(f"L_{k}=k on order {f.n} but diameter={p.diameter}")
    return POSITIVE


def _ev_diam_lower_k3(f: GraphFacts, k: int) -> Outcome:
    p = f.profile
    if k < 3 or not p.connected or p.max_degree < k:
        return SKIP
    need = p.diameter + k - 2
    if f.lk(k) < need:
        return _bad(f"L_{k}={f.lk(k)} < diam+k-2={need}")
    return Outcome(True, f.lk(k) == need)


def _ev_girth_l2_lk(f: GraphFacts, k: int) -> Outcome:
    girth = f.profile.girth
    if girth is None or k < 2:
        return SKIP
    if k == 2:
        need = 2 * girth // 3
        label = "floor(2*girth/3)"
    else:
        if f.profile.max_degree < k:
            return SKIP
        need = girth + k - 3
        label = "girth+k-3"
    if f.lk(k) < need:
        return _bad(f"L_{k}={f.lk(k)} < {label}={need} at girth={girth}")
    return Outcome(True, f.lk(k) == need)


def _ev_order_degree_upper(f: GraphFacts, k: int) -> Outcome:
    cap = f.n + k - 1 - f.profile.max_degree
    if f.lk(k) > cap:
        return _bad(f"L_{k}={f.lk(k)} > n+k-1-max_degree={cap}")
    return Outcome(True, f.lk(k) == cap)


def _ev_regular_half(f: GraphFacts, k: int) -> Outcome:
    p = f.profile
    if f.n < 1 or p.min_degree != p.max_degree or k > p.max_degree:
        return SKIP
    d = p.max_degree
    if f.lk(k) != f.n + k - 1 - d:
        return SKIP
    if 2 * d < f.n:
        return _bad(f"{d}-regular with L_{k}=n+k-1-d but 2d={2 * d} < n={f.n}")
    return POSITIVE


def _ev_ng_lower(f: GraphFacts, k: int) -> Outcome:
    if f.n < k:
        return SKIP
    total = f.lk(k) + f.lk_bar(k)
    if total < 2 * k:
        return _bad(f"L_{k}(G)+L_{k}(complement)={total} < 2k={2 * k}")
    cond = f.ng_equality(k)
    if (total == 2 * k) != cond:
        return _bad(f"sum={total} vs 2k={2 * k}, structural equality condition={cond}")
    return Outcome(True, total == 2 * k)


def _ev_ng_upper(f: GraphFacts, k: int) -> Outcome:
    p = f.profile
    dmax = p.max_degree
    dmax_bar = max(f.n - 1 - p.min_degree, 0)
    if k >= max(dmax, dmax_bar) + 1:
        cap, case = 2 * f.n, "both-small-delta"
    elif k <= min(dmax, dmax_bar):
        cap, case = f.n + 2 * k - 2, "both-large-delta"
    else:
        cap, case = 2 * f.n - 1, "mixed"
    total = f.lk(k) + f.lk_bar(k)
    if total > cap:
        return _bad(f"L_{k}(G)+L_{k}(complement)={total} > {case} bound={cap}")
    return Outcome(True, total == cap)


def _ev_kk1_upper(f: GraphFacts, k: int) -> Outcome:
    p = f.profile
    if not p.connected or p.min_degree < k:
        return SKIP
    if f.lk(k) * (k + 1) > k * f.n:
        return _bad(f"L_{k}={f.lk(k)} exceeds k*n/(k+1)={k * f.n}/{k + 1}")
    return Outcome(True, f.lk(k) * (k + 1) == k * f.n)


# ---------------------------------------------------------------------------
# once-per-graph evaluators (these fix their own k)

def _ev_l1_eq_1_iff_diam2(f: GraphFacts) -> Outcome:
    p = f.profile
    small = p.diameter is not None and p.diameter <= 2
    if (f.lk(1) == 1) != small:
        return _bad(f"L_1={f.lk(1)} but diameter={p.diameter}")
    return Outcome(True, f.lk(1) == 1)


def _ev_open_packing_diam2(f: GraphFacts) -> Outcome:
    p = f.profile
    if p.diameter is None or p.diameter > 2:
        return SKIP
    if f.rho0 > 2:
        return _bad(f"rho0={f.rho0} > 2 at diameter={p.diameter}")
    return POSITIVE


def _ev_rho_eq_gammat_trees(f: GraphFacts) -> Outcome:
    if not f.profile.is_tree or f.n < 2:
        return SKIP
    if f.rho0 != f.gamma_t:
        return _bad(f"tree with rho0={f.rho0} != gamma_t={f.gamma_t}")
    return POSITIVE


def _ev_l1_eq_gamma_trees(f: GraphFacts) -> Outcome:
    if not f.profile.is_tree:
        return SKIP
    if f.lk(1) != f.gamma:
        return _bad(f"tree with L_1={f.lk(1)} != gamma={f.gamma}")
    return POSITIVE


def _ev_ng_l2_n_plus_2(f: GraphFacts) -> Outcome:
    total = f.lk(2) + f.lk_bar(2)
    if total > f.n + 2:
        return _bad(f"L_2(G)+L_2(complement)={total} > n+2={f.n + 2}")
    return Outcome(True, total == f.n + 2)


def _ev_l1_maxdeg_lower(f: GraphFacts) -> Outcome:
    denom = f.profile.max_degree ** 2 + 1
    if f.lk(1) * denom < f.n:
        return _bad(f"L_1={f.lk(1)} below n/(max_degree^2+1)={f.n}/{denom}")
    return Outcome(True, f.lk(1) == -(-f.n // denom))


def _ev_girth_l1(f: GraphFacts) -> Outcome:
    girth = f.profile.girth
    if girth is None:
        return SKIP
    need = girth // 3
    if f.lk(1) < need:
        return _bad(f"L_1={f.lk(1)} < floor(girth/3)={need} at girth={girth}")
    return Outcome(True, f.lk(1) == need)


def _ev_class_g(f: GraphFacts) -> Outcome:
    target = f.n + 1 - f.profile.max_degree
    semantic = f.lk(2) == target
    member = f.class_g_witness is not None
    if semantic != member:
        return _bad(f"L_2={f.lk(2)} vs n+1-max_degree={target}, "
                    f"witness {'found' if member else 'absent'}")
    return Outcome(True, semantic)


def _ev_45_upper(f: GraphFacts) -> Outcome:
    p = f.profile
    if not p.connected or f.n < 3:
        return SKIP
    if 5 * f.lk(2) > 4 * f.n:
        return _bad(f"L_2={f.lk(2)} exceeds 4n/5={4 * f.n}/5")
    return Outcome(True, 5 * f.lk(2) == 4 * f.n)


def _ev_tree_deltaprime(f: GraphFacts) -> Outcome:
    p = f.profile
    if not p.is_tree or p.min_nonleaf_degree is None or p.min_nonleaf_degree < 4:
        return SKIP
    if 3 * f.lk(2) > 2 * f.n:
        return _bad(f"L_2={f.lk(2)} exceeds 2n/3={2 * f.n}/3")
    return POSITIVE


def _ev_maxdeg_n1(f: GraphFacts) -> Outcome:
    if f.n < 2 or f.profile.max_degree != f.n - 1:
        return SKIP
    if f.lk(2) != 2:
        return _bad(f"max_degree=n-1 but L_2={f.lk(2)}")
    return POSITIVE


def _ev_cutvertex_diam2(f: GraphFacts) -> Outcome:
    p = f.profile
    if p.diameter != 2 or p.cut_vertices == 0:
        return SKIP
    if f.lk(2) != 2:
        return _bad(f"diameter 2 with a cut vertex but L_2={f.lk(2)}")
    return POSITIVE


def _ev_improved_diam_upper(f: GraphFacts) -> Outcome:
    p = f.profile
    if not p.connected:
        return SKIP
    cap = f.n + 1 - p.max_degree - (p.diameter - 4) // 3
    if f.lk(2) > cap:
        return _bad(f"L_2={f.lk(2)} > n+1-max_degree-floor((diam-4)/3)={cap}")
    return Outcome(True, f.lk(2) == cap)


def _ev_openpack_sandwich(f: GraphFacts) -> Outcome:
    l1, r = f.lk(1), f.rho0
    if not l1 <= r <= 2 * l1:
        return _bad(f"rho0={r} outside [L_1, 2L_1]=[{l1}, {2 * l1}]")
    return Outcome(True, r == l1 or r == 2 * l1)


def _ev_l1_l2_sandwich(f: GraphFacts) -> Outcome:
    if f.g.edge_count() == 0:
        return SKIP
    p = f.profile
    l1, l2 = f.lk(1), f.lk(2)
    fails = []
    if l2 < l1 + 1:
        fails.append(f"L_2={l2} < L_1+1={l1 + 1}")
    if l2 * (p.min_degree + 1) > 2 * (p.max_degree ** 2 + 1) * l1:
        fails.append(f"L_2={l2} exceeds 2(max_degree^2+1)L_1/(min_degree+1)"
                     f"={2 * (p.max_degree ** 2 + 1) * l1}/{p.min_degree + 1}")
    if fails:
        return _bad("; ".join(fails))
    return Outcome(True, l2 == l1 + 1)


def _ev_spider_characterization(f: GraphFacts) -> Outcome:
    p = f.profile
    if not p.is_tree or f.n < 2:
        return SKIP
    l1, l2 = f.lk(1), f.lk(2)
    member = f.spider_member
    fails = []
    if not l1 + 1 <= l2 <= 2 * l1:
        fails.append(f"L_2={l2} outside [L_1+1, 2L_1]=[{l1 + 1}, {2 * l1}]")
    if (l2 == l1 + 1) != member:
        fails.append(f"L_2-L_1={l2 - l1} but spider-below-max-degree={member}")
    if fails:
        return _bad("; ".join(fails))
    return Outcome(True, member)


def _ev_class_t_characterization(f: GraphFacts) -> Outcome:
    p = f.profile
    if not p.is_tree or f.n < 2:
        return SKIP
    r, l2 = f.rho0, f.lk(2)
    member = f.class_t_witness is not None
    fails = []
    if not r <= l2 <= 2 * r:
        fails.append(f"L_2={l2} outside [rho0, 2*rho0]=[{r}, {2 * r}]")
    if (r == l2) != member:
        fails.append(f"rho0={r}, L_2={l2} but witness {'found' if member else 'absent'}")
    if fails:
        return _bad("; ".join(fails))
    return Outcome(True, member)


# ---------------------------------------------------------------------------
# standalone evaluators: family formulas and constructions

def _formula_run(family: str, instances: list) -> tuple[int, int, int, list]:
    checked = substantive = positives = 0
    violations = []
    for params, g, label in instances:
        checked += 1
        for k in (1, 2, 3, 4):
            expect = bounds.closed_form(family, params, k)
            got = solvers.limited_packing_oracle(g, k).value
            substantive += 1
            if got != expect:
                violations.append({"graph6": emit_graph6(g), "k": k,
                                   "detail": f"{label}: oracle={got}, formula={expect}"})
            else:
                positives += 1
    return checked, substantive, positives, violations


def _run_path_formula():
    return _formula_run("path", [(n, construct_family("path", n), f"path n={n}")
                                 for n in range(1, 13)])


def _run_cycle_formula():
    return _formula_run("cycle", [(n, construct_family("cycle", n), f"cycle n={n}")
                                  for n in range(3, 13)])


def _run_complete_formula():
    return _formula_run("complete", [(n, construct_family("complete", n), f"complete n={n}")
                                     for n in range(1, 11)])


def _run_bipartite_formula():
    instances = [((m, n), construct_family("complete_bipartite", (m, n)),
                  f"complete_bipartite {m},{n}")
                 for m in range(1, 10) for n in range(m, 10) if m + n <= 10]
    return _formula_run("complete_bipartite", instances)


def _run_diam2_construction(sizes: Iterable[int] = range(2, 6)):
    checked = substantive = positives = 0
    violations = []
    for a in sizes:
        g = construct_diam2(a)
        checked += 1
        substantive += 1
        diam = profile(g).diameter
        l2 = solvers.limited_packing_number(g, 2).value
        if diam != 2 or l2 != a:
            violations.append({"graph6": emit_graph6(g), "k": 2,
                               "detail": f"a={a}: diameter={diam}, L_2={l2}"})
        else:
            positives += 1
    return checked, substantive, positives, violations


def _run_prescribed_construction(amax: int = 4):
    checked = substantive = positives = 0
    violations = []
    for a in range(2, amax + 1):
        for b in range(a + 1, 2 * a + 1):
            g = construct_tree_prescribed(a, b)
            checked += 1
            substantive += 1
            r = solvers.open_packing_number(g).value
            l1 = solvers.limited_packing_number(g, 1).value
            l2 = solvers.limited_packing_number(g, 2).value
            if (r, l1, l2) != (a, a, b):
                violations.append({"graph6": emit_graph6(g), "k": None,
                                   "detail": f"a={a}, b={b}: rho0={r}, L_1={l1}, L_2={l2}"})
            else:
                positives += 1
    return checked, substantive, positives, violations


# ---------------------------------------------------------------------------
# constructed supplements for the tree characterizations

def _spider_supplements() -> list[Graph]:
    return [construct_spider(t, s)
            for t in range(7) for s in range(7) if 1 + 2 * t + s >= 2]


def _class_t_supplements() -> list[Graph]:
    out = [construct_family("star", m + 1) for m in range(1, 9)]
    out.extend(construct_comb(a) for a in range(1, 5))
    out.extend(construct_comb(2, pat)
               for pat in product(range(3), repeat=2) if any(pat))
    out.extend(construct_comb(3, pat)
               for pat in product(range(3), repeat=3) if 0 < sum(pat) <= 3)
    out.extend(construct_comb(4, pat)
               for pat in product(range(2), repeat=4) if 0 < sum(pat) <= 3)
    return out


# ---------------------------------------------------------------------------
# the registry

@dataclass(frozen=True)
class Evaluator:
    kind: str                                  # per_k | once | standalone
    fn: Callable | None = None
    supplements: Callable | None = None
    runner: Callable | None = None


REGISTRY: dict[str, Evaluator] = {
    "lem-path-formula": Evaluator("standalone", runner=_run_path_formula),
    "lem-cycle-formula": Evaluator("standalone", runner=_run_cycle_formula),
    "lem-complete-formula": Evaluator("standalone", runner=_run_complete_formula),
    "lem-bipartite-formula": Evaluator("standalone", runner=_run_bipartite_formula),
    "lem-kgamma": Evaluator("per_k", fn=_ev_kgamma),
    "lem-delta-upper": Evaluator("per_k", fn=_ev_delta_upper),
    "lem-monotone-chain": Evaluator("per_k", fn=_ev_monotone_chain),
    "lem-l1-eq-1-iff-diam2": Evaluator("once", fn=_ev_l1_eq_1_iff_diam2),
    "lem-open-packing-diam2": Evaluator("once", fn=_ev_open_packing_diam2),
    "lem-rho-eq-gammat-trees": Evaluator("once", fn=_ev_rho_eq_gammat_trees),
    "lem-l1-eq-gamma-trees": Evaluator("once", fn=_ev_l1_eq_gamma_trees),
    "lem-diam-lower-k12": Evaluator("per_k", fn=_ev_diam_lower_k12),
    "lem-ng-l2-n-plus-2": Evaluator("once", fn=_ev_ng_l2_n_plus_2),
    "lem-l1-maxdeg-lower": Evaluator("once", fn=_ev_l1_maxdeg_lower),
    "prop-small-order": Evaluator("per_k", fn=_ev_small_order),
    "prop-order-kplus1": Evaluator("per_k", fn=_ev_order_kplus1),
    "prop-lk-geq-k": Evaluator("per_k", fn=_ev_lk_geq_k),
    "th-lk-eq-k-characterization": Evaluator("per_k", fn=_ev_lk_eq_k_characterization),
    "cor-diam-le-2": Evaluator("per_k", fn=_ev_diam_le_2),
    "th-diam-lower-k3": Evaluator("per_k", fn=_ev_diam_lower_k3),
    "th-girth-l1": Evaluator("once", fn=_ev_girth_l1),
    "th-girth-l2-lk": Evaluator("per_k", fn=_ev_girth_l2_lk),
    "th-order-degree-upper": Evaluator("per_k", fn=_ev_order_degree_upper),
    "cor-classG": Evaluator("once", fn=_ev_class_g),
    "cor-regular-half": Evaluator("per_k", fn=_ev_regular_half),
    "prop-ng-lower": Evaluator("per_k", fn=_ev_ng_lower),
    "th-ng-upper": Evaluator("per_k", fn=_ev_ng_upper),
    "lem-45-upper": Evaluator("once", fn=_ev_45_upper),
    "lem-kk1-upper": Evaluator("per_k", fn=_ev_kk1_upper),
    "th-tree-deltaprime": Evaluator("once", fn=_ev_tree_deltaprime),
    "th-diam2-construction": Evaluator("standalone", runner=_run_diam2_construction),
    "lem-maxdeg-n1": Evaluator("once", fn=_ev_maxdeg_n1),
    "lem-cutvertex-diam2": Evaluator("once", fn=_ev_cutvertex_diam2),
    "th-improved-diam-upper": Evaluator("once", fn=_ev_improved_diam_upper),
    "lem-openpack-sandwich": Evaluator("once", fn=_ev_openpack_sandwich),
    "prop-l1-l2-sandwich": Evaluator("once", fn=_ev_l1_l2_sandwich),
    "th-spider-characterization": Evaluator("once", fn=_ev_spider_characterization,
                                            supplements=_spider_supplements),
    "th-classT-characterization": Evaluator("once", fn=_ev_class_t_characterization,
                                            supplements=_class_t_supplements),
    "th-prescribed-construction": Evaluator("standalone", runner=_run_prescribed_construction),
}

ALL_THEOREM_IDS: tuple[str, ...] = tuple(sorted(REGISTRY))


# ---------------------------------------------------------------------------
# campaign runner

@dataclass
class TheoremVerdict:
    theorem_id: str
    graphs_checked: int
    substantive_checks: int
    positive_cases: int
    violations: list

    @property
    def status(self) -> str:
        if self.violations:
            return "fail"
        return "vacuous" if self.substantive_checks == 0 else "pass"

    def as_dict(self) -> dict:
        return {
            "theorem_id": self.theorem_id,
            "status": self.status,
            "graphs_checked": self.graphs_checked,
            "substantive_checks": self.substantive_checks,
            "positive_cases": self.positive_cases,
            "violations": self.violations,
        }


@dataclass
class CampaignReport:
    corpus_spec: str
    k_range: list[int]
    verdicts: list[TheoremVerdict]

    @property
    def failed(self) -> bool:
        return any(v.status == "fail" for v in self.verdicts)

    def as_dict(self) -> dict:
        return {
            "tool_version": _tool_version(),
            "corpus_spec": self.corpus_spec,
            "k_range": self.k_range,
            "verdicts": [v.as_dict() for v in self.verdicts],
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2) + "\n"


class _Acc:
    __slots__ = ("graphs", "substantive", "positives", "violations")

    def __init__(self):
        self.graphs = 0
        self.substantive = 0
        self.positives = 0
        self.violations = []


def _absorb(acc: _Acc, out: Outcome, facts: GraphFacts, k: int | None) -> None:
    if not out.substantive:
        return
    acc.substantive += 1
    if out.positive:
        acc.positives += 1
    if out.detail is not None:
        acc.violations.append({"graph6": facts.graph6, "k": k, "detail": out.detail})


def _apply(acc: _Acc, ev: Evaluator, facts: GraphFacts, ks: list[int]) -> None:
    acc.graphs += 1
    if ev.kind == "once":
        _absorb(acc, ev.fn(facts), facts, None)
    else:
        for k in ks:
            _absorb(acc, ev.fn(facts, k), facts, k)


def _violation_key(v: dict):
    return (v["graph6"], -1 if v["k"] is None else v["k"], v["detail"])


def run_campaign(theorem_ids: Iterable[str], corpus, k_range: Iterable[int],
                 registry: dict[str, Evaluator] | None = None,
                 corpus_spec: str | None = None) -> CampaignReport:
    """Evaluate the named statements over a corpus for every k in k_range.

    corpus is any iterable of Graph; a Corpus object contributes its spec
    string to the report (override with corpus_spec for ad hoc iterables).
    """
    registry = REGISTRY if registry is None else registry
    ids = list(dict.fromkeys(theorem_ids))
    unknown = sorted(set(ids) - set(registry))
    if unknown:
        raise ValueError(f"unknown theorem ids: {', '.join(unknown)}")
    ks = sorted(set(k_range))
    if any(k < 1 for k in ks):
        raise ValueError("k values must be >= 1")

    accs = {tid: _Acc() for tid in ids}
    per_graph = [(tid, registry[tid]) for tid in ids if registry[tid].kind != "standalone"]
    if per_graph:
        for g in corpus:
            facts = GraphFacts(g)
            for tid, ev in per_graph:
                _apply(accs[tid], ev, facts, ks)
    for tid in ids:
        ev = registry[tid]
        if ev.kind == "standalone":
            checked, substantive, positives, violations = ev.runner()
            acc = accs[tid]
            acc.graphs += checked
            acc.substantive += substantive
            acc.positives += positives
            acc.violations.extend(violations)
        elif ev.supplements is not None:
            for g in ev.supplements():
                _apply(accs[tid], ev, GraphFacts(g), ks)

    verdicts = [
        TheoremVerdict(tid, accs[tid].graphs, accs[tid].substantive,
                       accs[tid].positives,
                       sorted(accs[tid].violations, key=_violation_key))
        for tid in sorted(accs)
    ]
    spec_text = corpus_spec if corpus_spec is not None else getattr(corpus, "spec", "custom")
    return CampaignReport(spec_text, ks, verdicts)


def replay_violation(theorem_id: str, graph6: str, k: int | None = None,
                     registry: dict[str, Evaluator] | None = None) -> Outcome:
    """Re-run one evaluator on one graph, standalone from a violation record."""
    registry = REGISTRY if registry is None else registry
    if theorem_id not in registry:
        raise ValueError(f"unknown theorem id: {theorem_id}")
    ev = registry[theorem_id]
    if ev.kind == "standalone":
        raise ValueError(f"{theorem_id} sweeps its own instances; rerun the campaign entry")
    facts = GraphFacts(parse_graph6(graph6))
    if ev.kind == "once":
        return ev.fn(facts)
    if k is None:
        raise ValueError(f"{theorem_id} is checked per k; pass the k from the record")
    return ev.fn(facts, k)
