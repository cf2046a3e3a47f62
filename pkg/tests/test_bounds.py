"""Closed formulas, bound reports, and Nordhaus-Gaddum analysis."""
import json

import pytest

from limpack import (Graph, bound_report, closed_form, construct_family,
                     limited_packing_oracle, ng_lower_equality_condition,
                     nordhaus_gaddum, open_packing_number, profile,
                     regular_equality_check, small_order_value)
from limpack.corpus import enumerate_labeled_graphs


def petersen() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, 5 + i) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, edges)


def entry(report, eid):
    matches = [e for e in report.entries if e.id == eid]
    assert len(matches) == 1, f"entry {eid} missing"
    return matches[0]


# ---------------------------------------------------------------------------
# closed formulas

def test_closed_form_matches_oracle():
    for n in range(1, 11):
        for k in range(1, 5):
            assert closed_form("path", n, k) == \
                limited_packing_oracle(construct_family("path", n), k).value
    for n in range(3, 11):
        for k in range(1, 5):
            assert closed_form("cycle", n, k) == \
                limited_packing_oracle(construct_family("cycle", n), k).value
    for n in range(1, 9):
        for k in range(1, 5):
            assert closed_form("complete", n, k) == \
                limited_packing_oracle(construct_family("complete", n), k).value
    for m in range(1, 8):
        for n in range(m, 8):
            if m + n > 8:
                continue
            for k in range(1, 5):
                got = limited_packing_oracle(
                    construct_family("complete_bipartite", (m, n)), k).value
                assert closed_form("complete_bipartite", (m, n), k) == got


def test_closed_form_spot_values():
    assert closed_form("path", 7, 2) == 5            # ceil(14/3)
    assert closed_form("cycle", 9, 2) == 6           # floor(18/3)
    assert closed_form("cycle", 7, 3) == 7           # k >= 3 saturates a cycle
    assert closed_form("complete", 9, 3) == 3
    assert closed_form("complete_bipartite", (3, 4), 1) == 1
    assert closed_form("complete_bipartite", (3, 4), 3) == 4


def test_closed_form_errors():
    with pytest.raises(ValueError):
        closed_form("hypercube", 3, 1)
    with pytest.raises(ValueError):
        closed_form("cycle", 2, 1)
    with pytest.raises(ValueError):
        closed_form("path", 3, 0)


def test_small_order_value():
    assert small_order_value(construct_family("complete", 3), 3) == 3
    assert small_order_value(construct_family("path", 4), 3) == 4     # max degree 2 != 3
    assert small_order_value(construct_family("star", 4), 3) == 3     # max degree 3 == 3
    assert small_order_value(construct_family("path", 5), 3) is None


# ---------------------------------------------------------------------------
# bound report entries

def test_report_path10_k2():
    rep = bound_report(construct_family("path", 10), 2, with_exact=True)
    assert rep.exact == 7
    assert entry(rep, "diam-lower").value == 7
    assert entry(rep, "diam-lower").applicable
    assert entry(rep, "diam-lower").citation == "lem-diam-lower-k12"
    assert entry(rep, "improved-diam-upper").value == 8
    assert rep.best_lower() == 7 and rep.best_upper() == 8


def test_report_path12_improved_diam():
    rep = bound_report(construct_family("path", 12), 2)
    assert entry(rep, "improved-diam-upper").value == 9
    assert entry(rep, "four-fifths-upper").value == 9    # floor(48/5)


def test_report_c6_mindeg_ratio():
    rep = bound_report(construct_family("cycle", 6), 2)
    e = entry(rep, "mindeg-ratio-upper")
    assert e.applicable and e.value == 4
    assert entry(rep, "deg-ratio-upper").applicable      # connected, min degree 2 >= 2
    assert entry(rep, "deg-ratio-upper").value == 4


def test_report_petersen_girth():
    rep = bound_report(petersen(), 3, with_exact=True)
    e = entry(rep, "girth-lower")
    assert e.applicable and e.value == 5
    assert e.citation == "th-girth-l2-lk"
    rep1 = bound_report(petersen(), 1)
    e1 = entry(rep1, "girth-lower")
    assert e1.applicable and e1.value == 1 and e1.citation == "th-girth-l1"
    assert entry(rep1, "maxdeg-sq-lower").value == 1     # ceil(10/10)


def test_report_small_order_exact_entries():
    rep = bound_report(construct_family("complete", 3), 3, with_exact=True)
    e = entry(rep, "exact-order-le-k")
    assert e.applicable and e.value == 3 and rep.exact == 3
    rep = bound_report(construct_family("star", 4), 3)
    e = entry(rep, "exact-order-k-plus-1")
    assert e.applicable and e.value == 3


def test_report_universal_vertex_and_cutvertex():
    rep = bound_report(construct_family("star", 5), 2, with_exact=True)
    assert entry(rep, "universal-vertex-exact").applicable
    assert entry(rep, "universal-vertex-exact").value == 2 == rep.exact
    e = entry(rep, "cutvertex-diam2-exact")
    assert e.applicable and e.value == 2


def test_report_tree_entries():
    rep = bound_report(construct_family("path", 6), 2, with_exact=True)
    assert entry(rep, "openpack-lower").applicable
    assert entry(rep, "openpack-lower").value == 4       # rho0(P_6)
    assert entry(rep, "double-openpack-upper").value == 8
    assert rep.exact == 4
    # non-tree: both inapplicable
    rep = bound_report(construct_family("cycle", 6), 2)
    assert not entry(rep, "openpack-lower").applicable
    assert not entry(rep, "double-openpack-upper").applicable


def test_report_soundness_exhaustive():
    for n in range(1, 6):
        for g in enumerate_labeled_graphs(n):
            for k in (1, 2, 3):
                rep = bound_report(g, k, with_exact=True)
                for e in rep.entries:
                    if not e.applicable:
                        continue
                    if e.direction == "lower":
                        assert e.value <= rep.exact, (g.edges(), k, e.id)
                    elif e.direction == "upper":
                        assert rep.exact <= e.value, (g.edges(), k, e.id)
                    else:
                        assert rep.exact == e.value, (g.edges(), k, e.id)
                assert rep.best_lower() <= rep.exact <= rep.best_upper()


def test_report_json_shape_and_determinism():
    rep = bound_report(construct_family("path", 5), 2, with_exact=True)
    d = rep.as_dict()
    assert list(d) == ["graph6", "k", "n", "exact", "best_lower", "best_upper",
                       "entries"]
    assert list(d["entries"][0]) == ["id", "direction", "applicable", "value",
                                     "raw", "hypothesis", "citation"]
    again = bound_report(construct_family("path", 5), 2, with_exact=True)
    assert json.dumps(d) == json.dumps(again.as_dict())
    ids = [e["id"] for e in d["entries"]]
    assert len(ids) == len(set(ids))


# ---------------------------------------------------------------------------
# Nordhaus-Gaddum sums

def test_ng_complete_minus_edge_tight():
    for n in range(3, 9):
        g = construct_family("complete_minus_edge", n)
        rep = nordhaus_gaddum(g, 1)
        assert rep.total == n
        assert rep.case == "both-large-delta"
        assert rep.upper_bound == n


def test_ng_mixed_case_tight():
    from limpack import disjoint_union
    g = disjoint_union(construct_family("complete", 2), Graph.empty(1))
    rep = nordhaus_gaddum(g, 2)
    assert rep.total == 5 == 2 * g.n - 1
    assert rep.case == "mixed"
    assert rep.refinement_upper == 5


def test_ng_lower_tight_on_k2():
    rep = nordhaus_gaddum(construct_family("complete", 2), 2)
    assert rep.total == 4 == rep.lower_bound
    assert rep.case == "both-small-delta"
    assert rep.upper_bound == 4
    assert ng_lower_equality_condition(construct_family("complete", 2), 2)


def test_ng_equality_condition_matches_sums():
    for n in range(1, 5):
        for g in enumerate_labeled_graphs(n):
            for k in (1, 2, 3):
                if n < k:
                    continue
                rep = nordhaus_gaddum(g, k)
                assert rep.total >= 2 * k
                cond = ng_lower_equality_condition(g, k)
                assert (rep.total == 2 * k) == cond, (g.edges(), k)


def test_ng_upper_sound_exhaustive():
    for n in range(1, 5):
        for g in enumerate_labeled_graphs(n):
            for k in (1, 2, 3):
                rep = nordhaus_gaddum(g, k)
                assert rep.total <= rep.upper_bound
                if k == 2:
                    assert rep.total <= rep.refinement_upper == g.n + 2


# ---------------------------------------------------------------------------
# regular-graph equality check

def test_regular_equality_examples():
    res = regular_equality_check(construct_family("complete", 4), 2)
    assert res.regular and res.applicable and res.premise_holds
    assert res.conclusion_holds and res.passed and not res.vacuous
    res = regular_equality_check(construct_family("cycle", 5), 1)
    assert res.regular and res.applicable and not res.premise_holds
    assert res.vacuous and res.passed
    res = regular_equality_check(construct_family("path", 3), 1)
    assert not res.regular and not res.applicable and res.passed


# ---------------------------------------------------------------------------
# small equivalences kept alongside the bounds they sharpen

def test_l1_eq_1_iff_diameter_le_2():
    for n in range(1, 6):
        for g in enumerate_labeled_graphs(n):
            l1 = limited_packing_oracle(g, 1).value
            p = profile(g)
            small_diam = p.diameter is not None and p.diameter <= 2
            assert (l1 == 1) == small_diam, g.edges()


def test_open_packing_at_most_2_when_diameter_le_2():
    for n in range(1, 6):
        for g in enumerate_labeled_graphs(n):
            p = profile(g)
            if p.diameter is not None and p.diameter <= 2:
                assert open_packing_number(g).value <= 2


def test_open_packing_eq_1_characterization():
    # connected, n >= 3: rho0 == 1 iff diameter <= 2 and every edge lies on
    # a triangle
    for n in range(3, 6):
        for g in enumerate_labeled_graphs(n):
            p = profile(g)
            if not p.connected:
                continue
            lhs = open_packing_number(g).value == 1
            rhs = p.diameter <= 2 and p.every_edge_on_triangle
            assert lhs == rhs, g.edges()
