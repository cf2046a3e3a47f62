"""Exact solvers: subset oracle, branch and bound, companion parameters."""
import random

import pytest

from limpack import (Graph, OracleLimitError, UndefinedParameterError,
                     complement, construct_family, disjoint_union,
                     domination_number, is_dominating_set, is_k_limited_packing,
                     is_open_packing, is_total_dominating_set,
                     limited_packing_bb, limited_packing_number,
                     limited_packing_oracle, mask_of, open_packing_number,
                     total_domination_number)
from limpack.corpus import enumerate_labeled_graphs, random_connected


def petersen() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, 5 + i) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, edges)


# ---------------------------------------------------------------------------
# feasibility predicates

def test_is_k_limited_packing():
    c6 = construct_family("cycle", 6)
    assert is_k_limited_packing(c6, 2, mask_of([0, 1, 3, 4]))
    assert not is_k_limited_packing(c6, 2, mask_of([0, 1, 2, 3]))
    assert is_k_limited_packing(c6, 1, mask_of([0, 3]))
    assert is_k_limited_packing(c6, 1, 0)


def test_companion_predicates():
    p4 = construct_family("path", 4)
    assert is_open_packing(p4, mask_of([0, 1]))
    assert not is_open_packing(p4, mask_of([0, 2]))   # vertex 1 sees both
    assert is_dominating_set(p4, mask_of([1, 3]))
    assert not is_dominating_set(p4, mask_of([0]))
    assert is_total_dominating_set(p4, mask_of([1, 2]))
    assert not is_total_dominating_set(p4, mask_of([0, 3]))


# ---------------------------------------------------------------------------
# fixed values

def test_small_family_values():
    assert limited_packing_oracle(construct_family("path", 5), 1).value == 2
    assert limited_packing_oracle(construct_family("cycle", 9), 2).value == 6
    assert limited_packing_oracle(construct_family("complete", 7), 3).value == 3
    assert limited_packing_oracle(
        construct_family("complete_bipartite", (3, 4)), 3).value == 4


def test_petersen_values_frozen():
    pet = petersen()
    assert limited_packing_oracle(pet, 1).value == 1
    assert limited_packing_oracle(pet, 2).value == 4
    assert limited_packing_oracle(pet, 3).value == 7
    assert limited_packing_oracle(pet, 4).value == 10
    assert open_packing_number(pet).value == 2
    assert domination_number(pet).value == 3
    assert total_domination_number(pet).value == 4


def test_companion_values():
    assert domination_number(construct_family("cycle", 7)).value == 3
    assert open_packing_number(construct_family("path", 4)).value == 2
    assert total_domination_number(construct_family("cycle", 6)).value == 4
    assert domination_number(Graph.empty(3)).value == 3
    assert open_packing_number(Graph.empty(3)).value == 3
    assert domination_number(Graph.empty(0)).value == 0
    assert open_packing_number(Graph.empty(0)).value == 0
    assert total_domination_number(Graph.empty(0)).value == 0


def test_total_domination_undefined_with_isolated_vertex():
    with pytest.raises(UndefinedParameterError):
        total_domination_number(Graph.empty(1))
    with pytest.raises(UndefinedParameterError):
        total_domination_number(disjoint_union(construct_family("path", 3),
                                               Graph.empty(1)))


# ---------------------------------------------------------------------------
# guards

def test_guards():
    big = Graph.empty(25)
    with pytest.raises(OracleLimitError):
        limited_packing_oracle(big, 1)
    with pytest.raises(OracleLimitError):
        open_packing_number(big)
    with pytest.raises(ValueError):
        limited_packing_oracle(Graph.empty(2), 0)
    with pytest.raises(ValueError):
        limited_packing_bb(Graph.empty(2), -1)
    with pytest.raises(ValueError):
        limited_packing_number(Graph.empty(2), 1, method="magic")
    # bb has no order guard below the container limit
    assert limited_packing_bb(Graph.empty(30), 1).value == 30


# ---------------------------------------------------------------------------
# oracle vs branch and bound

def test_oracle_matches_bb_exhaustive():
    for n in range(1, 6):
        for g in enumerate_labeled_graphs(n):
            for k in (1, 2, 3):
                a = limited_packing_oracle(g, k)
                b = limited_packing_bb(g, k)
                assert a.value == b.value, (g.edges(), k)
                assert is_k_limited_packing(g, k, b.witness)
                assert b.witness.bit_count() == b.value


def test_oracle_matches_bb_random_mid_size():
    for n in (13, 14, 15, 16):
        for g in random_connected(n, 3, seed=900 + n, edge_prob=0.35):
            for k in (1, 2, 3):
                a = limited_packing_oracle(g, k)
                b = limited_packing_bb(g, k)
                assert a.value == b.value
                assert is_k_limited_packing(g, k, b.witness)


def test_bb_saturation_shortcut():
    g = construct_family("star", 6)    # max degree 5
    res = limited_packing_bb(g, 6)
    assert res.value == 6 and res.witness == g.full_mask
    assert res.nodes_explored == 0


# ---------------------------------------------------------------------------
# witness contracts

def test_oracle_witness_is_lexicographically_least():
    for g in enumerate_labeled_graphs(4):
        for k in (1, 2):
            res = limited_packing_oracle(g, k)
            optimal = [m for m in range(1 << g.n)
                       if m.bit_count() == res.value
                       and is_k_limited_packing(g, k, m)]
            assert res.witness == min(optimal)


def test_min_problem_witnesses_are_feasible():
    for g in enumerate_labeled_graphs(4):
        r = domination_number(g)
        assert is_dominating_set(g, r.witness)
        assert r.witness.bit_count() == r.value
        o = open_packing_number(g)
        assert is_open_packing(g, o.witness)
        assert o.witness.bit_count() == o.value


def test_solve_result_fields():
    res = limited_packing_oracle(construct_family("path", 3), 1)
    assert res.method == "oracle"
    assert res.nodes_explored == 8
    assert res.witness_vertices() == [0]    # vertex 0 alone is optimal first
    res = limited_packing_bb(construct_family("path", 13), 1)
    assert res.method == "branch-and-bound"
    assert res.nodes_explored > 0


def test_dispatch_policy():
    small = construct_family("path", 12)
    large = construct_family("path", 13)
    assert limited_packing_number(small, 1).method == "oracle"
    assert limited_packing_number(large, 1).method == "branch-and-bound"
    assert limited_packing_number(small, 1, method="bb").method == "branch-and-bound"
    assert limited_packing_number(large, 1, method="oracle").value == 5


# ---------------------------------------------------------------------------
# structural properties on random graphs

def test_monotone_in_k_and_capped():
    rng = random.Random(4242)
    for _ in range(40):
        n = rng.randint(1, 9)
        g = Graph.from_edges(n, [(i, j) for j in range(n) for i in range(j)
                                 if rng.random() < 0.4])
        vals = [limited_packing_oracle(g, k).value for k in range(1, n + 3)]
        assert all(a <= b for a, b in zip(vals, vals[1:]))
        assert all(v <= n for v in vals)
        dmax = max(g.degrees(), default=0)
        assert vals[-1] == n
        if dmax >= 1:
            assert vals[0] < n


def test_complement_of_empty_and_complete():
    for n in range(1, 8):
        empty = Graph.empty(n)
        comp = complement(empty)
        for k in (1, 2, 3):
            assert limited_packing_oracle(empty, k).value == n
            assert limited_packing_oracle(comp, k).value == min(k, n)
