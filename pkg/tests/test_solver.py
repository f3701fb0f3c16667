import random

import pytest

from intdom import graph as gr
from intdom.graph import Graph, dominates
from intdom.multiset import Multiset as M
from intdom.solver import (InstanceTooLarge, gamma_bnb, gamma_brute, greedy_upper, is_k_dominating,
                           lower_bound)

from .oracles import domination_number, min_dominating_size


def p4_plus_k1():
    # P_4 on 0..3 plus isolated vertex 4 (1-based labels 1..5)
    return gr.disjoint_union(gr.path(4), gr.complete(1))


def random_graphs(seed, count, n_lo, n_hi):
    rng = random.Random(seed)
    return [gr.random_gnp(rng.randint(n_lo, n_hi), rng.choice([0.2, 0.4, 0.6, 0.8]), rng.getrandbits(64))
            for _ in range(count)]


def assert_minimal(g, k, witness):
    for v in witness.support():
        assert not is_k_dominating(g, k, witness.remove_one(v))


def test_is_k_dominating_examples():
    p3 = gr.path(3)
    assert is_k_dominating(p3, 1, M([1]))
    assert is_k_dominating(gr.complete(3), 2, M([0, 1]))
    assert is_k_dominating(p3, 2, M([1, 1]))
    assert not is_k_dominating(p3, 2, M([1]))


def test_is_k_dominating_matches_domination_of_k_copies():
    g = gr.cycle(5)
    for d in (M([0, 2]), M([0, 0, 3, 3]), M([1, 2, 3, 4, 4])):
        for k in (1, 2):
            assert is_k_dominating(g, k, d) == dominates(g, d, g.all_vertices().power_union(k))


@pytest.mark.parametrize("n,k", [(1, 1), (3, 2), (4, 3), (5, 2)])
def test_complete_graph_needs_k(n, k):
    for solver in (gamma_brute, gamma_bnb):
        res = solver(gr.complete(n), k)
        assert res.gamma == k and len(res.witness) == k
        assert is_k_dominating(gr.complete(n), k, res.witness)


def test_k1_isolated_vertex():
    res = gamma_brute(gr.complete(1), 3)
    assert res.gamma == 3 and res.witness == M([0, 0, 0])


def test_path4_k2_is_4():
    # oracle: exhaustive demand-covering search
    p4 = gr.path(4)
    assert min_dominating_size(4, p4.edges(), [2] * 4) == 4
    assert gamma_brute(p4, 2).gamma == 4
    assert gamma_bnb(p4, 2).gamma == 4


def test_cycle4_k1_is_2():
    assert domination_number(4, gr.cycle(4).edges()) == 2
    assert gamma_bnb(gr.cycle(4), 1).gamma == 2


def test_p4_plus_k1_has_gamma2_6():
    g = p4_plus_k1()
    assert min_dominating_size(5, g.edges(), [2] * 5) == 6
    res = gamma_bnb(g, 2)
    assert res.gamma == 6
    assert is_k_dominating(g, 2, M([0, 1, 2, 3, 4, 4]))


def test_brute_cap():
    with pytest.raises(InstanceTooLarge):
        gamma_brute(gr.path(10), 3, cap=1000)


def test_bnb_agrees_with_brute_small_graphs():
    for g in random_graphs(11, 40, 1, 7):
        for k in (1, 2, 3):
            if (k + 1) ** g.n > 20000:
                continue
            a, b = gamma_brute(g, k), gamma_bnb(g, k)
            assert a.gamma == b.gamma, (g, k)
            assert is_k_dominating(g, k, b.witness)
            assert b.witness.max_multiplicity() <= k
            assert_minimal(g, k, b.witness)


def test_k1_matches_classical_domination_number():
    for g in random_graphs(5, 60, 1, 7):
        assert gamma_bnb(g, 1).gamma == domination_number(g.n, g.edges())


def test_greedy_lower_and_brackets():
    assert len(greedy_upper(gr.complete(3), 2)) == 2
    assert lower_bound(gr.complete(1), 3) == 3
    assert lower_bound(gr.cycle(4), 1) == 2
    assert lower_bound(gr.complete(6), 4) == 4
    for g in random_graphs(3, 30, 1, 7):
        for k in (1, 2):
            gamma = gamma_bnb(g, k).gamma
            gr_ms = greedy_upper(g, k)
            assert is_k_dominating(g, k, gr_ms)
            assert lower_bound(g, k) <= gamma <= len(gr_ms)


def test_k_scaling_and_subadditivity():
    for g in random_graphs(9, 25, 1, 7):
        gam = {k: gamma_bnb(g, k).gamma for k in (1, 2, 3, 4)}
        assert gam[2] <= 2 * gam[1]
        assert gam[3] <= 3 * gam[1]
        for k1 in (1, 2):
            for k2 in (1, 2):
                assert gam[k1 + k2] <= gam[k1] + gam[k2]


def test_time_budget_returns_flagged_incumbent():
    g = gr.grid(4, 5)
    res = gamma_bnb(g, 3, time_budget=0.0)
    assert not res.optimal
    assert is_k_dominating(g, 3, res.witness)
    assert res.gamma == len(res.witness)


def test_empty_graph():
    res = gamma_bnb(Graph(0), 2)
    assert res.gamma == 0 and not res.witness


def test_bad_k():
    with pytest.raises(ValueError):
        gamma_bnb(gr.path(2), 0)
