import random

import pytest

from bidyck import InputGraph, cfl_closure, fixpoint_violations, opt_dyck, quotient, restore_fixpoint
from bidyck.merged import recount_mismatch
from figures import FIG2_CLASSES, FIG2_EDGES, FIG2_MEDGES, U, V, W, X1, X2, Y1, fig1, fig2, fig3


def test_fig1():
    gm = opt_dyck(fig1())
    assert gm.ds.fingerprint() == ((U, V), (W,))
    assert gm.snapshot() == {(0, 1, 2): 2}


def test_fig2():
    gm = opt_dyck(fig2())
    assert gm.ds.fingerprint() == FIG2_CLASSES
    assert gm.snapshot() == FIG2_MEDGES


def test_fig3_all_singletons():
    g = fig3()
    gm = opt_dyck(g)
    assert gm.ds.fingerprint() == tuple((i,) for i in range(7))
    assert gm.snapshot() == {e: 1 for e in g.edges}
    assert len(gm.weights) == 7


def test_single_edge_no_merge():
    gm = opt_dyck(InputGraph(2, [(0, 1, 1)]))
    assert gm.ds.fingerprint() == ((0,), (1,))


def test_targets_of_common_source_not_merged():
    # 0 -(1-> 1 and 0 -(1-> 2 spell )1 (1 between 1 and 2, which is not Dyck
    gm = opt_dyck(InputGraph(3, [(0, 1, 1), (0, 1, 2)]))
    assert gm.ds.fingerprint() == ((0,), (1,), (2,))
    assert cfl_closure(InputGraph(3, [(0, 1, 1), (0, 1, 2)])) == gm.ds.fingerprint()


def test_restore_after_splitting_on_fig3():
    gm = opt_dyck(fig2())
    g = fig3()
    gm.adjust_weight(gm.ds.find(V), 1, gm.ds.find(W), -1)
    seeds = set()
    for node in (U, X1, X2):
        for m in gm.split_rep(gm.ds.find(node), g):
            seeds |= gm.groups_at(m)
    restore_fixpoint(gm, seeds)
    assert gm.ds.fingerprint() == tuple((i,) for i in range(7))
    assert gm.snapshot() == {e: 1 for e in g.edges}


def test_restore_idempotent():
    gm = opt_dyck(fig2())
    before = gm.snapshot()
    restore_fixpoint(gm, list(gm.all_groups()))
    assert gm.snapshot() == before


def test_restore_after_deleting_x1_x2():
    g = fig2()
    gm = opt_dyck(g)
    g.remove_edge(X1, 1, X2)
    gm.adjust_weight(gm.ds.find(X1), 1, gm.ds.find(X2), -1)
    seeds = set()
    for node in (U, X1, X2):
        for m in gm.split_rep(gm.ds.find(node), g):
            seeds |= gm.groups_at(m)
    restore_fixpoint(gm, seeds)
    assert gm.ds.fingerprint() == cfl_closure(g) == ((0, 1), (2,), (3,), (4, 6), (5,))
    assert gm.snapshot() == {
        (0, 1, 2): 2,
        (0, 1, 3): 1,
        (0, 1, Y1): 1,
        (Y1, 1, 4): 1,
        (4, 1, 0): 2,
    }


def random_graph(rng, n, k, m):
    triples = [(a, i, b) for a in range(n) for i in range(1, k + 1) for b in range(n)]
    return InputGraph(n, rng.sample(triples, min(m, len(triples))))


@pytest.mark.parametrize("seed", range(40))
def test_fixpoint_recount_and_oracle(seed):
    rng = random.Random(seed)
    g = random_graph(rng, rng.randint(1, 10), rng.randint(1, 3), rng.randint(0, 20))
    gm = opt_dyck(g)
    assert fixpoint_violations(gm) == []
    assert not recount_mismatch(gm, g)
    assert gm.total_weight() == len(g)
    assert gm.ds.fingerprint() == cfl_closure(g)


@pytest.mark.parametrize("seed", range(10))
def test_confluence_under_shuffles(seed):
    rng = random.Random(100 + seed)
    edges = list(FIG2_EDGES)
    rng.shuffle(edges)
    assert opt_dyck(InputGraph(7, edges)).ds.fingerprint() == FIG2_CLASSES


def test_fixpoint_violations_detects_unmerged():
    gm = quotient(fig1(), __import__("bidyck").DisjointSets(3))
    assert fixpoint_violations(gm) == [(W, 1)]
