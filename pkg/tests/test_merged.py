import pytest

from bidyck import (
    DisjointSets,
    InputGraph,
    MissingEdge,
    NotARepresentative,
    SameRepresentative,
    opt_dyck,
    quotient,
)
from bidyck.merged import recount_mismatch
from figures import FIG2_CLASSES, FIG2_MEDGES, U, V, W, X1, X2, Y1, Y2, fig1, fig2, fig3


def partition(n, classes):
    ds = DisjointSets(n)
    for cls in classes:
        for m in cls[1:]:
            ds.union(cls[0], m)
    return ds


def test_quotient_fig1():
    gm = quotient(fig1(), partition(3, [(U, V)]))
    assert gm.snapshot() == {(0, 1, 2): 2}


def test_quotient_fig2():
    gm = quotient(fig2(), partition(7, FIG2_CLASSES))
    assert gm.snapshot() == FIG2_MEDGES


def test_quotient_identity():
    g = fig2()
    gm = quotient(g, DisjointSets(7))
    assert gm.snapshot() == {e: 1 for e in g.edges}


def test_merge_fig1_from_singletons():
    g = fig1()
    gm = quotient(g, DisjointSets(3))
    rep, changed = gm.merge_reps(U, V)
    assert gm.snapshot() == {(0, 1, 2): 2}
    assert (W, 1) in changed
    assert not recount_mismatch(gm, g)


def test_merge_isolated():
    gm = quotient(InputGraph(2), DisjointSets(2))
    gm.merge_reps(0, 1)
    assert gm.weights == {} and gm.ds.fingerprint() == ((0, 1),)


def test_merge_keeps_kinds_apart():
    g = InputGraph(4, [(0, 1, 2), (0, 2, 2), (1, 1, 2), (1, 2, 2)])
    gm = quotient(g, DisjointSets(4))
    gm.merge_reps(0, 1)
    assert gm.snapshot() == quotient(g, gm.ds).snapshot() == {(0, 1, 2): 2, (0, 2, 2): 2}
    g2 = InputGraph(4, [(0, 1, 2), (1, 2, 2)])
    gm2 = quotient(g2, DisjointSets(4))
    gm2.merge_reps(0, 1)
    assert gm2.snapshot() == {(0, 1, 2): 1, (0, 2, 2): 1}


def test_merge_folds_self_loops():
    g = InputGraph(2, [(0, 1, 1), (1, 1, 0)])
    gm = quotient(g, DisjointSets(2))
    gm.merge_reps(0, 1)
    assert gm.snapshot() == {(0, 1, 0): 2}


def test_merge_errors():
    gm = quotient(fig1(), partition(3, [(U, V)]))
    rep = gm.ds.find(U)
    with pytest.raises(SameRepresentative):
        gm.merge_reps(rep, rep)
    with pytest.raises(NotARepresentative):
        gm.merge_reps(U if rep == V else V, W)


def test_split_all_of_fig2_on_fig3_graph():
    gm = opt_dyck(fig2())
    g = fig3()
    gm.adjust_weight(gm.ds.find(V), 1, gm.ds.find(W), -1)
    for node in (U, X1, X2):
        gm.split_rep(gm.ds.find(node), g)
    assert gm.ds.fingerprint() == tuple((i,) for i in range(7))
    assert gm.snapshot() == {e: 1 for e in g.edges}


def test_split_singleton_is_identity():
    gm = opt_dyck(fig2())
    before = gm.snapshot()
    assert gm.split_rep(W, fig2()) == [W]
    assert gm.snapshot() == before


def test_split_uv_alone():
    g = fig2()
    gm = opt_dyck(g)
    gm.split_rep(gm.ds.find(U), g)
    expected = {
        (U, 1, W): 1,
        (V, 1, W): 1,
        (U, 1, X1): 1,
        (V, 1, X1): 1,
        (X1, 1, X2): 2,
        (X2, 1, U): 1,
        (X2, 1, V): 1,
    }
    assert gm.snapshot() == expected == quotient(g, gm.ds).snapshot()


def test_adjust_weight():
    gm = opt_dyck(fig2())
    uv, w = gm.ds.find(U), gm.ds.find(W)
    assert gm.adjust_weight(uv, 1, w, -1) == 1
    assert gm.snapshot()[(0, 1, 2)] == 1
    assert gm.adjust_weight(uv, 1, w, -1) == 0
    assert (0, 1, 2) not in gm.snapshot()
    with pytest.raises(MissingEdge):
        gm.adjust_weight(uv, 1, w, -1)
    assert gm.adjust_weight(uv, 1, w, +1) == 1


def test_adjust_inverse():
    gm = opt_dyck(fig2())
    before = gm.snapshot()
    gm.adjust_weight(W, 3, gm.ds.find(Y2), +1)
    gm.adjust_weight(W, 3, gm.ds.find(Y2), -1)
    assert gm.snapshot() == before
    assert gm.inc.get(W) is None or 3 not in gm.inc[W]


def test_dump_format():
    assert opt_dyck(fig1()).dump() == "medge 0 1 2 2\n"
