import random

import pytest

from bidyck import GraphTooLarge, InputGraph, cfl_closure, reach_matrix, rebuild_partition
from bidyck.oracle import OracleInconsistency, check_equivalence
from figures import FIG2_CLASSES, U, V, W, fig1, fig2, fig3


def test_fig1():
    assert cfl_closure(fig1()) == ((U, V), (W,))


def test_fig2():
    assert cfl_closure(fig2()) == FIG2_CLASSES == rebuild_partition(fig2())


def test_fig3():
    assert cfl_closure(fig3()) == tuple((i,) for i in range(7))


def test_no_edges():
    assert cfl_closure(InputGraph(4)) == ((0,), (1,), (2,), (3,))
    assert rebuild_partition(InputGraph(0)) == ()


def test_bound():
    with pytest.raises(GraphTooLarge):
        cfl_closure(InputGraph(65))
    cfl_closure(InputGraph(5), bound=5)


def test_matrix_fig1_paths():
    rel = reach_matrix(fig1())
    # u -(1-> w -)1-> v
    assert rel[U][V] and rel[V][U]
    assert not rel[U][W] and not rel[W][U]


def test_nested_parentheses():
    # 0 -(1-> 1 -(2-> 2 <-(2- 3 <-(1- 4: the word (1 (2 )2 )1 joins 0 and 4
    g = InputGraph(5, [(0, 1, 1), (1, 2, 2), (3, 2, 2), (4, 1, 3)])
    assert cfl_closure(g) == ((0, 4), (1, 3), (2,))


def test_non_equivalence_detected():
    with pytest.raises(OracleInconsistency):
        check_equivalence([[True, True], [False, True]])


def test_agrees_with_rebuild_on_random_graphs():
    rng = random.Random(2024)
    for _ in range(1000):
        n, k = rng.randint(1, 10), rng.randint(1, 3)
        triples = [(a, i, b) for a in range(n) for i in range(1, k + 1) for b in range(n)]
        g = InputGraph(n, rng.sample(triples, min(rng.randint(0, 2 * n), len(triples))))
        rel = reach_matrix(g)
        check_equivalence(rel)
        assert cfl_closure(g) == rebuild_partition(g)
