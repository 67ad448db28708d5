"""Move-graph search and invariance fuzzing."""

import pytest

from frontkit.errors import BudgetExhausted
from frontkit.explore import (
    SearchConfig,
    bfs_max_tb,
    fuzz_moves,
    local_max_certificate,
)
from frontkit.front import thurston_bennequin, trefoil, unknot
from frontkit.gallery import K_m_front, K_mn_cable_front
from frontkit.moves import stabilize


def twice_stabilized_unknot():
    return stabilize(stabilize(unknot(), 0, 1), 0, -1)


def test_bfs_recovers_stabilized_unknot():
    d = twice_stabilized_unknot()
    assert thurston_bennequin(d) == -3
    res = bfs_max_tb(d, SearchConfig(max_depth=4, budget=10_000))
    assert res.best_tb == -1
    assert res.nodes_expanded <= 10_000
    assert thurston_bennequin(res.witness.replay(d)) == -1


def test_bfs_fixed_point_on_reduced_unknot():
    res = bfs_max_tb(unknot())
    assert res.best_tb == -1
    assert res.nodes_expanded == 1
    assert res.witness.moves == ()


def test_bfs_is_a_lower_bound():
    d = K_mn_cable_front(-1, 2)
    try:
        res = bfs_max_tb(d, SearchConfig(max_depth=2, budget=500))
    except BudgetExhausted as exc:
        res = exc.partial
    assert res.best_tb >= -3


def test_bfs_monotone_in_depth():
    d = twice_stabilized_unknot()
    best = [
        bfs_max_tb(d, SearchConfig(max_depth=k, budget=10_000)).best_tb
        for k in (1, 2, 3, 4)
    ]
    assert best == sorted(best)


def test_bfs_deterministic_witness():
    d = twice_stabilized_unknot()
    cfg = SearchConfig(max_depth=4, budget=10_000, seed=5)
    a = bfs_max_tb(d, cfg)
    b = bfs_max_tb(d, cfg)
    assert a.witness == b.witness
    assert a.nodes_expanded == b.nodes_expanded


def test_budget_exhaustion_carries_partial_result():
    d = twice_stabilized_unknot()
    with pytest.raises(BudgetExhausted) as exc:
        bfs_max_tb(d, SearchConfig(max_depth=4, budget=3))
    partial = exc.value.partial
    assert partial.exhausted
    assert partial.best_tb >= -3


def test_local_max_certificates():
    assert local_max_certificate(unknot(), 3).is_local_max
    d = stabilize(unknot(), 0, 1)
    assert not local_max_certificate(d, 1).is_local_max


def test_fuzz_zero_steps_is_identity():
    rep = fuzz_moves(trefoil(), seed=0, steps=0)
    assert rep.steps_applied == 0
    assert rep.final.events == trefoil().events


def test_fuzz_trefoil_no_violations():
    rep = fuzz_moves(trefoil(), seed=11, steps=300)
    assert rep.violations == ()
    assert rep.steps_applied == 300


def test_fuzz_twist_knot_no_violations():
    rep = fuzz_moves(K_m_front(-2), seed=3, steps=150)
    assert rep.violations == ()
