"""Parameterized families: every stated invariant recomputed."""

import pytest

from frontkit.errors import ParameterOutOfRange
from frontkit.front import FrontDiagram, rotation, thurston_bennequin
from frontkit.gallery import (
    FramedRecord,
    K_m_front,
    K_mn_cable_front,
    XY_handlebody,
    Z_m_handlebody,
    candidate_component,
    gallery_manifest,
    stein_rep_max,
    stein_rep_variant,
    step3_pipeline,
    surgery_record,
)
from frontkit.standard import (
    geometric_passes,
    homology_vector,
    stein_check,
    tb_standard,
)


@pytest.mark.parametrize("m", range(-1, -11, -1))
def test_twist_knot_family(m):
    d = K_m_front(m)
    assert d.n_components == 1
    assert thurston_bennequin(d) == -1
    assert rotation(d) == 0


def test_twist_knot_rejects_positive_m():
    with pytest.raises(ParameterOutOfRange):
        K_m_front(0)


@pytest.mark.parametrize("n", (2, 3, 4))
@pytest.mark.parametrize("m", (-1, -5))
def test_cable_family(m, n):
    d = K_mn_cable_front(m, n)
    assert d.n_components == 1
    assert thurston_bennequin(d) == -2 * n + 1


def test_one_handle_twist_record():
    for m in (-4, 0, 3):
        h = Z_m_handlebody(m)
        assert h.attachments[0].framing == m
        assert geometric_passes(h.diagram, 0, "H") == 1


def test_stein_rep_max_contract():
    h = stein_rep_max(-5, 2)
    assert stein_check(h) == []
    cand = candidate_component(h)
    assert tb_standard(h.diagram, cand) == -1
    assert homology_vector(h.diagram, cand) == (0,)


def test_stein_rep_max_range():
    stein_rep_max(-4 * 2 + 3, 2)  # boundary value is allowed
    with pytest.raises(ParameterOutOfRange):
        stein_rep_max(-4, 2)
    with pytest.raises(ParameterOutOfRange):
        stein_rep_max(-10, 1)


def test_stein_rep_variant_contract():
    for n in (2, 3, 4):
        h = stein_rep_variant(-2 * n - 1, n)
        assert stein_check(h) == []
        assert tb_standard(h.diagram, candidate_component(h)) == -n + 1


def test_step3_pipeline_closes_at_minus_one():
    closed, script = step3_pipeline(-5, 2)
    assert isinstance(closed, FrontDiagram)
    assert closed.n_components == 1
    assert thurston_bennequin(closed) == -1
    replay = script.replay(stein_rep_max(-5, 2))
    assert replay.events == closed.events


def test_framed_records():
    x = XY_handlebody("X", 2, 3)
    assert x.contractible
    y = XY_handlebody("Y", 2, 3)
    assert not y.contractible
    assert ("unknot", -2) in y.split_summands
    assert surgery_record(-5, 2) == XY_handlebody("Y", 2, 3)
    with pytest.raises(ParameterOutOfRange):
        XY_handlebody("Q", 2, 3)


def test_manifest_entries_carry_recomputed_invariants():
    for entry in gallery_manifest():
        assert entry.invariants["components"] >= 1
        if entry.name in ("unknot", "K_m", "step3_front"):
            assert entry.invariants["tb"] == -1
