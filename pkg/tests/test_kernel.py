"""Trace kernel: validation, orientation, and pure/compiled parity."""

import random

import pytest

from frontkit._kernel import pure
from frontkit.errors import DanglingStrand, LevelOutOfRange

try:
    from frontkit._kernel import _fast
except ImportError:
    _fast = None

LC, RC, XC = pure.LEFT_CUSP, pure.RIGHT_CUSP, pure.CROSSING

_FIELDS = (
    "n_strands", "initial_strands", "final_strands", "event_strands",
    "strand_component", "strand_orient", "n_components", "crossings",
    "left_cusps", "right_cusps", "up_cusps", "down_cusps", "self_writhe",
    "inter_sums", "max_width",
)


def random_word(rng, steps):
    events, k = [], 0
    for _ in range(steps):
        if k < 2 or rng.random() < 0.4:
            events.append((LC, rng.randint(1, k + 1)))
            k += 2
        elif rng.random() < 0.5:
            events.append((XC, rng.randint(1, k - 1)))
        else:
            events.append((RC, rng.randint(1, k - 1)))
            k -= 2
    while k:
        events.append((RC, rng.randint(1, k - 1)))
        k -= 2
    return events


def test_unknot_trace():
    tr = pure.trace([(LC, 1), (RC, 1)])
    assert tr.n_components == 1
    assert tr.left_cusps == [1] and tr.right_cusps == [1]
    assert tr.self_writhe == [0]
    assert tr.up_cusps == [1] and tr.down_cusps == [1]


def test_first_created_strand_points_right():
    tr = pure.trace([(LC, 1), (RC, 1)])
    assert tr.strand_orient[0] == 1
    assert tr.strand_orient[1] == -1


def test_trefoil_counts():
    word = [(LC, 1), (LC, 3), (XC, 2), (XC, 2), (XC, 2), (RC, 1), (RC, 1)]
    tr = pure.trace(word)
    assert tr.n_components == 1
    assert tr.self_writhe == [3]
    assert tr.left_cusps == [2]


def test_two_component_clasp_linking():
    # Two stacked circles clasping twice: inter-component sum is ±2.
    word = [(LC, 1), (LC, 3), (XC, 2), (XC, 2), (RC, 1), (RC, 1)]
    tr = pure.trace(word)
    assert tr.n_components == 2
    assert set(tr.inter_sums) == {(0, 1)}
    assert abs(tr.inter_sums[(0, 1)]) == 2


def test_level_out_of_range():
    with pytest.raises(LevelOutOfRange):
        pure.trace([(LC, 2)])
    with pytest.raises(LevelOutOfRange):
        pure.trace([(LC, 1), (XC, 2), (RC, 1)])


def test_dangling_strands():
    with pytest.raises(DanglingStrand):
        pure.trace([(LC, 1)])
    with pytest.raises(DanglingStrand):
        pure.trace([(LC, 1), (RC, 1)], n_initial=2)


def test_port_links_keep_direction():
    # One strand straight through, linked back to itself: a single
    # component with no cusps.
    tr = pure.trace([], n_initial=1, port_links=[(0, 0)])
    assert tr.n_components == 1
    assert tr.strand_orient == [1]


def test_max_width():
    tr = pure.trace([(LC, 1), (LC, 2), (RC, 2), (RC, 1)])
    assert tr.max_width == 4


@pytest.mark.skipif(_fast is None, reason="compiled kernel not built")
def test_backend_parity_random_words():
    rng = random.Random(20260827)
    for _ in range(300):
        word = random_word(rng, rng.randint(1, 80))
        a = pure.trace(word)
        b = _fast.trace(word)
        for name in _FIELDS:
            assert getattr(a, name) == getattr(b, name), name


@pytest.mark.skipif(_fast is None, reason="compiled kernel not built")
def test_backend_parity_with_ports():
    word = [(XC, 1), (LC, 2), (RC, 2)]
    links = [(0, 1), (1, 0)]
    a = pure.trace(word, n_initial=2, port_links=links)
    b = _fast.trace(word, n_initial=2, port_links=links)
    for name in _FIELDS:
        assert getattr(a, name) == getattr(b, name), name


@pytest.mark.skipif(_fast is None, reason="compiled kernel not built")
def test_backend_parity_errors():
    for bad in ([(LC, 5)], [(LC, 1)], [(RC, 1)]):
        with pytest.raises(Exception) as ea:
            pure.trace(bad)
        with pytest.raises(Exception) as eb:
            _fast.trace(bad)
        assert type(ea.value) is type(eb.value)
