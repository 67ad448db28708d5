"""Standard-form diagrams: ports, handle invariants, and closure."""

import pytest

from frontkit.errors import DiagramError, PortMismatch
from frontkit.front import L, R, X, thurston_bennequin
from frontkit.moves import apply_move, enumerate_moves
from frontkit.standard import (
    OneHandle,
    StandardFormDiagram,
    SteinHandlebody,
    TwoHandleAttachment,
    closure_to_sphere,
    geometric_passes,
    homology_vector,
    pass_signs,
    stein_check,
    tb_standard,
)


def straight_strand():
    """One strand through one handle: the dotted-circle core dual."""
    return StandardFormDiagram(
        [OneHandle("H", 1)], [("H", 1)], [], [("H", 1)]
    )


def test_straight_strand_is_a_knot():
    d = straight_strand()
    assert d.n_components == 1
    assert tb_standard(d, 0) == 0
    assert geometric_passes(d, 0, "H") == 1
    assert homology_vector(d, 0) in ((1,), (-1,))


def test_port_declared_twice_rejected():
    with pytest.raises(PortMismatch):
        StandardFormDiagram(
            [OneHandle("H", 1)], [("H", 1), ("H", 1)], [R(1)], [("H", 1)]
        )


def test_unknown_port_rejected():
    with pytest.raises(PortMismatch):
        StandardFormDiagram([OneHandle("H", 1)], [("H", 2)], [], [("H", 2)])


def test_slot_order_must_increase():
    with pytest.raises(PortMismatch):
        StandardFormDiagram(
            [OneHandle("H", 2)],
            [("H", 2), ("H", 1)],
            [],
            [("H", 2), ("H", 1)],
        )


def test_zigzag_through_handle_tb():
    # One pass with a stabilizing zigzag: tb drops by 1.
    d = StandardFormDiagram(
        [OneHandle("H", 1)], [("H", 1)], [L(2), R(1)], [("H", 1)]
    )
    assert tb_standard(d, 0) == -1


def test_double_pass_homology():
    d = StandardFormDiagram(
        [OneHandle("H", 2)],
        [("H", 1), ("H", 2)],
        [X(1)],
        [("H", 1), ("H", 2)],
    )
    assert d.n_components == 1
    assert geometric_passes(d, 0, "H") == 2
    assert homology_vector(d, 0) in ((0,), (2,), (-2,))


def test_pass_signs_cover_every_port():
    d = straight_strand()
    signs = pass_signs(d, 0)
    assert set(signs) == {("H", 1)}
    assert signs[("H", 1)] in (1, -1)


def test_stein_check_flags_wrong_framing():
    d = straight_strand()
    good = SteinHandlebody(d, [TwoHandleAttachment(0, tb_standard(d, 0) - 1)])
    assert stein_check(good) == []
    bad = SteinHandlebody(d, [TwoHandleAttachment(0, tb_standard(d, 0))])
    assert len(stein_check(bad)) == 1


def test_closure_of_straight_strand():
    d = straight_strand()
    closed, alpha = closure_to_sphere(d, 0)
    assert closed.n_components == 1
    assert alpha == thurston_bennequin(closed) - tb_standard(d, 0)


def test_closure_alpha_is_interior_move_invariant():
    # The correction term depends only on how the component runs
    # through the handles, not on interior Reidemeister wiggling.
    d = StandardFormDiagram(
        [OneHandle("H", 2)],
        [("H", 1), ("H", 2)],
        [X(1), L(2), R(1)],
        [("H", 1), ("H", 2)],
    )
    base = closure_to_sphere(d, 0)[1]
    seen = {d.events}
    frontier = [d]
    while frontier and len(seen) < 8:
        cur = frontier.pop()
        for m in enumerate_moves(cur, ("R2a", "R2b", "Slide")):
            d2 = apply_move(cur, m)
            if d2.events in seen:
                continue
            seen.add(d2.events)
            frontier.append(d2)
            assert closure_to_sphere(d2, 0)[1] == base
    assert len(seen) - 1 >= 5


def test_closure_tb_shift_matches_alpha():
    d = StandardFormDiagram(
        [OneHandle("H", 1)], [("H", 1)], [L(2), R(1)], [("H", 1)]
    )
    closed, alpha = closure_to_sphere(d, 0)
    assert thurston_bennequin(closed) == tb_standard(d, 0) + alpha
