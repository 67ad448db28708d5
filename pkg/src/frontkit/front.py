"""Closed front diagrams and their classical invariants.

A front is encoded as a word of events read left to right: left cusps,
right cusps, and crossings, each at a 1-based level counted from the top
of the diagram.  At a crossing the strand of lesser slope is in front,
so over/under data is implicit.  Crossing signs follow the determinant
convention for the (descending, ascending) tangent pair; with it the
one-crossing unknot word ``[L1, X1, R1]`` has writhe -1 and the standard
two-bridge positive trefoil word has writhe +3.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional, Sequence

from . import _kernel
from ._kernel import CROSSING, LEFT_CUSP, RIGHT_CUSP
from .errors import DiagramError, NotAKnot


class Event(NamedTuple):
    """One event of a front word: kind 'L', 'R' or 'X' at a level."""

    kind: str
    level: int

    def __str__(self):
        return f"{self.kind}{self.level}"


_KIND_TO_CODE = {"L": LEFT_CUSP, "R": RIGHT_CUSP, "X": CROSSING}
_CODE_TO_KIND = {v: k for k, v in _KIND_TO_CODE.items()}


def L(level: int) -> Event:
    """Left cusp: inserts two strands at ``level``, ``level + 1``."""
    return Event("L", level)


def R(level: int) -> Event:
    """Right cusp: joins and removes the strands at ``level``, ``level + 1``."""
    return Event("R", level)


def X(level: int) -> Event:
    """Crossing: swaps the strands at ``level``, ``level + 1``."""
    return Event("X", level)


def event_from_string(text: str) -> Event:
    kind = text[:1].upper()
    if kind not in _KIND_TO_CODE or not text[1:].isdigit():
        raise ValueError(f"not an event: {text!r}")
    return Event(kind, int(text[1:]))


def encode_word(events: Iterable[Event]):
    """Internal kernel encoding of a word."""
    out = []
    for ev in events:
        code = _KIND_TO_CODE.get(ev.kind)
        if code is None:
            raise DiagramError(f"unknown event kind {ev.kind!r}")
        out.append((code, ev.level))
    return out


def decode_word(pairs) -> tuple:
    return tuple(Event(_CODE_TO_KIND[k], lv) for k, lv in pairs)


@dataclass(frozen=True)
class ClassicalInvariants:
    """Classical invariants of one component of a front."""

    tb: int
    rotation: int
    writhe: int
    left_cusps: int
    right_cusps: int
    up_cusps: int
    down_cusps: int


class FrontDiagram:
    """An immutable, validated closed front diagram.

    The word must start and end on the empty slice.  Validation and the
    component trace run once, at construction.
    """

    __slots__ = ("events", "_trace")

    def __init__(self, events: Sequence[Event]):
        object.__setattr__(self, "events", tuple(Event(e.kind, e.level) for e in events))
        object.__setattr__(self, "_trace", _kernel.trace(encode_word(self.events)))

    def __setattr__(self, name, value):  # immutability
        raise AttributeError("FrontDiagram is immutable")

    def __eq__(self, other):
        return isinstance(other, FrontDiagram) and self.events == other.events

    def __hash__(self):
        return hash(self.events)

    def __repr__(self):
        word = " ".join(map(str, self.events))
        return f"FrontDiagram({word!r})"

    @property
    def trace(self) -> _kernel.TraceResult:
        return self._trace

    @property
    def n_components(self) -> int:
        return self._trace.n_components

    @property
    def components(self) -> range:
        """Component indices, in order of first strand creation."""
        return range(self._trace.n_components)

    def is_knot(self) -> bool:
        return self._trace.n_components == 1

    def crossing_count(self) -> int:
        return len(self._trace.crossings)

    def cusp_count(self) -> int:
        return sum(self._trace.left_cusps) + sum(self._trace.right_cusps)


def validate(d: FrontDiagram) -> None:
    """Re-run structural validation (construction already does this)."""
    _kernel.trace(encode_word(d.events))


def _component_arg(d: FrontDiagram, c: Optional[int]) -> int:
    if c is None:
        if d.n_components != 1:
            raise NotAKnot(
                f"diagram has {d.n_components} components; pass an explicit one"
            )
        return 0
    if not 0 <= c < d.n_components:
        raise DiagramError(f"no component {c} in a {d.n_components}-component diagram")
    return c


def writhe(d: FrontDiagram, c: Optional[int] = None) -> int:
    """Signed count of self-crossings of component ``c``."""
    return d.trace.self_writhe[_component_arg(d, c)]


def thurston_bennequin(d: FrontDiagram, c: Optional[int] = None) -> int:
    """tb = writhe minus the number of left cusps."""
    c = _component_arg(d, c)
    return d.trace.self_writhe[c] - d.trace.left_cusps[c]


def rotation(d: FrontDiagram, c: Optional[int] = None, reverse: bool = False) -> int:
    """Rotation number: half the down-cusp minus up-cusp count.

    The canonical orientation points the first-created strand of the
    component left-to-right; ``reverse=True`` gives the value for the
    opposite orientation (the negative).
    """
    c = _component_arg(d, c)
    t = d.trace
    r2 = t.down_cusps[c] - t.up_cusps[c]
    if r2 % 2:
        raise DiagramError("odd cusp imbalance; component is not closed")
    return -r2 // 2 if reverse else r2 // 2


def classical_invariants(d: FrontDiagram, c: Optional[int] = None) -> ClassicalInvariants:
    c = _component_arg(d, c)
    t = d.trace
    return ClassicalInvariants(
        tb=t.self_writhe[c] - t.left_cusps[c],
        rotation=(t.down_cusps[c] - t.up_cusps[c]) // 2,
        writhe=t.self_writhe[c],
        left_cusps=t.left_cusps[c],
        right_cusps=t.right_cusps[c],
        up_cusps=t.up_cusps[c],
        down_cusps=t.down_cusps[c],
    )


def linking_number(d: FrontDiagram, c1: int, c2: int) -> int:
    """Half the signed count of crossings between two components."""
    c1 = _component_arg(d, c1)
    c2 = _component_arg(d, c2)
    if c1 == c2:
        raise DiagramError("linking number needs two distinct components")
    key = (c1, c2) if c1 < c2 else (c2, c1)
    total = d.trace.inter_sums.get(key, 0)
    if total % 2:
        raise DiagramError("odd inter-component crossing sum")
    return total // 2


def reflect(d: FrontDiagram) -> FrontDiagram:
    """Reflect the diagram across a horizontal axis.

    Levels are renumbered top-for-bottom slice by slice; tb is preserved
    and every rotation number changes sign.
    """
    out = []
    width = 0
    for ev in d.events:
        if ev.kind == "L":
            out.append(Event("L", width - ev.level + 2))
            width += 2
        elif ev.kind == "R":
            out.append(Event("R", width - ev.level))
            width -= 2
        else:
            out.append(Event("X", width - ev.level))
    return FrontDiagram(out)


# Canonical small fronts -------------------------------------------------

def unknot() -> FrontDiagram:
    """The tb = -1, rotation 0 unknot."""
    return FrontDiagram([L(1), R(1)])


def trefoil() -> FrontDiagram:
    """The tb = +1, rotation 0 positive trefoil (two-bridge word)."""
    return FrontDiagram([L(1), L(3), X(2), X(2), X(2), R(1), R(1)])
