"""Localized rewrites of front words with exact invariant bookkeeping.

The word-level moves are the Legendrian Reidemeister moves in event
form, plus far-commutation of independent adjacent events ("Slide") and
stabilization/destabilization:

* R1a  [L(i+1), X(i), R(i+1)]  ->  []        (kink with two cusps)
* R1b  [L(i), X(i+1), R(i)]    ->  []
* R2a  [L(i+1), X(i), X(i+1)] <->  [L(i)]    (left cusp past a strand)
*      [L(i), X(i+1), X(i)]   <->  [L(i+1)]
* R2b  [X(i), X(i+1), R(i)]   <->  [R(i+1)]  (right cusp past a strand)
*      [X(i+1), X(i), R(i+1)] <->  [R(i)]
* R3   [X(i), X(i+1), X(i)]   <->  [X(i+1), X(i), X(i+1)]

Each preserves tb, rotation, component count, and (in a strip) the
homology vector, because it replaces a pattern by one with the same
boundary behaviour, signed crossing sum, and cusp imbalance.  A pair of
crossings [X(i), X(i)] is a clasp, not a bigon -- both crossings carry
the same sign in a front -- so it is never a reduction site.

Handle moves (slide, cancellation, finger pull-off) operate on
standard-form diagrams and live in the second half of this module.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Set, Tuple, Union

from . import _kernel
from .errors import (
    BandObstructed,
    DiagramError,
    GeometricPassNotOne,
    MoveNotApplicable,
    NotSteinFramed,
    OtherStrandsPresent,
)
from .front import Event, FrontDiagram, L, R, X, encode_word, rotation
from .satellite import cable_expand
from .standard import (
    OneHandle,
    Port,
    StandardFormDiagram,
    SteinHandlebody,
    TwoHandleAttachment,
    pass_signs,
    sorted_ports,
    tb_standard,
)

Diagram = Union[FrontDiagram, StandardFormDiagram]


@dataclass(frozen=True)
class Move:
    """One rewrite: a kind, an event-window position, and a level.

    ``data`` carries kind-specific parameters (rewrite direction,
    commuted levels, handle/attachment names) and is part of identity so
    scripts replay exactly.
    """

    kind: str
    index: int = 0
    level: int = 0
    data: Tuple = ()

    def __str__(self):
        extra = f" {self.data!r}" if self.data else ""
        return f"{self.kind}@{self.index}/{self.level}{extra}"


@dataclass(frozen=True)
class MoveScript:
    """An ordered, replayable list of moves with a provenance note."""

    moves: Tuple[Move, ...]
    note: str = ""

    def __post_init__(self):
        object.__setattr__(self, "moves", tuple(self.moves))

    def replay(self, start):
        """Apply every move in order, returning the final object."""
        current = start
        for m in self.moves:
            current = apply_move(current, m)
        return current


def _events_of(d: Diagram) -> Tuple[Event, ...]:
    return d.events


def _rebuild(d: Diagram, events: Sequence[Event]) -> Diagram:
    if isinstance(d, StandardFormDiagram):
        return StandardFormDiagram(d.handles, d.left_ports, events, d.right_ports)
    return FrontDiagram(events)


def _n_initial(d: Diagram) -> int:
    return len(d.left_ports) if isinstance(d, StandardFormDiagram) else 0


def _slice_widths(d: Diagram) -> List[int]:
    """Slice width before each event position 0..len(events)."""
    out = [_n_initial(d)]
    for ev in d.events:
        delta = 2 if ev.kind == "L" else -2 if ev.kind == "R" else 0
        out.append(out[-1] + delta)
    return out


# -- pattern tables --------------------------------------------------------

def _match_r1(events, idx) -> Optional[Move]:
    if idx + 3 > len(events):
        return None
    a, b, c = events[idx : idx + 3]
    i = b.level
    if (a, b, c) == (L(i + 1), X(i), R(i + 1)):
        return Move("R1a", idx, i)
    if (a, b, c) == (L(i - 1), X(i), R(i - 1)) and i >= 2:
        return Move("R1b", idx, i - 1)
    return None


_R2_CONTRACTIONS = {
    # (kind, variant): window builder and replacement, keyed off base level i
    ("R2a", "up"): (lambda i: (L(i + 1), X(i), X(i + 1)), lambda i: (L(i),)),
    ("R2a", "down"): (lambda i: (L(i), X(i + 1), X(i)), lambda i: (L(i + 1),)),
    ("R2b", "up"): (lambda i: (X(i), X(i + 1), R(i)), lambda i: (R(i + 1),)),
    ("R2b", "down"): (lambda i: (X(i + 1), X(i), R(i + 1)), lambda i: (R(i),)),
}


def _match_r2_contract(events, idx) -> List[Move]:
    out = []
    if idx + 3 > len(events):
        return out
    window = tuple(events[idx : idx + 3])
    for (kind, variant), (lhs, _rhs) in _R2_CONTRACTIONS.items():
        levels = [ev.level for ev in window]
        base = min(levels)
        for i in (base - 1, base, base + 1):
            if i >= 1 and lhs(i) == window:
                out.append(Move(kind, idx, i, ("contract", variant)))
    return out


def _match_r3(events, idx) -> List[Move]:
    out = []
    if idx + 3 > len(events):
        return out
    a, b, c = events[idx : idx + 3]
    i = min(a.level, b.level)
    if (a, b, c) == (X(i), X(i + 1), X(i)):
        out.append(Move("R3", idx, i, ("up",)))
    elif (a, b, c) == (X(i + 1), X(i), X(i + 1)):
        out.append(Move("R3", idx, i, ("down",)))
    return out


def _match_destabilize(events, idx) -> List[Move]:
    out = []
    if idx + 2 > len(events):
        return out
    a, b = events[idx : idx + 2]
    if a.kind == "L" and b.kind == "R":
        if b.level == a.level + 1:
            out.append(Move("Destabilize", idx, a.level, ("down",)))
        elif b.level == a.level - 1 and a.level >= 2:
            out.append(Move("Destabilize", idx, a.level - 1, ("up",)))
    return out


# -- far commutation (Slide) ----------------------------------------------

def _simulate_pair(width, first, second):
    """Run two events on a labeled slice; None when levels are invalid.

    Created strands are tagged by the event that made them, so the
    signature is comparable across the two orderings.
    """
    slice_ = list(range(width))
    records = []
    for tag, ev in (first, second):
        k = len(slice_)
        i = ev.level
        if ev.kind == "L":
            if not 1 <= i <= k + 1:
                return None
            slice_[i - 1 : i - 1] = [(tag, 0), (tag, 1)]
        elif ev.kind == "R":
            if not 1 <= i <= k - 1:
                return None
            records.append((tag, "R", slice_[i - 1], slice_[i]))
            del slice_[i - 1 : i + 1]
        else:
            if not 1 <= i <= k - 1:
                return None
            records.append((tag, "X", slice_[i - 1], slice_[i]))
            slice_[i - 1], slice_[i] = slice_[i], slice_[i - 1]
    return tuple(slice_), frozenset(records)


def _commute(width, e1: Event, e2: Event) -> Optional[Tuple[Event, Event]]:
    """Levels for applying e2 before e1 with identical effect, if any."""
    target = _simulate_pair(width, ("a", e1), ("b", e2))
    if target is None:
        return None
    for d2 in (0, -2, 2):
        for d1 in (0, -2, 2):
            j2, j1 = e2.level + d2, e1.level + d1
            if j2 < 1 or j1 < 1:
                continue
            swapped = (Event(e2.kind, j2), Event(e1.kind, j1))
            got = _simulate_pair(width, ("b", swapped[0]), ("a", swapped[1]))
            if got == target:
                return swapped
    return None


# -- enumeration and application -------------------------------------------

_R_MOVE_KINDS = ("R1a", "R1b", "R2a", "R2b", "R3", "Slide")


def _levels_fit(window, width: int) -> bool:
    """Whether a run of events stays within level range starting from a
    slice of ``width`` strands."""
    k = width
    for ev in window:
        if ev.kind == "L":
            if not 1 <= ev.level <= k + 1:
                return False
            k += 2
        else:
            if not 1 <= ev.level <= k - 1:
                return False
            if ev.kind == "R":
                k -= 2
    return True


def enumerate_moves(d: Diagram, kinds: Optional[Sequence[str]] = None) -> List[Move]:
    """All applicable moves, ordered by (index, level, kind).

    ``kinds`` filters the result; by default Reidemeister moves, slides,
    destabilizations, and stabilizations at every site are reported.
    """
    events = _events_of(d)
    widths = _slice_widths(d)
    allowed = None if kinds is None else set(kinds)

    def wanted(kind: str) -> bool:
        return allowed is None or kind in allowed

    out: List[Move] = []
    for idx in range(len(events)):
        m = _match_r1(events, idx)
        if m:
            out.append(m)
        out.extend(_match_r2_contract(events, idx))
        out.extend(_match_r3(events, idx))
        out.extend(_match_destabilize(events, idx))
        # R2 expansions seeded on a single cusp event.  Replacing one
        # cusp by its three-event pattern keeps every later slice width,
        # so applicability is a pure level-range check on the window.
        ev = events[idx]
        if ev.kind in "LR" and wanted("R2a" if ev.kind == "L" else "R2b"):
            kind = "R2a" if ev.kind == "L" else "R2b"
            for variant in ("up", "down"):
                lhs, rhs = _R2_CONTRACTIONS[(kind, variant)]
                for i in (ev.level - 1, ev.level):
                    if (
                        i >= 1
                        and rhs(i) == (ev,)
                        and _levels_fit(lhs(i), widths[idx])
                    ):
                        out.append(Move(kind, idx, i, ("expand", variant)))
        if idx + 1 < len(events) and wanted("Slide"):
            swapped = _commute(widths[idx], events[idx], events[idx + 1])
            if swapped is not None:
                out.append(
                    Move(
                        "Slide",
                        idx,
                        min(events[idx].level, events[idx + 1].level),
                        (swapped[0].kind, swapped[0].level,
                         swapped[1].kind, swapped[1].level),
                    )
                )
    if wanted("StabilizePlus") or wanted("StabilizeMinus"):
        for idx in range(len(events) + 1):
            for lvl in range(1, widths[idx] + 1):
                out.append(Move("StabilizePlus", idx, lvl))
                out.append(Move("StabilizeMinus", idx, lvl))
    if allowed is not None:
        out = [m for m in out if m.kind in allowed]
    out.sort(key=lambda m: (m.index, m.level, m.kind, m.data))
    return out


def _try_apply(d: Diagram, m: Move) -> Optional[Diagram]:
    try:
        return apply_move(d, m)
    except (MoveNotApplicable, DiagramError):
        return None


def _rewrite_window(d: Diagram, idx: int, old_len: int, replacement) -> Diagram:
    events = list(_events_of(d))
    events[idx : idx + old_len] = list(replacement)
    return _rebuild(d, events)


def apply_move(d: Diagram, m: Move) -> Diagram:
    """Apply one move; raises MoveNotApplicable when the site mismatches."""
    if m.kind == "HandleSlide":
        k, circle, framing, site = m.data
        return handle_slide(d, k, TwoHandleAttachment(circle, framing), site)
    if m.kind == "PullOff":
        hid, slot = m.data
        return pull_off(d, hid, slot)
    if m.kind == "CancelPair":
        hid, circle, framing = m.data
        return cancel_pair(d, hid, TwoHandleAttachment(circle, framing))
    events = _events_of(d)
    idx, i = m.index, m.level
    if m.kind in ("R1a", "R1b"):
        found = _match_r1(events, idx)
        if found != Move(m.kind, idx, i):
            raise MoveNotApplicable(f"no {m.kind} kink at {idx}/{i}")
        return _rewrite_window(d, idx, 3, ())
    if m.kind in ("R2a", "R2b"):
        if len(m.data) != 2:
            raise MoveNotApplicable(f"{m.kind} needs (direction, variant) data")
        direction, variant = m.data
        lhs, rhs = _R2_CONTRACTIONS[(m.kind, variant)]
        if direction == "contract":
            if tuple(events[idx : idx + 3]) != lhs(i):
                raise MoveNotApplicable(f"no {m.kind} pattern at {idx}/{i}")
            return _rewrite_window(d, idx, 3, rhs(i))
        if direction == "expand":
            if tuple(events[idx : idx + 1]) != rhs(i):
                raise MoveNotApplicable(f"no {m.kind} cusp at {idx}/{i}")
            return _rewrite_window(d, idx, 1, lhs(i))
        raise MoveNotApplicable(f"unknown {m.kind} direction {direction!r}")
    if m.kind == "R3":
        up = (X(i), X(i + 1), X(i))
        down = (X(i + 1), X(i), X(i + 1))
        window = tuple(events[idx : idx + 3])
        if window == up:
            return _rewrite_window(d, idx, 3, down)
        if window == down:
            return _rewrite_window(d, idx, 3, up)
        raise MoveNotApplicable(f"no R3 triple at {idx}/{i}")
    if m.kind == "Slide":
        if idx + 2 > len(events):
            raise MoveNotApplicable("slide window out of range")
        swapped = _commute(_slice_widths(d)[idx], events[idx], events[idx + 1])
        if swapped is None:
            raise MoveNotApplicable(f"events at {idx} do not commute")
        if m.data and m.data != (
            swapped[0].kind, swapped[0].level, swapped[1].kind, swapped[1].level
        ):
            raise MoveNotApplicable("slide data does not match the site")
        return _rewrite_window(d, idx, 2, swapped)
    if m.kind in ("StabilizePlus", "StabilizeMinus"):
        sign = 1 if m.kind == "StabilizePlus" else -1
        return _stabilize_at(d, idx, i, sign)
    if m.kind == "Destabilize":
        for mv in _match_destabilize(events, idx):
            if mv.level == i and (not m.data or m.data == mv.data):
                return _rewrite_window(d, idx, 2, ())
        raise MoveNotApplicable(f"no zigzag at {idx}/{i}")
    raise MoveNotApplicable(f"unknown move kind {m.kind!r}")


def _strand_orientation_at(d: Diagram, idx: int, lvl: int) -> int:
    """Traversal direction of the strand at slice position idx, level lvl."""
    return d.trace.strand_orient[_strand_id_at(d, idx, lvl)]


def _stabilize_at(d: Diagram, idx: int, lvl: int, sign: int) -> Diagram:
    """Insert a zigzag on the strand at (idx, lvl); Δtb=-1, Δrot=sign."""
    eps = _strand_orientation_at(d, idx, lvl)
    # Of the two zigzag shapes on a strand of direction eps, one raises
    # rotation and the other lowers it (both cusps point the same way).
    if sign * eps > 0:
        zigzag = (L(lvl + 1), R(lvl))
    else:
        zigzag = (L(lvl), R(lvl + 1))
    events = list(_events_of(d))
    events[idx:idx] = list(zigzag)
    return _rebuild(d, events)


def stabilize(
    d: Diagram,
    c: Optional[int] = None,
    sign: int = 1,
    site: Optional[Tuple[int, int]] = None,
) -> Diagram:
    """Stabilize component ``c``: tb drops by 1, rotation moves by ``sign``.

    ``site`` is an (event index, level) pair on the component; by default
    the first such site is used.
    """
    if sign not in (1, -1):
        raise MoveNotApplicable(f"stabilization sign must be ±1, got {sign}")
    tr = d.trace
    if c is None:
        if tr.n_components != 1:
            raise MoveNotApplicable("ambiguous component for stabilization")
        c = 0
    if site is None:
        widths = _slice_widths(d)
        for idx in range(len(_events_of(d)) + 1):
            for lvl in range(1, widths[idx] + 1):
                cur = _strand_id_at(d, idx, lvl)
                if tr.strand_component[cur] == c:
                    site = (idx, lvl)
                    break
            if site:
                break
        if site is None:
            raise MoveNotApplicable(f"component {c} has no visible strand")
    else:
        cur = _strand_id_at(d, site[0], site[1])
        if tr.strand_component[cur] != c:
            raise MoveNotApplicable(f"site {site} is not on component {c}")
    return _stabilize_at(d, site[0], site[1], sign)


def _strand_id_at(d: Diagram, idx: int, lvl: int) -> int:
    tr = d.trace
    cur = list(tr.initial_strands if isinstance(d, StandardFormDiagram) else [])
    for j, ev in enumerate(_events_of(d)[:idx]):
        i = ev.level
        if ev.kind == "L":
            cur[i - 1 : i - 1] = list(tr.event_strands[j])
        elif ev.kind == "R":
            del cur[i - 1 : i + 1]
        else:
            cur[i - 1], cur[i] = cur[i], cur[i - 1]
    if not 1 <= lvl <= len(cur):
        raise MoveNotApplicable(f"no strand at {idx}/{lvl}")
    return cur[lvl - 1]


# -- handle moves on standard-form diagrams ---------------------------------

def _slices(d: Diagram) -> List[List[int]]:
    """Strand ids of every vertical slice, one per word position 0..len."""
    tr = d.trace
    cur = list(tr.initial_strands)
    slices = [list(cur)]
    for idx, ev in enumerate(_events_of(d)):
        i = ev.level
        if ev.kind == "L":
            cur[i - 1 : i - 1] = list(tr.event_strands[idx])
        elif ev.kind == "R":
            del cur[i - 1 : i + 1]
        else:
            cur[i - 1], cur[i] = cur[i], cur[i - 1]
        slices.append(list(cur))
    return slices


def _markers(d: StandardFormDiagram) -> Dict[int, Tuple]:
    """A stable witness per component: a left-port position if it has
    one, else the event index of its creating left cusp."""
    tr = d.trace
    out: Dict[int, Tuple] = {}
    for pos in range(len(d.left_ports)):
        out.setdefault(tr.strand_component[pos], ("port", pos))
    for idx, ev in enumerate(d.events):
        if ev.kind == "L":
            out.setdefault(
                tr.strand_component[tr.event_strands[idx][0]], ("event", idx)
            )
    return out


def _marker_component(d_new: StandardFormDiagram, exp, marker, copy: int = 0) -> int:
    """Resolve a pre-expansion marker to a component of the rebuilt diagram."""
    tr = d_new.trace
    if marker[0] == "port":
        pos = exp.initial_blocks[marker[1]][0] + copy
        return tr.strand_component[pos]
    idx = marker[1]
    seen = 0
    for j, org in enumerate(exp.origins):
        if len(org) >= 2 and org[0] == "cusp" and org[1] == idx:
            if seen == copy:
                return tr.strand_component[tr.event_strands[j][0]]
            seen += 1
    raise DiagramError(f"marker {marker!r} lost in expansion")


def _port_links_of(d: StandardFormDiagram):
    right_pos = {p: i for i, p in enumerate(d.right_ports)}
    left_pos = {p: i for i, p in enumerate(d.left_ports)}
    return [(right_pos[p], left_pos[p]) for p in sorted_ports(d)]


def band_sites(h: SteinHandlebody, k: int, a: TwoHandleAttachment) -> list:
    """Deterministic list of band locations for handle_slide.

    Each entry is an (event index, level) pair in the doubled diagram
    where the sliding component runs adjacent to one push-off copy of
    the attaching circle.  Exposed so scripts can name sites stably.
    """
    _d2, _exp, _comps, sites = _slide_setup(h, k, a)
    return sites


def clean_band_sites(h: SteinHandlebody, k: int, a: TwoHandleAttachment) -> List[int]:
    """Indices into :func:`band_sites` that keep ``k``'s fingers intact.

    A band attached to a piece of ``k`` that is cusp-connected to a left
    port would thread that finger through the push-off, blocking later
    pull-offs; this filter keeps only sites on port-free pieces.
    """
    d2, _exp, (comp_k, _copies, _markers), sites = _slide_setup(h, k, a)
    tr = d2.trace
    adj: Dict[int, List[int]] = {}
    cur = list(range(len(d2.left_ports)))
    for idx, ev in enumerate(d2.events):
        i = ev.level
        if ev.kind == "L":
            u, v = tr.event_strands[idx]
            adj.setdefault(u, []).append(v)
            adj.setdefault(v, []).append(u)
            cur[i - 1 : i - 1] = [u, v]
        elif ev.kind == "R":
            u, v = cur[i - 1], cur[i]
            adj.setdefault(u, []).append(v)
            adj.setdefault(v, []).append(u)
            del cur[i - 1 : i + 1]
        else:
            cur[i - 1], cur[i] = cur[i], cur[i - 1]
    n_init = len(d2.left_ports)

    def touches_port(s: int) -> bool:
        seen: Set[int] = set()
        stack = [s]
        while stack:
            x = stack.pop()
            if x in seen:
                continue
            seen.add(x)
            stack.extend(adj.get(x, ()))
        return any(x < n_init for x in seen)

    slices = _slices(d2)
    out = []
    for idx2, (pos, lvl) in enumerate(sites):
        s1, s2 = slices[pos][lvl - 1], slices[pos][lvl]
        ks = s1 if tr.strand_component[s1] == comp_k else s2
        if not touches_port(ks):
            out.append(idx2)
    return out


def _slide_setup(h: SteinHandlebody, k: int, a: TwoHandleAttachment):
    d = h.diagram
    if not 0 <= k < d.n_components or not 0 <= a.component < d.n_components:
        raise MoveNotApplicable("no such component")
    if a.component == k:
        raise MoveNotApplicable("cannot slide a component over itself")
    if a not in h.attachments:
        raise MoveNotApplicable("attachment is not part of the handlebody")
    tb_c = tb_standard(d, a.component)
    if a.framing != tb_c - 1:
        raise NotSteinFramed(
            f"attachment framing {a.framing} is not tb - 1 = {tb_c - 1}"
        )
    tr = d.trace
    wide = {s for s in range(tr.n_strands) if tr.strand_component[s] == a.component}
    exp = cable_expand(
        d.events, 2, len(d.left_ports), _port_links_of(d), wide
    )
    if exp.first_cusp_index is None:
        raise BandObstructed(
            "attaching circle has no left cusp to carry the framing kink"
        )
    # Framing clasp: with the companion crossing already present this
    # makes three half-twists between the copies, so the push-off links
    # the circle tb - 1 times (contact framing minus one).
    o = exp.first_cusp_offset
    exp.splice(exp.first_cusp_index, [X(o + 1), X(o + 1)], ("clasp",))

    # Split every port the circle passes into two adjacent subslots.
    left_strand = {p: i for i, p in enumerate(d.left_ports)}
    def port_width(p):
        return 2 if tr.strand_component[left_strand[p]] == a.component else 1
    new_handles = []
    new_slot = {}  # old port -> first new slot number
    for hd in d.handles:
        pos = 1
        for s in range(1, hd.slots + 1):
            new_slot[(hd.id, s)] = pos
            pos += port_width((hd.id, s))
        new_handles.append(OneHandle(hd.id, pos - 1))
    def split(ports):
        out = []
        for p in ports:
            start = new_slot[p]
            out.extend((p[0], start + j) for j in range(port_width(p)))
        return out
    new_left, new_right = split(d.left_ports), split(d.right_ports)

    d2 = StandardFormDiagram(new_handles, new_left, exp.events, new_right)
    markers = _markers(d)
    comp_k = _marker_component(d2, exp, markers[k])
    copies = (
        _marker_component(d2, exp, markers[a.component], 0),
        _marker_component(d2, exp, markers[a.component], 1),
    )
    tr2 = d2.trace
    sites = []
    for pos, slc in enumerate(_slices(d2)):
        for lvl in range(1, len(slc)):
            pair = {tr2.strand_component[slc[lvl - 1]],
                    tr2.strand_component[slc[lvl]]}
            if comp_k in pair and (pair - {comp_k}) & set(copies):
                sites.append((pos, lvl))
    comps = (comp_k, copies, markers)
    return d2, exp, comps, sites


def handle_slide(
    h: SteinHandlebody,
    k: int,
    a: TwoHandleAttachment,
    site: int = 0,
) -> SteinHandlebody:
    """Replace component ``k`` by its band sum with a Stein-framed
    push-off of attachment ``a``'s circle.

    The push-off is the contact parallel copy with one extra negative
    kink (linking the circle tb - 1 times); the band is a cusp pair
    splicing ``k`` to the copy at the ``site``-th location of
    :func:`band_sites`.  All invariants of the result are recomputed
    from the rewritten diagram.
    """
    d2, exp, (comp_k, copies, markers), sites = _slide_setup(h, k, a)
    if not sites:
        raise BandObstructed("no band location between the two curves")
    if not 0 <= site < len(sites):
        raise BandObstructed(f"band site {site} of {len(sites)} does not exist")
    pos, lvl = sites[site]
    exp.splice(pos, [R(lvl), L(lvl)], ("band",))
    d3 = StandardFormDiagram(
        d2.handles, d2.left_ports, exp.events, d2.right_ports
    )
    k_new = _marker_component(d3, exp, markers[k])
    copy_comps = (
        _marker_component(d3, exp, markers[a.component], 0),
        _marker_component(d3, exp, markers[a.component], 1),
    )
    survivors = [c for c in copy_comps if c != k_new]
    if len(survivors) != 1:
        raise BandObstructed("band did not merge exactly one push-off copy")
    new_attachments = []
    for b in h.attachments:
        if b == a:
            new_attachments.append(TwoHandleAttachment(survivors[0], b.framing))
        else:
            new_attachments.append(
                TwoHandleAttachment(
                    _marker_component(d3, exp, markers[b.component]), b.framing
                )
            )
    return SteinHandlebody(d3, new_attachments)


def _split_word(d: StandardFormDiagram, doomed: Set[int], mixed: str):
    """Separate a word into events on surviving strands (levels
    compressed) and events entirely on doomed strands (finger-relative
    levels).  ``mixed`` says what to do with crossings between the two
    groups: "drop" them or "error" out.
    """
    tr = d.trace
    cur = list(tr.initial_strands)
    main: List[Event] = []
    inner: List[Event] = []
    for idx, ev in enumerate(d.events):
        i = ev.level
        if ev.kind == "L":
            strands = list(tr.event_strands[idx])
        elif ev.kind == "R":
            strands = [cur[i - 1], cur[i]]
        else:
            strands = [cur[i - 1], cur[i]]
        hit = [s in doomed for s in strands]
        if all(hit):
            sub = 1 + sum(1 for s in cur[: i - 1] if s in doomed)
            inner.append(Event(ev.kind, sub))
        elif any(hit):
            if mixed == "error" or ev.kind != "X":
                raise MoveNotApplicable(
                    f"event {idx} ties the finger to an outside strand"
                )
            # dropped: an inter-component crossing erased with the circle
        else:
            new_level = 1 + sum(1 for s in cur[: i - 1] if s not in doomed)
            main.append(Event(ev.kind, new_level))
        if ev.kind == "L":
            cur[i - 1 : i - 1] = strands
        elif ev.kind == "R":
            del cur[i - 1 : i + 1]
        else:
            cur[i - 1], cur[i] = cur[i], cur[i - 1]
    return main, inner


def _component_map(
    d: StandardFormDiagram,
    dead_strands: Set[int],
    port_rename,
    d_new,
    new_events: Sequence[Event],
) -> Dict[int, int]:
    """Old-component -> new-component map after deleting strands/ports.

    ``port_rename`` maps an old port to its new name, or None when the
    port was removed.  Components made entirely of dead strands are
    absent from the result.
    """
    tr, tr_new = d.trace, d_new.trace
    new_left = (
        list(d_new.left_ports) if isinstance(d_new, StandardFormDiagram) else []
    )
    out: Dict[int, int] = {}
    for pos, p in enumerate(d.left_ports):
        c = tr.strand_component[pos]
        q = port_rename(p)
        if c in out or pos in dead_strands or q is None:
            continue
        out[c] = tr_new.strand_component[new_left.index(q)]
    # Surviving left cusps keep their relative order in the new word.
    survivor_l = [
        idx for idx, ev in enumerate(d.events)
        if ev.kind == "L" and not set(tr.event_strands[idx]) & dead_strands
    ]
    new_l = [j for j, ev in enumerate(new_events) if ev.kind == "L"]
    for old_idx, new_idx in zip(survivor_l, new_l[: len(survivor_l)]):
        c = tr.strand_component[tr.event_strands[old_idx][0]]
        out.setdefault(
            c, tr_new.strand_component[tr_new.event_strands[new_idx][0]]
        )
    return out


def pull_off(d, hid, slot: int):
    """Pull a finger of one component back through a 1-handle.

    The component must pass through adjacent slots ``slot`` and
    ``slot + 1`` of handle ``hid`` with opposite signs, with the piece
    between the two passes (the finger) hanging on the left side of the
    handle and touching nothing outside itself.  The finger is carried
    through the handle: both ports disappear and the finger re-grows
    off the right edge of the strip, preserving every event shape.
    This is an isotopy: tb, rotation, and homology are unchanged.
    Accepts a StandardFormDiagram or a SteinHandlebody.
    """
    if isinstance(d, SteinHandlebody):
        new_d, cmap = _pull_off(d.diagram, hid, slot)
        return SteinHandlebody(
            new_d,
            [TwoHandleAttachment(cmap[b.component], b.framing)
             for b in d.attachments],
        )
    return _pull_off(d, hid, slot)[0]


def _pull_off(d: StandardFormDiagram, hid, slot: int):
    pa, pb = (hid, slot), (hid, slot + 1)
    for p in (pa, pb):
        if p not in d.left_ports:
            raise MoveNotApplicable(f"no port {p!r}")
    tr = d.trace
    la, lb = d.left_ports.index(pa), d.left_ports.index(pb)
    ra, rb = d.right_ports.index(pa), d.right_ports.index(pb)
    if abs(la - lb) != 1 or abs(ra - rb) != 1:
        raise MoveNotApplicable("handle slots are not adjacent at the edges")
    final = tr.final_strands
    orient = tr.strand_orient
    if orient[final[ra]] == orient[final[rb]]:
        raise MoveNotApplicable("the two passes run the same way")
    # The finger: everything cusp-connected to the left-port strands
    # without going back through any handle.
    cusp_adj: Dict[int, List[int]] = {}
    for idx, ev in enumerate(d.events):
        if ev.kind in "LR":
            u, v = tr.event_strands[idx] if ev.kind == "L" else _cusp_pair(d, idx)
            cusp_adj.setdefault(u, []).append(v)
            cusp_adj.setdefault(v, []).append(u)
    finger = set()
    stack = [la]
    while stack:
        s = stack.pop()
        if s in finger:
            continue
        finger.add(s)
        stack.extend(cusp_adj.get(s, ()))
    if lb not in finger:
        raise MoveNotApplicable("the two passes are not joined by a finger")
    # No finger strand may reach any other port.
    port_strands = set(range(len(d.left_ports))) | set(final)
    if finger & port_strands != {la, lb}:
        raise MoveNotApplicable("the finger is threaded through a handle")
    main, inner = _split_word(d, finger, mixed="error")
    # Rebuild ports and handles without the two cancelled slots.
    def keep(ports):
        return [p for p in ports if p not in (pa, pb)]
    def renumber(p):
        return (p[0], p[1] - 2) if p[0] == hid and p[1] > slot + 1 else p
    new_left = [renumber(p) for p in keep(d.left_ports)]
    new_right = [renumber(p) for p in keep(d.right_ports)]
    new_handles = [
        OneHandle(x.id, x.slots - 2) if x.id == hid else x for x in d.handles
    ]
    new_handles = [x for x in new_handles if x.slots > 0 or x.id != hid]
    # The surviving strands that used to end at the removed right ports
    # now continue into the re-grown finger at the end of the word.
    base = min(
        1 + sum(1 for s in final[:pos] if s not in finger) for pos in (ra, rb)
    )
    appendix = [Event(ev.kind, base - 1 + ev.level) for ev in inner]
    new_events = main + appendix
    new_d = StandardFormDiagram(new_handles, new_left, new_events, new_right)
    cmap = _component_map(
        d,
        finger,
        lambda p: None if p in (pa, pb) else renumber(p),
        new_d,
        new_events,
    )
    return new_d, cmap


def _cusp_pair(d: StandardFormDiagram, idx: int) -> Tuple[int, int]:
    """The two strand ids joined by the right cusp at event ``idx``."""
    tr = d.trace
    cur = list(tr.initial_strands)
    for j, ev in enumerate(d.events[:idx]):
        i = ev.level
        if ev.kind == "L":
            cur[i - 1 : i - 1] = list(tr.event_strands[j])
        elif ev.kind == "R":
            del cur[i - 1 : i + 1]
        else:
            cur[i - 1], cur[i] = cur[i], cur[i - 1]
    i = d.events[idx].level
    return cur[i - 1], cur[i]


def cancel_pair(h: SteinHandlebody, hid, a: TwoHandleAttachment):
    """Erase a cancelling 1-/2-handle pair.

    The attaching circle of ``a`` must run through handle ``hid``
    geometrically exactly once, with nothing else through the handle.
    Both the handle and the entire circle are erased; crossings between
    the circle and survivors vanish with it, which changes nothing the
    survivors can measure internally.  Returns a plain closed front
    when the last 1-handle goes away.
    """
    from .standard import geometric_passes

    d = h.diagram
    if a not in h.attachments:
        raise MoveNotApplicable("attachment is not part of the handlebody")
    if not any(x.id == hid for x in d.handles):
        raise MoveNotApplicable(f"no handle {hid!r}")
    c = a.component
    passes = geometric_passes(d, c, hid)
    if passes != 1:
        raise GeometricPassNotOne(
            f"circle passes handle {hid!r} {passes} times, need exactly 1"
        )
    tr = d.trace
    for pos, p in enumerate(d.left_ports):
        if p[0] == hid and tr.strand_component[pos] != c:
            raise OtherStrandsPresent(
                f"component {tr.strand_component[pos]} also runs through {hid!r}"
            )
    doomed = {s for s in range(tr.n_strands) if tr.strand_component[s] == c}
    main, _inner = _split_word(d, doomed, mixed="drop")
    dead_ports = {
        p for pos, p in enumerate(d.left_ports)
        if tr.strand_component[pos] == c
    }
    # Renumber the slots of every handle the circle passed through.
    new_handles = []
    slot_map = {}
    for x in d.handles:
        if x.id == hid:
            continue
        kept = [s for s in range(1, x.slots + 1) if (x.id, s) not in dead_ports]
        for j, s in enumerate(kept, start=1):
            slot_map[(x.id, s)] = (x.id, j)
        new_handles.append(OneHandle(x.id, len(kept)))
    def remap(ports):
        return [slot_map[p] for p in ports if p not in dead_ports and p[0] != hid]
    new_left, new_right = remap(d.left_ports), remap(d.right_ports)

    if new_handles:
        d_new = StandardFormDiagram(new_handles, new_left, main, new_right)
    else:
        d_new = FrontDiagram(main)
    survivors = _component_map(
        d,
        doomed,
        lambda p: slot_map.get(p),
        d_new,
        main,
    )
    new_attachments = [
        TwoHandleAttachment(survivors[b.component], b.framing)
        for b in h.attachments
        if b != a
    ]
    if not new_handles:
        if new_attachments:
            raise MoveNotApplicable(
                "2-handles remain but no 1-handles do; nothing to cancel into"
            )
        return d_new
    return SteinHandlebody(d_new, new_attachments)
