"""Bounded search over the move graph and randomized invariance fuzzing.

Search can only certify lower bounds: tb never increases under
Reidemeister moves and only increases by removing zigzags, so a
breadth-first sweep over word-shrinking moves plus slides recovers tb
lost to stabilization.  Upper bounds come from genus certificates, not
from search.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .errors import BudgetExhausted
from .front import (
    FrontDiagram,
    rotation,
    thurston_bennequin,
)
from .moves import Move, MoveScript, apply_move, enumerate_moves
from .standard import StandardFormDiagram, homology_vector, tb_standard

# Moves that never grow the event word: all Reidemeister contractions,
# far commutations (to expose patterns), and zigzag removal (the only
# move that raises tb).
_REDUCING_KINDS = ("R1a", "R1b", "R2a", "R2b", "R3", "Slide", "Destabilize")


def _reducing_moves(d) -> List[Move]:
    """Applicable word-shrinking moves, excluding R2 expansions."""
    out = []
    for m in enumerate_moves(d, _REDUCING_KINDS):
        if m.kind in ("R2a", "R2b") and m.data[0] == "expand":
            continue
        out.append(m)
    return out


@dataclass(frozen=True)
class SearchConfig:
    """Bounds and determinism knobs for the breadth-first search."""

    max_depth: int = 4
    budget: int = 10_000
    seed: int = 0
    canonicalize: bool = True

    def __post_init__(self):
        if self.budget <= 0:
            raise ValueError(f"budget must be positive, got {self.budget}")


@dataclass(frozen=True)
class SearchResult:
    """Best tb reached, a replayable witness, and the work done."""

    best_tb: int
    witness: MoveScript
    nodes_expanded: int
    exhausted: bool = False


def _key(d) -> Tuple:
    # Exact dedup on the event word; level-true, collision-free.
    return tuple(d.events)


def _tb_of(d) -> int:
    if isinstance(d, StandardFormDiagram):
        return min(tb_standard(d, c) for c in d.components)
    return min(thurston_bennequin(d, c) for c in d.components)


def bfs_max_tb(d, cfg: SearchConfig = SearchConfig()) -> SearchResult:
    """Breadth-first search for the highest tb reachable by reductions.

    Explores the closure of word-shrinking moves up to ``cfg.max_depth``,
    deduplicating on the exact event word.  The returned witness script
    replays from ``d`` to a diagram achieving ``best_tb``.  Raises
    BudgetExhausted (carrying the partial result) when the node budget
    runs out; the best found so far is still attached.
    """
    start_tb = _tb_of(d)
    best = (start_tb, MoveScript(()))
    frontier: List[Tuple[object, Tuple[Move, ...]]] = [(d, ())]
    seen = {_key(d)}
    nodes = 1
    for _depth in range(cfg.max_depth):
        nxt: List[Tuple[object, Tuple[Move, ...]]] = []
        for node, path in frontier:
            for m in _reducing_moves(node):
                if nodes >= cfg.budget:
                    raise BudgetExhausted(
                        f"node budget {cfg.budget} exhausted",
                        SearchResult(best[0], best[1], nodes, exhausted=True),
                    )
                child = apply_move(node, m)
                k = _key(child)
                if k in seen:
                    continue
                seen.add(k)
                nodes += 1
                child_path = path + (m,)
                tb = _tb_of(child)
                if tb > best[0]:
                    best = (tb, MoveScript(child_path))
                nxt.append((child, child_path))
        if not nxt:
            break
        frontier = nxt
    return SearchResult(best[0], best[1], nodes)


@dataclass(frozen=True)
class LocalMaxCertificate:
    """No diagram within ``depth`` moves has higher tb.  This says
    nothing about the global maximum."""

    tb: int
    depth: int
    is_local_max: bool
    nodes_expanded: int


def local_max_certificate(d, depth: int,
                          budget: int = 100_000) -> LocalMaxCertificate:
    """Sweep the depth-bounded move neighborhood for a tb improvement."""
    res = bfs_max_tb(d, SearchConfig(max_depth=depth, budget=budget))
    start = _tb_of(d)
    return LocalMaxCertificate(start, depth, res.best_tb <= start,
                               res.nodes_expanded)


@dataclass(frozen=True)
class FuzzReport:
    """Outcome of a random walk through tb-preserving moves."""

    steps_requested: int
    steps_applied: int
    violations: Tuple[str, ...]
    final: object


_FUZZ_KINDS = ("R1a", "R1b", "R2a", "R2b", "R3", "Slide")


def _fingerprint(d) -> Tuple:
    """The classical data a Reidemeister move must preserve, as a
    component-order-free multiset."""
    if isinstance(d, StandardFormDiagram):
        per = sorted(
            (tb_standard(d, c), homology_vector(d, c)) for c in d.components
        )
    else:
        per = sorted(
            (thurston_bennequin(d, c), rotation(d, c)) for c in d.components
        )
    return (d.n_components, tuple(per))


def fuzz_moves(d, seed: int, steps: int) -> FuzzReport:
    """Apply ``steps`` uniformly random applicable Reidemeister moves
    (both directions) and slides, checking the classical invariants
    after every step.  A correct engine reports zero violations."""
    rng = random.Random(seed)
    want = _fingerprint(d)
    current = d
    violations: List[str] = []
    applied = 0
    for step in range(steps):
        moves = enumerate_moves(current, _FUZZ_KINDS)
        if not moves:
            break
        m = rng.choice(moves)
        current = apply_move(current, m)
        applied += 1
        got = _fingerprint(current)
        if got != want:
            violations.append(
                f"step {step} ({m.kind} at {m.index}): {want} -> {got}"
            )
            want = got
    return FuzzReport(steps, applied, tuple(violations), current)
