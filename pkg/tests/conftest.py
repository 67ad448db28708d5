"""Shared helpers: seeded random front words for property tests."""

import random

from frontkit.front import Event, FrontDiagram, L, R, X


def random_front(rng: random.Random, steps: int = 30) -> FrontDiagram:
    """A structurally valid closed front of roughly ``steps`` events."""
    events, width = [], 0
    for _ in range(steps):
        roll = rng.random()
        if width < 2 or roll < 0.4:
            events.append(L(rng.randint(1, width + 1)))
            width += 2
        elif roll < 0.75:
            events.append(X(rng.randint(1, width - 1)))
        else:
            events.append(R(rng.randint(1, width - 1)))
            width -= 2
    while width:
        events.append(R(rng.randint(1, width - 1)))
        width -= 2
    return FrontDiagram(events)


def random_knot(rng: random.Random, steps: int = 30) -> FrontDiagram:
    """A random valid front that happens to be a single component."""
    while True:
        d = random_front(rng, steps)
        if d.n_components == 1:
            return d
