"""Compare the pure-Python and compiled trace kernels on random words.

Run as a script:  python3 benchmarks/bench_kernels.py [steps] [repeats]
"""

from __future__ import annotations

import random
import sys
import time

from frontkit._kernel import pure

try:
    from frontkit._kernel import _fast
except ImportError:
    _fast = None


def random_word(steps: int, rng: random.Random):
    """A structurally valid random (kind, level) word of about ``steps``
    events, closed back to the empty slice."""
    events, k = [], 0
    for _ in range(steps):
        if k < 2 or rng.random() < 0.4:
            events.append((pure.LEFT_CUSP, rng.randint(1, k + 1)))
            k += 2
        elif rng.random() < 0.5:
            events.append((pure.CROSSING, rng.randint(1, k - 1)))
        else:
            events.append((pure.RIGHT_CUSP, rng.randint(1, k - 1)))
            k -= 2
    while k:
        events.append((pure.RIGHT_CUSP, rng.randint(1, k - 1)))
        k -= 2
    return events


def bench(kernel, word, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        kernel.trace(word)
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> int:
    steps = int(sys.argv[1]) if len(sys.argv) > 1 else 100_000
    repeats = int(sys.argv[2]) if len(sys.argv) > 2 else 3
    word = random_word(steps, random.Random(0))
    t_pure = bench(pure, word, repeats)
    print(f"word length {len(word)}")
    print(f"pure     {t_pure * 1e3:9.2f} ms")
    if _fast is None:
        print("compiled kernel not built; run pip install -e .")
        return 0
    t_fast = bench(_fast, word, repeats)
    print(f"compiled {t_fast * 1e3:9.2f} ms   ({t_pure / t_fast:.1f}x)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
