"""Seeded random ideal corpus for the verification suites.

Sizes are desk scale on purpose: d <= 3 X-variables, at most 5
generators, exponents at most 3.  Graded-PID ideals are capped at two
X-variables so a radius-6 scan of the full (Y, X) lattice stays cheap.
"""

from __future__ import annotations

import random

from .lattice import CMonomial, CMonomialIdeal, FIELD, GRADED_PID

DEFAULT_SEED = 42
MAX_EXP = 3
MAX_GENS = 5


def random_ideal(rng: random.Random, base: str | None = None) -> CMonomialIdeal:
    if base is None:
        base = FIELD if rng.random() < 0.6 else GRADED_PID
    d = rng.randint(1, 3 if base == FIELD else 2)
    t = rng.randint(1, MAX_GENS)
    gens = []
    while len(gens) < t:
        y = 0
        if base == GRADED_PID and rng.random() < 0.6:
            y = rng.randint(1, MAX_EXP)
        x = tuple(rng.randint(0, MAX_EXP) for _ in range(d))
        if y == 0 and not any(x):
            continue  # skip the unit generator; it makes the ideal trivial
        gens.append(CMonomial(y, x))
    return CMonomialIdeal(d, base, tuple(gens))


def generate_corpus(seed: int = DEFAULT_SEED, n: int = 50) -> list[CMonomialIdeal]:
    """Deterministic corpus of n ideals, mixed over both bases."""
    rng = random.Random(seed)
    return [random_ideal(rng) for _ in range(n)]
