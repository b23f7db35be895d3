"""Seeded random corpora of full finite monomial ideals, for fuzzing."""

from __future__ import annotations

import random

from .ideals import MonomialIdeal


def random_full_finite_ideal(rng: random.Random, n: int, max_exp: int) -> MonomialIdeal:
    """Draw one full finite ideal.

    Pure powers with exponents uniform in [1, max_exp] on every axis, plus
    up to n extra generators inside the pure-power box; drawn ideals that
    fail fullness (some variable survives as a generator) are rejected and
    redrawn.
    """
    if n < 1 or max_exp < 1:
        raise ValueError("need n >= 1 and max_exp >= 1")
    while True:
        d = [rng.randint(1, max_exp) for _ in range(n)]
        gens = [tuple(d[i] if j == i else 0 for j in range(n)) for i in range(n)]
        for _ in range(rng.randint(0, n)):
            extra = tuple(rng.randint(0, d[i]) for i in range(n))
            if any(extra):
                gens.append(extra)
        ideal = MonomialIdeal(n, gens)
        if ideal.is_full():
            return ideal


def random_corpus(
    seed: int, count: int, max_n: int = 4, max_exp: int = 6
) -> list[MonomialIdeal]:
    """A reproducible list of ideals with ambient dimension up to max_n."""
    rng = random.Random(seed)
    return [
        random_full_finite_ideal(rng, rng.randint(1, max_n), max_exp)
        for _ in range(count)
    ]
