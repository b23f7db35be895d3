"""Shared fixtures: three worked staircases and the seeded random corpus."""

from __future__ import annotations

import pytest

from monolie import MonomialIdeal, random_corpus

CORPUS_SEED = 20250819


@pytest.fixture(scope="session")
def corpus() -> list[MonomialIdeal]:
    """500 full finite ideals, ambient dimension 1..4, pure powers up to 6."""
    return random_corpus(seed=CORPUS_SEED, count=500)


@pytest.fixture(scope="session")
def small_corpus(corpus: list[MonomialIdeal]) -> list[MonomialIdeal]:
    """A thin slice of the corpus for unit-level property checks."""
    return corpus[::10]


@pytest.fixture
def corner_ideal() -> MonomialIdeal:
    """y^3, x*y, x^3 — an L-shaped staircase with two outer roots."""
    return MonomialIdeal(2, [(0, 3), (1, 1), (3, 0)])


@pytest.fixture
def box_ideal() -> MonomialIdeal:
    """x^2, y^2 — the 2x2 box staircase, inner roots only."""
    return MonomialIdeal(2, [(2, 0), (0, 2)])


@pytest.fixture
def chain_ideal() -> MonomialIdeal:
    """x^3 in one variable."""
    return MonomialIdeal(1, [(3,)])
