"""The acceptance gate: ten checks, each printing its own pass line.

Run with ``pytest -sv tests/test_acceptance.py`` to see the per-criterion
lines; every check uses exact integer or rational arithmetic, and the timed
ones assert their budget explicitly.
"""

from __future__ import annotations

import time
from fractions import Fraction
from itertools import product
from random import Random

from monolie import (
    HomogeneousDerivation,
    MonomialIdeal,
    NotADerivation,
    WeightDecomposition,
    analyze,
    candidate_degrees,
    cosupport,
    derivation_matrix,
    extend_restricted,
    ideal_from_cosupport,
    is_trivial_on_quotient,
    lie_bracket,
    matrix_commutator,
    parse_ideal,
    reconstruct_cosupport,
    reconstruct_ideal,
    restricted_weight_data,
    weight_data_iso_check,
    weight_decomposition,
    weight_function_of,
    weight_space,
)
from monolie.ideals import in_orthant, permute_vec, vadd, vsub

CORNER = "y^3, x*y, x^3"
BOX = "x^2, y^2"
CHAIN = "x^3"


def _passed(num: int, slug: str, elapsed: float | None = None) -> None:
    timing = f" ({elapsed:.3f}s)" if elapsed is not None else ""
    print(f"criterion {num} ({slug}): PASS{timing}", flush=True)


def test_criterion_1_corner_fixture() -> None:
    start = time.perf_counter()
    report = analyze(parse_ideal(CORNER))
    elapsed = time.perf_counter() - start
    assert report.dims() == {
        (0, 0): 2,
        (1, 0): 1,
        (0, 1): 1,
        (-1, 2): 1,
        (2, -1): 1,
    }
    assert report.algebra_dim == 5
    assert report.lie_dim == 6
    assert elapsed < 1.0
    _passed(1, "corner fixture", elapsed)


def test_criterion_2_box_fixture() -> None:
    start = time.perf_counter()
    report = analyze(parse_ideal(BOX))
    elapsed = time.perf_counter() - start
    assert report.dims() == {(0, 0): 2, (1, 0): 1, (0, 1): 1}
    assert all(in_orthant(deg) for deg, _mult in report.roots)  # no outer roots
    assert report.lie_dim == 4
    assert len(report.perms) == 2
    assert elapsed < 1.0
    _passed(2, "box fixture", elapsed)


def test_criterion_3_chain_fixture() -> None:
    start = time.perf_counter()
    report = analyze(parse_ideal(CHAIN))
    elapsed = time.perf_counter() - start
    assert report.ideal.n == 1
    assert report.dims() == {(0,): 1, (1,): 1}
    assert report.lie_dim == 2
    assert elapsed < 1.0
    _passed(3, "chain fixture", elapsed)


def test_criterion_4_basis_covectors_distinguish() -> None:
    box_space = weight_space(parse_ideal(BOX), (1, 0))
    corner_space = weight_space(parse_ideal(CORNER), (1, 0))
    # same degree, same dimension, different operators
    assert box_space.basis == (HomogeneousDerivation((1, 0), (0, 1)),)
    assert corner_space.basis == (HomogeneousDerivation((1, 0), (1, 0)),)
    assert box_space.basis != corner_space.basis
    _passed(4, "basis covectors")


def test_criterion_5_roundtrip_corpus(corpus: list[MonomialIdeal]) -> None:
    start = time.perf_counter()
    for ideal in corpus:
        assert reconstruct_ideal(restricted_weight_data(ideal)) == ideal
    elapsed = time.perf_counter() - start
    # reconstruction lands on minimal generators even when the input had spares
    padded = MonomialIdeal(2, [(2, 0), (0, 2), (2, 2), (3, 1)])
    assert reconstruct_ideal(restricted_weight_data(padded)) == MonomialIdeal(
        2, [(2, 0), (0, 2)]
    )
    assert elapsed < 30.0
    _passed(5, f"round trip x{len(corpus)}", elapsed)


def test_criterion_6_restricted_data_suffices(corpus: list[MonomialIdeal]) -> None:
    for ideal in corpus:
        full = weight_function_of(cosupport(ideal))
        from_full = ideal_from_cosupport(reconstruct_cosupport(full))
        from_restricted = reconstruct_ideal(restricted_weight_data(ideal))
        assert from_restricted == from_full
        # stronger: the restricted data already determines the whole function
        assert extend_restricted(restricted_weight_data(ideal)) == full
    _passed(6, f"restricted data x{len(corpus)}")


def test_criterion_7_triviality_oracle(corpus: list[MonomialIdeal]) -> None:
    checks = 0
    for ideal in corpus:
        for degree in candidate_degrees(ideal):
            for k in range(ideal.n):
                deriv = HomogeneousDerivation.unit(degree, k)
                trivial = is_trivial_on_quotient(ideal, deriv)
                try:
                    matrix = derivation_matrix(ideal, deriv)
                except NotADerivation:
                    # only nonzero non-derivations are rejected
                    assert not trivial
                else:
                    assert trivial == matrix.is_zero()
                checks += 1
    assert checks > 100_000
    _passed(7, f"triviality oracle x{checks}")


def _random_derivation(
    rng: Random, ideal: MonomialIdeal, decomp: WeightDecomposition
) -> HomogeneousDerivation:
    degrees = decomp.degrees()
    degree = degrees[rng.randrange(len(degrees))]
    space = decomp[degree]
    if in_orthant(degree):
        coeffs = [Fraction(rng.randint(-3, 3), rng.randint(1, 4)) for _ in space.basis]
        if not any(coeffs):
            coeffs[0] = Fraction(1)
        covector = [Fraction(0)] * ideal.n
        for coeff, base in zip(coeffs, space.basis):
            for i, c in enumerate(base.covector):
                covector[i] += coeff * c
        return HomogeneousDerivation(degree, covector)
    scale = Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(1, 3))
    return HomogeneousDerivation(degree, tuple(scale * c for c in space.basis[0].covector))


def _check_leibniz(ideal: MonomialIdeal, deriv: HomogeneousDerivation) -> None:
    """D(uv) == D(u)v + uD(v) for all basis monomials with uv in the cosupport."""
    matrix = derivation_matrix(ideal, deriv)
    cols = matrix.columns
    pts = cosupport(ideal).points
    for c in matrix.basis:
        hit = cols.get(c)
        lhs = hit[1] if hit is not None else Fraction(0)
        for m in product(*(range(e + 1) for e in c)):
            mp = vsub(c, m)
            rhs = Fraction(0)
            left = cols.get(m)
            if left is not None and vadd(left[0], mp) in pts:
                rhs += left[1]
            right = cols.get(mp)
            if right is not None and vadd(right[0], m) in pts:
                rhs += right[1]
            assert rhs == lhs


def test_criterion_8_lie_oracle(corpus: list[MonomialIdeal]) -> None:
    rng = Random(8)
    decomps: dict[MonomialIdeal, WeightDecomposition] = {}
    for _ in range(200):
        ideal = corpus[rng.randrange(len(corpus))]
        decomp = decomps.get(ideal)
        if decomp is None:
            decomp = decomps[ideal] = weight_decomposition(ideal)
        d1 = _random_derivation(rng, ideal, decomp)
        d2 = _random_derivation(rng, ideal, decomp)
        bracket = lie_bracket(ideal, d1, d2)
        m1 = derivation_matrix(ideal, d1)
        m2 = derivation_matrix(ideal, d2)
        assert matrix_commutator(m1, m2) == derivation_matrix(ideal, bracket)
        _check_leibniz(ideal, d1)
        _check_leibniz(ideal, d2)
    _passed(8, "lie oracle x200")


def test_criterion_9_restriction_blind_spot() -> None:
    corner_data = restricted_weight_data(parse_ideal(CORNER))
    box_data = restricted_weight_data(parse_ideal(BOX))

    def inner_part(data):
        return {a: v for a, v in data.dims.items() if in_orthant(a)}

    # the inner restrictions agree...
    assert inner_part(corner_data) == inner_part(box_data) == {
        (0, 0): 2,
        (1, 0): 1,
        (0, 1): 1,
    }
    # ...yet no permutation matches the full restricted data
    assert weight_data_iso_check(corner_data, box_data) is None
    assert weight_data_iso_check(box_data, corner_data) is None
    _passed(9, "outer degrees discriminate")


def test_criterion_10_equivariance(corpus: list[MonomialIdeal]) -> None:
    rng = Random(10)
    for ideal in corpus[:100]:
        sigma = list(range(ideal.n))
        rng.shuffle(sigma)
        sigma = tuple(sigma)
        permuted = MonomialIdeal(ideal.n, [permute_vec(sigma, g) for g in ideal.generators])
        report = analyze(ideal)
        permuted_report = analyze(permuted)
        assert permuted_report.dims() == {
            permute_vec(sigma, deg): dim for deg, dim in report.dims().items()
        }
        assert permuted_report.algebra_dim == report.algebra_dim
        assert permuted_report.lie_dim == report.lie_dim
        assert permuted_report.torus_rank == report.torus_rank
        assert permuted_report.faithful == report.faithful
        assert len(permuted_report.perms) == len(report.perms)
        # the operators themselves transport, not just the dimensions
        for degree, space in weight_decomposition(ideal).spaces.items():
            image = weight_space(permuted, permute_vec(sigma, degree))
            assert {
                HomogeneousDerivation(permute_vec(sigma, d.degree), permute_vec(sigma, d.covector))
                for d in space.basis
            } == set(image.basis)
    _passed(10, "equivariance x100")
