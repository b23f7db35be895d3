"""Inverting weight data: step-count functions and the restricted extension."""

from __future__ import annotations

import pytest

from monolie import (
    CoSupport,
    DimensionMismatch,
    InconsistentWeightFunction,
    MissingKey,
    MonomialIdeal,
    RestrictedWeightData,
    UnsupportedDimension,
    WeightFunction,
    cosupport,
    extend_restricted,
    iso_check,
    reconstruct_cosupport,
    reconstruct_ideal,
    restricted_weight_data,
    weight_data_iso_check,
    weight_decomposition,
    weight_function_of,
)
from monolie.ideals import permute_vec

# step counts of the 2x2 box staircase over its whole band, by hand
BOX_WEIGHTS = {
    (-1, 0): 1,
    (-1, 1): 1,
    (0, -1): 1,
    (0, 0): 2,
    (0, 1): 1,
    (1, -1): 1,
    (1, 0): 1,
}


def _permuted(sigma: tuple[int, ...], ideal: MonomialIdeal) -> MonomialIdeal:
    return MonomialIdeal(ideal.n, [permute_vec(sigma, g) for g in ideal.generators])


def test_weight_function_validation() -> None:
    with pytest.raises(ValueError):
        WeightFunction(2, {(0, 0): 3})
    with pytest.raises(ValueError):
        WeightFunction(2, {(0, 0): -1})
    with pytest.raises(ValueError):
        WeightFunction(2, {(-2, 0): 1})
    with pytest.raises(DimensionMismatch):
        WeightFunction(2, {(0, 0, 0): 1})
    with pytest.raises(ValueError):
        WeightFunction(0, {})
    wf = WeightFunction(2, {(0, 0): 2, (1, 1): 0})
    assert wf.values == {(0, 0): 2}
    assert wf.value((1, 1)) == 0
    assert wf.support() == {(0, 0)}
    with pytest.raises(DimensionMismatch):
        wf.value((0,))


def test_box_weight_function(box_ideal) -> None:
    assert weight_function_of(cosupport(box_ideal)) == WeightFunction(2, BOX_WEIGHTS)


def test_reconstruct_cosupport_fixtures(corner_ideal, box_ideal, chain_ideal) -> None:
    for ideal in (corner_ideal, box_ideal, chain_ideal):
        cos = cosupport(ideal)
        assert reconstruct_cosupport(weight_function_of(cos)).points == cos.points
    assert reconstruct_cosupport(WeightFunction(2, {})).points == frozenset()


def test_reconstruct_cosupport_corpus(small_corpus) -> None:
    for ideal in small_corpus:
        cos = cosupport(ideal)
        assert reconstruct_cosupport(weight_function_of(cos)).points == cos.points


def test_inconsistent_weight_function_detected() -> None:
    bad = dict(BOX_WEIGHTS)
    bad[(1, 1)] = 2  # claims steps into the staircase that cannot exist
    with pytest.raises(InconsistentWeightFunction):
        reconstruct_cosupport(WeightFunction(2, bad))


def test_restricted_data_validation() -> None:
    with pytest.raises(ValueError):
        RestrictedWeightData(2, {(0, 0): 3})
    with pytest.raises(ValueError):
        RestrictedWeightData(2, {(-1, 0): 2})
    with pytest.raises(ValueError):
        RestrictedWeightData(2, {(-1, -1): 1})
    with pytest.raises(ValueError):
        RestrictedWeightData(2, {(0, 0): -1})
    with pytest.raises(DimensionMismatch):
        RestrictedWeightData(2, {(0,): 1})
    data = RestrictedWeightData(2, {(0, 0): 2, (1, 0): 0})
    assert data.dims == {(0, 0): 2}


def test_restricted_data_queries(corner_ideal) -> None:
    data = restricted_weight_data(corner_ideal)
    assert data.value((0, 0)) == 2
    assert data.value((-1, 2)) == 1
    assert data.value((4, 0)) == 0
    assert data.value((-1, 5)) == 0
    with pytest.raises(MissingKey):
        data.value((-2, 0))
    with pytest.raises(MissingKey):
        data.value((-1, -1))
    with pytest.raises(DimensionMismatch):
        data.value((0, 0, 0))


def test_restricted_data_from_decomposition(corner_ideal) -> None:
    decomp = weight_decomposition(corner_ideal)
    assert RestrictedWeightData.from_decomposition(decomp) == restricted_weight_data(
        corner_ideal
    )


def test_extension_recovers_full_function(corner_ideal, box_ideal) -> None:
    for ideal in (corner_ideal, box_ideal):
        extended = extend_restricted(restricted_weight_data(ideal))
        assert extended == weight_function_of(cosupport(ideal))
    assert extend_restricted(RestrictedWeightData(2, {})) == WeightFunction(2, {})


def test_reconstruct_ideal_fixtures(corner_ideal, box_ideal, chain_ideal) -> None:
    for ideal in (corner_ideal, box_ideal, chain_ideal):
        assert reconstruct_ideal(restricted_weight_data(ideal)) == ideal


def test_iso_check() -> None:
    first = MonomialIdeal(2, [(2, 0), (0, 3)])
    second = MonomialIdeal(2, [(3, 0), (0, 2)])
    assert iso_check(first, second) == (1, 0)
    assert iso_check(first, first) == (0, 1)
    assert iso_check(first, MonomialIdeal(2, [(2, 0), (0, 2)])) is None
    assert iso_check(first, MonomialIdeal(1, [(2,)])) is None
    big = MonomialIdeal(9, [tuple(2 if j == i else 0 for j in range(9)) for i in range(9)])
    with pytest.raises(UnsupportedDimension):
        iso_check(big, big)


def test_weight_data_iso_recovers_permutation(small_corpus) -> None:
    shifts = [(1, 0), (0, 2, 1), (2, 0, 1, 3)]
    for ideal in small_corpus:
        if ideal.n < 2:
            continue
        sigma = next(s for s in shifts if len(s) == ideal.n)
        permuted = _permuted(sigma, ideal)
        found = weight_data_iso_check(
            restricted_weight_data(ideal), restricted_weight_data(permuted)
        )
        assert found is not None
        assert _permuted(found, ideal) == permuted


def test_weight_data_iso_dimension_guards(corner_ideal, chain_ideal) -> None:
    assert (
        weight_data_iso_check(
            restricted_weight_data(corner_ideal), restricted_weight_data(chain_ideal)
        )
        is None
    )
