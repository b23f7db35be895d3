"""Recovering a monomial ideal from the weight data of its derivation algebra.

The staircase weight function counts, for each lattice degree, the unit
steps landing in the co-support.  It determines the staircase (and hence
the ideal) by induction on the first coordinate, and the group-visible
dimension data at inner degrees plus the outer degrees of shape -1 is
enough to rebuild the whole function.
"""

from __future__ import annotations

from itertools import permutations, product
from typing import Iterable, Mapping

from .derivations import WeightDecomposition, outer_shape, weight_decomposition
from .errors import (
    DimensionMismatch,
    InconsistentWeightFunction,
    MissingKey,
    UnsupportedDimension,
)
from .ideals import (
    CoSupport,
    MonomialIdeal,
    Vec,
    ideal_from_cosupport,
    in_orthant,
    permute_vec,
    unit_vec,
    vadd,
    vsub,
)


class WeightFunction:
    """The step-count function of a staircase: degree -> number of unit
    steps from it that land in the point set.

    Stored sparsely; degrees absent from `values` evaluate to 0.  Values are
    bounded by the ambient dimension and the support lives in the half-open
    band with coordinates >= -1.
    """

    __slots__ = ("n", "values")

    def __init__(self, n: int, values: Mapping[Iterable[int], int]):
        if n < 1:
            raise ValueError("ambient dimension must be at least 1")
        stored: dict[Vec, int] = {}
        for raw, v in values.items():
            a = tuple(int(x) for x in raw)
            if len(a) != n:
                raise DimensionMismatch(f"degree {a!r} has length {len(a)}, expected {n}")
            v = int(v)
            if v == 0:
                continue
            if v < 0 or v > n:
                raise ValueError(f"weight {v} at {a!r} is outside [0, {n}]")
            if any(x < -1 for x in a):
                raise ValueError(f"degree {a!r} has a coordinate below -1")
            stored[a] = v
        self.n = n
        self.values = stored

    def value(self, degree: Iterable[int]) -> int:
        a = tuple(degree)
        if len(a) != self.n:
            raise DimensionMismatch(f"degree {a!r} has length {len(a)}, expected {self.n}")
        return self.values.get(a, 0)

    def support(self) -> frozenset[Vec]:
        return frozenset(self.values)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightFunction):
            return NotImplemented
        return self.n == other.n and self.values == other.values

    def __repr__(self) -> str:
        return f"WeightFunction({self.n}, {len(self.values)} nonzero)"


def weight_function_of(cos: CoSupport) -> WeightFunction:
    """The step-count function of a staircase, evaluated where it can live."""
    n = cos.n
    vals: dict[Vec, int] = {}
    for a in product(*(range(-1, b + 1) for b in cos.box)):
        count = sum(1 for i in range(n) if vadd(a, unit_vec(n, i)) in cos.points)
        if count:
            vals[a] = count
    return WeightFunction(n, vals)


def reconstruct_cosupport(m: WeightFunction) -> CoSupport:
    """Invert a step-count function, by induction on the first coordinate.

    A point with first coordinate a belongs to the staircase exactly when
    the function value one step back in direction 1 exceeds the steps
    already explained by the part of the staircase built so far.  Raises
    InconsistentWeightFunction when that difference leaves {0, 1} (a partial
    detector: some inconsistent inputs still produce a set, which then fails
    later checks).
    """
    n = m.n
    if not m.values:
        return CoSupport(n, [])
    support = list(m.values)
    first_max = max(a[0] for a in support)
    rest_max = [max(a[j] for a in support) for j in range(1, n)]
    e1 = unit_vec(n, 0)
    admitted: set[Vec] = set()
    for a in range(0, first_max + 2):
        for rest in product(*(range(0, hi + 1) for hi in rest_max)):
            point = (a, *rest)
            back = vsub(point, e1)
            explained = sum(
                1 for i in range(n) if vadd(back, unit_vec(n, i)) in admitted
            )
            indicator = m.value(back) - explained
            if indicator == 1:
                admitted.add(point)
            elif indicator != 0:
                raise InconsistentWeightFunction(
                    f"indicator {indicator} at {point!r}; the data is not a staircase weight function"
                )
    return CoSupport(n, admitted)


class RestrictedWeightData:
    """Weight-space dimensions at the degrees the symmetry group exposes.

    Keys are inner degrees and outer degrees with a single -1 coordinate
    (everything else provably carries dimension 0).  Degrees absent from the
    map are 0.  Querying a degree outside this domain raises MissingKey.
    """

    __slots__ = ("n", "dims")

    def __init__(self, n: int, dims: Mapping[Iterable[int], int]):
        if n < 1:
            raise ValueError("ambient dimension must be at least 1")
        stored: dict[Vec, int] = {}
        for raw, v in dims.items():
            a = tuple(int(x) for x in raw)
            if len(a) != n:
                raise DimensionMismatch(f"degree {a!r} has length {len(a)}, expected {n}")
            v = int(v)
            if v == 0:
                continue
            if v < 0:
                raise ValueError(f"negative dimension at {a!r}")
            if in_orthant(a):
                if v > n:
                    raise ValueError(f"inner dimension {v} at {a!r} exceeds {n}")
            else:
                if outer_shape(a) is None:
                    raise ValueError(
                        f"degree {a!r} cannot carry weight data (no single -1 axis)"
                    )
                if v > 1:
                    raise ValueError(f"outer dimension {v} at {a!r} exceeds 1")
            stored[a] = v
        self.n = n
        self.dims = stored

    @classmethod
    def from_decomposition(cls, decomp: WeightDecomposition) -> "RestrictedWeightData":
        return cls(decomp.n, decomp.dims())

    def value(self, degree: Iterable[int]) -> int:
        a = tuple(degree)
        if len(a) != self.n:
            raise DimensionMismatch(f"degree {a!r} has length {len(a)}, expected {self.n}")
        if not in_orthant(a) and outer_shape(a) is None:
            raise MissingKey(f"degree {a!r} is outside the restricted data domain")
        return self.dims.get(a, 0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RestrictedWeightData):
            return NotImplemented
        return self.n == other.n and self.dims == other.dims

    def __repr__(self) -> str:
        return f"RestrictedWeightData({self.n}, {len(self.dims)} nonzero)"


def restricted_weight_data(ideal: MonomialIdeal) -> RestrictedWeightData:
    """The group-visible weight data of an ideal's derivation algebra."""
    return RestrictedWeightData.from_decomposition(weight_decomposition(ideal))


def extend_restricted(data: RestrictedWeightData) -> WeightFunction:
    """Rebuild the full staircase weight function from restricted dimensions.

    At inner degrees the dimension already is the weight value.  At an outer
    degree with -1 on axis k, the weight is 1 whenever the inner neighbour
    one step along k has positive dimension (the staircase must contain that
    neighbour); otherwise the reported outer dimension is the weight.  All
    remaining outer degrees have weight 0.
    """
    n = data.n
    inner_keys = [a for a in data.dims if in_orthant(a)]
    if not inner_keys:
        return WeightFunction(n, {})
    bound = [max(a[j] for a in inner_keys) for j in range(n)]
    vals: dict[Vec, int] = {}
    for a in product(*(range(-1, b + 2) for b in bound)):
        if in_orthant(a):
            v = data.value(a)
        else:
            k = outer_shape(a)
            if k is None:
                continue
            neighbour = vadd(a, unit_vec(n, k))
            v = 1 if data.value(neighbour) > 0 else data.value(a)
        if v:
            vals[a] = v
    return WeightFunction(n, vals)


def reconstruct_ideal(data: RestrictedWeightData) -> MonomialIdeal:
    """Recover the monomial ideal whose weight data was observed."""
    return ideal_from_cosupport(reconstruct_cosupport(extend_restricted(data)))


def _check_perm_dim(n: int) -> None:
    if n > 8:
        raise UnsupportedDimension("permutation search is limited to n <= 8")


def iso_check(i1: MonomialIdeal, i2: MonomialIdeal) -> tuple[int, ...] | None:
    """The least coordinate permutation carrying the first ideal to the second.

    Permutations are compared in lexicographic one-line order; returns None
    when the ideals are not related by any permutation (in particular for
    different ambient dimensions).
    """
    if i1.n != i2.n:
        return None
    _check_perm_dim(i1.n)
    target = frozenset(i2.generators)
    for sigma in permutations(range(i1.n)):
        if frozenset(permute_vec(sigma, g) for g in i1.generators) == target:
            return sigma
    return None


def weight_data_iso_check(
    d1: RestrictedWeightData, d2: RestrictedWeightData
) -> tuple[int, ...] | None:
    """The least permutation matching two restricted weight data sets.

    Agrees with :func:`iso_check` on the reconstructed ideals: the weight
    data determines the ideal, so the matching permutations coincide.
    """
    if d1.n != d2.n:
        return None
    _check_perm_dim(d1.n)
    target = d2.dims
    for sigma in permutations(range(d1.n)):
        if {permute_vec(sigma, a): v for a, v in d1.dims.items()} == target:
            return sigma
    return None
