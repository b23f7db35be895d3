"""Weight spaces of the derivation Lie algebra of a finite monomial algebra.

A homogeneous derivation of lattice degree a acts on monomials by
x^m -> p(m) * x^(m + a) for a fixed rational covector p.  On the quotient by
a monomial ideal these operators are matrices with at most one nonzero entry
per column, and the degrees carrying nonzero operators (together with their
dimensions) are the weight data this package computes and inverts.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Iterable, Iterator

from .errors import (
    DimensionMismatch,
    NotADerivation,
    NotInner,
    NotOuter,
    UnsupportedDimension,
)
from .ideals import (
    CoSupport,
    MonomialIdeal,
    Vec,
    cosupport,
    grlex_key,
    in_orthant,
    permute_vec,
    unit_vec,
    vadd,
    vsub,
)


def format_covector(covector: tuple[Fraction, ...]) -> str:
    """Human form of a covector in the dual basis, e.g. 'e2*' or '2*e1*+e3*'."""
    terms = []
    for i, c in enumerate(covector):
        if c == 0:
            continue
        if c == 1:
            terms.append(f"e{i + 1}*")
        elif c == -1:
            terms.append(f"-e{i + 1}*")
        else:
            terms.append(f"{c}*e{i + 1}*")
    if not terms:
        return "0"
    out = terms[0]
    for t in terms[1:]:
        out += t if t.startswith("-") else "+" + t
    return out


class HomogeneousDerivation:
    """A derivation sending x^m to p(m) * x^(m + degree).

    `degree` is an integer lattice vector; the covector p has exact rational
    coordinates in the dual basis.
    """

    __slots__ = ("degree", "covector")

    def __init__(self, degree: Iterable[int], covector: Iterable[Fraction | int]):
        self.degree: Vec = tuple(int(a) for a in degree)
        self.covector: tuple[Fraction, ...] = tuple(Fraction(c) for c in covector)
        if len(self.covector) != len(self.degree):
            raise DimensionMismatch(
                f"covector length {len(self.covector)} != degree length {len(self.degree)}"
            )

    @classmethod
    def unit(cls, degree: Iterable[int], k: int) -> "HomogeneousDerivation":
        """The derivation with covector the k-th dual basis vector."""
        degree = tuple(degree)
        return cls(degree, unit_vec(len(degree), k))

    def coeff_at(self, m: Iterable[int]) -> Fraction:
        """Evaluate the covector on the exponent m."""
        return sum((c * x for c, x in zip(self.covector, m)), Fraction(0))

    def is_zero(self) -> bool:
        return not any(self.covector)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HomogeneousDerivation):
            return NotImplemented
        return self.degree == other.degree and self.covector == other.covector

    def __hash__(self) -> int:
        return hash((self.degree, self.covector))

    def __repr__(self) -> str:
        return f"HomogeneousDerivation({self.degree}, {format_covector(self.covector)})"


def cosupport_steps(ideal: MonomialIdeal, degree: Iterable[int]) -> frozenset[int]:
    """Axes i (0-based) for which degree + e_i lands in the co-support.

    For an inner degree these are exactly the dual directions spanning the
    weight space; the count is the staircase weight function evaluated at
    the degree.
    """
    a = tuple(degree)
    out = []
    for i in range(ideal.n):
        step = vadd(a, unit_vec(ideal.n, i))
        if in_orthant(step) and not ideal.contains(step):
            out.append(i)
    return frozenset(out)


def outer_shape(degree: Iterable[int]) -> int | None:
    """The unique axis with coordinate -1, if the degree has outer shape.

    An outer degree can only carry derivations when exactly one coordinate
    equals -1 and every other coordinate is nonnegative; returns that axis,
    or None.  Raises NotOuter when the degree lies in the orthant.
    """
    a = tuple(degree)
    if in_orthant(a):
        raise NotOuter(f"{a!r} lies in the nonnegative orthant")
    negatives = [i for i, x in enumerate(a) if x < 0]
    if len(negatives) == 1 and a[negatives[0]] == -1:
        return negatives[0]
    return None


def preserves_ideal(ideal: MonomialIdeal, degree: Iterable[int], k: int) -> bool:
    """Whether the shift by `degree` with covector e_k* maps the ideal into itself.

    Checking the generators suffices: generators with zero k-th exponent are
    killed by the covector, and the rest must be carried into the ideal's
    support (or out of the orthant, which cannot happen for them).
    """
    a = tuple(degree)
    for g in ideal.generators:
        if g[k] == 0:
            continue
        shifted = vadd(a, g)
        if in_orthant(shifted) and not ideal.contains(shifted):
            return False
    return True


def is_trivial_on_quotient(ideal: MonomialIdeal, deriv: HomogeneousDerivation) -> bool:
    """Whether the induced operator on the quotient algebra is zero.

    The operator sends a basis monomial x^m to p(m) * x^(m + degree),
    truncated to zero when the target leaves the co-support; it is nonzero
    exactly when some co-support column survives.  For a covector supported
    on a single axis k, downward closure collapses the scan to two
    membership tests: the componentwise-smallest admissible column
    max(e_k, -degree) is a surviving column exactly when one exists.
    """
    nonzero = [(i, c) for i, c in enumerate(deriv.covector) if c]
    if not nonzero:
        return True
    a = deriv.degree
    pts = cosupport(ideal).points
    if len(nonzero) == 1:
        k = nonzero[0][0]
        least = tuple(max(1 if i == k else 0, -x) for i, x in enumerate(a))
        return least not in pts or vadd(least, a) not in pts
    for m in pts:
        if vadd(m, a) in pts and deriv.coeff_at(m) != 0:
            return False
    return True


@dataclass(frozen=True)
class WeightSpace:
    """One graded piece: a degree and a basis of homogeneous derivations."""

    degree: Vec
    basis: tuple[HomogeneousDerivation, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)


def weight_space(ideal: MonomialIdeal, degree: Iterable[int]) -> WeightSpace:
    """The weight space at an arbitrary lattice degree (possibly zero)."""
    a = tuple(int(x) for x in degree)
    if len(a) != ideal.n:
        raise DimensionMismatch(f"degree {a!r} has length {len(a)}, expected {ideal.n}")
    if in_orthant(a):
        basis = tuple(
            HomogeneousDerivation.unit(a, i) for i in sorted(cosupport_steps(ideal, a))
        )
        return WeightSpace(a, basis)
    k = outer_shape(a)
    if k is None or not preserves_ideal(ideal, a, k):
        return WeightSpace(a, ())
    if ideal.contains(vadd(a, unit_vec(ideal.n, k))):
        return WeightSpace(a, ())
    return WeightSpace(a, (HomogeneousDerivation.unit(a, k),))


def inner_weight_dim(ideal: MonomialIdeal, degree: Iterable[int]) -> int:
    """Dimension at an inner degree: the number of co-support steps."""
    a = tuple(degree)
    if not in_orthant(a):
        raise NotInner(f"{a!r} has a negative coordinate")
    return len(cosupport_steps(ideal, a))


def outer_weight_dim(ideal: MonomialIdeal, degree: Iterable[int]) -> int:
    """Dimension at an outer degree (always 0 or 1)."""
    a = tuple(degree)
    if in_orthant(a):
        raise NotOuter(f"{a!r} lies in the nonnegative orthant")
    return weight_space(ideal, a).dim


def weight_dim(ideal: MonomialIdeal, degree: Iterable[int]) -> int:
    """Dimension of the weight space at any lattice degree."""
    return weight_space(ideal, degree).dim


def candidate_degrees(ideal: MonomialIdeal) -> frozenset[Vec]:
    """All degrees that can possibly carry a nonzero weight space.

    These are the backward unit steps from co-support points; every other
    degree has dimension zero (inner spaces need a step into the staircase,
    outer spaces need the step along their -1 axis).
    """
    cos = cosupport(ideal)
    n = ideal.n
    cands: set[Vec] = set()
    for c in cos.points:
        for i in range(n):
            cands.add(vsub(c, unit_vec(n, i)))
    return frozenset(cands)


class WeightDecomposition:
    """All weight spaces of positive dimension, keyed by degree.

    Iteration and the `spaces` mapping follow graded lexicographic order on
    the degrees, so reports are deterministic.
    """

    __slots__ = ("n", "spaces")

    def __init__(self, n: int, spaces: dict[Vec, WeightSpace]):
        self.n = n
        self.spaces = dict(sorted(spaces.items(), key=lambda kv: grlex_key(kv[0])))

    def dims(self) -> dict[Vec, int]:
        return {a: ws.dim for a, ws in self.spaces.items()}

    @property
    def total_dim(self) -> int:
        return sum(ws.dim for ws in self.spaces.values())

    def degrees(self) -> tuple[Vec, ...]:
        return tuple(self.spaces)

    def get(self, degree: Vec) -> WeightSpace | None:
        return self.spaces.get(tuple(degree))

    def __getitem__(self, degree: Vec) -> WeightSpace:
        return self.spaces[tuple(degree)]

    def __iter__(self) -> Iterator[WeightSpace]:
        return iter(self.spaces.values())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightDecomposition):
            return NotImplemented
        return self.n == other.n and self.spaces == other.spaces

    def __repr__(self) -> str:
        inside = ", ".join(f"{a}:{ws.dim}" for a, ws in self.spaces.items())
        return f"WeightDecomposition({self.n}, {{{inside}}})"


def weight_decomposition(ideal: MonomialIdeal) -> WeightDecomposition:
    """The full graded decomposition of the derivation Lie algebra."""
    spaces: dict[Vec, WeightSpace] = {}
    for a in candidate_degrees(ideal):
        ws = weight_space(ideal, a)
        if ws.dim > 0:
            spaces[a] = ws
    return WeightDecomposition(ideal.n, spaces)


def _validate_derivation(ideal: MonomialIdeal, deriv: HomogeneousDerivation) -> None:
    if len(deriv.degree) != ideal.n:
        raise DimensionMismatch(
            f"derivation degree {deriv.degree!r} has length {len(deriv.degree)}, expected {ideal.n}"
        )
    if in_orthant(deriv.degree) or deriv.is_zero():
        return
    k = outer_shape(deriv.degree)
    if k is None:
        raise NotADerivation(
            f"outer degree {deriv.degree!r} admits no derivations (no single -1 axis)"
        )
    if any(c != 0 for i, c in enumerate(deriv.covector) if i != k):
        raise NotADerivation(
            f"outer degree {deriv.degree!r} only admits covectors along axis {k + 1}"
        )
    if not preserves_ideal(ideal, deriv.degree, k):
        raise NotADerivation(
            f"{deriv!r} does not map the ideal into itself"
        )


class DerivationMatrix:
    """Matrix of a homogeneous derivation on the co-support monomial basis.

    Rows and columns are indexed by `basis` (graded lexicographic order).
    Each column holds at most one nonzero entry, so storage is a map
    column-point -> (row-point, coefficient); dense rows are available via
    :meth:`rows`.
    """

    __slots__ = ("basis", "columns")

    def __init__(self, basis: tuple[Vec, ...], columns: dict[Vec, tuple[Vec, Fraction]]):
        self.basis = basis
        self.columns = columns

    def image_of(self, m: Vec) -> tuple[Vec, Fraction] | None:
        """The (row, coefficient) the basis monomial m is sent to, if nonzero."""
        return self.columns.get(tuple(m))

    def entry(self, row: Vec, col: Vec) -> Fraction:
        hit = self.columns.get(tuple(col))
        if hit is not None and hit[0] == tuple(row):
            return hit[1]
        return Fraction(0)

    def rows(self) -> tuple[tuple[Fraction, ...], ...]:
        """Dense row-major matrix over exact rationals."""
        index = {m: j for j, m in enumerate(self.basis)}
        size = len(self.basis)
        dense = [[Fraction(0)] * size for _ in range(size)]
        for col, (row, coeff) in self.columns.items():
            dense[index[row]][index[col]] = coeff
        return tuple(tuple(r) for r in dense)

    def is_zero(self) -> bool:
        return not self.columns

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DerivationMatrix):
            return NotImplemented
        return self.basis == other.basis and self.columns == other.columns

    def __repr__(self) -> str:
        return f"DerivationMatrix({len(self.basis)}x{len(self.basis)}, {len(self.columns)} nonzero)"


def derivation_matrix(ideal: MonomialIdeal, deriv: HomogeneousDerivation) -> DerivationMatrix:
    """The operator induced on the quotient, on the graded-lex monomial basis.

    Column m carries p(m) at row m + degree when that point stays in the
    co-support, and is zero otherwise.  Raises NotADerivation when the
    degree/covector pair acts as a nonzero non-derivation; pairs whose
    operator is zero are accepted, since brackets of honest derivations
    routinely land on non-carrying degrees with a nonzero formal covector.
    """
    try:
        _validate_derivation(ideal, deriv)
    except NotADerivation:
        if not is_trivial_on_quotient(ideal, deriv):
            raise
    cos = cosupport(ideal)
    basis = cos.sorted_points()
    pts = cos.points
    deg = deriv.degree
    columns: dict[Vec, tuple[Vec, Fraction]] = {}
    nonzero = [(i, c) for i, c in enumerate(deriv.covector) if c]
    if len(nonzero) == 1:
        k, scale = nonzero[0]
        for m in basis:
            mk = m[k]
            if mk:
                target = vadd(m, deg)
                if target in pts:
                    columns[m] = (target, scale * mk)
    else:
        for m in basis:
            target = vadd(m, deg)
            if target in pts:
                coeff = deriv.coeff_at(m)
                if coeff != 0:
                    columns[m] = (target, coeff)
    return DerivationMatrix(basis, columns)


def matrix_commutator(a: DerivationMatrix, b: DerivationMatrix) -> DerivationMatrix:
    """a∘b - b∘a for two derivation matrices on the same basis."""
    if a.basis != b.basis:
        raise DimensionMismatch("matrices are over different bases")
    accum: dict[Vec, dict[Vec, Fraction]] = {}

    def add(col: Vec, row: Vec, coeff: Fraction) -> None:
        rows = accum.setdefault(col, {})
        rows[row] = rows.get(row, Fraction(0)) + coeff

    for m, (mid, q) in b.columns.items():
        hit = a.columns.get(mid)
        if hit is not None:
            add(m, hit[0], hit[1] * q)
    for m, (mid, p) in a.columns.items():
        hit = b.columns.get(mid)
        if hit is not None:
            add(m, hit[0], -hit[1] * p)
    columns: dict[Vec, tuple[Vec, Fraction]] = {}
    for col, rows in accum.items():
        nonzero = [(r, c) for r, c in rows.items() if c != 0]
        if not nonzero:
            continue
        # homogeneous inputs land every composition at col + deg(a) + deg(b)
        if len(nonzero) > 1:
            raise ValueError("commutator of inhomogeneous matrices")
        columns[col] = nonzero[0]
    return DerivationMatrix(a.basis, columns)


def lie_bracket(
    ideal: MonomialIdeal,
    d1: HomogeneousDerivation,
    d2: HomogeneousDerivation,
) -> HomogeneousDerivation:
    """The bracket [d1, d2], again homogeneous of the summed degree.

    With covectors p, q the bracket covector is p(deg q) * q - q(deg p) * p.
    """
    _validate_derivation(ideal, d1)
    _validate_derivation(ideal, d2)
    pb = d1.coeff_at(d2.degree)
    qa = d2.coeff_at(d1.degree)
    cov = tuple(pb * qi - qa * pi for pi, qi in zip(d1.covector, d2.covector))
    return HomogeneousDerivation(vadd(d1.degree, d2.degree), cov)


@dataclass(frozen=True)
class AutWeightReport:
    """Weight data of the connected automorphism group of the quotient.

    torus_rank: dimension of the diagonal torus (the ambient n).
    roots: nonzero degrees with positive weight-space dimension.
    lie_dim: total dimension of the derivation Lie algebra.
    algebra_dim: K-dimension of the quotient algebra.
    faithful: whether the occurring degrees span the full character lattice.
    """

    torus_rank: int
    roots: tuple[tuple[Vec, int], ...]
    lie_dim: int
    algebra_dim: int
    faithful: bool


def aut_weight_report(ideal: MonomialIdeal) -> AutWeightReport:
    """Bundle the group-visible weight data of the quotient algebra."""
    from .ideals import weights_generate_lattice

    decomp = weight_decomposition(ideal)
    cos = cosupport(ideal)
    roots = tuple(
        (a, ws.dim) for a, ws in decomp.spaces.items() if any(a)
    )
    return AutWeightReport(
        torus_rank=ideal.n,
        roots=roots,
        lie_dim=decomp.total_dim,
        algebra_dim=len(cos),
        faithful=weights_generate_lattice(cos),
    )


def perm_symmetries(ideal: MonomialIdeal) -> tuple[tuple[int, ...], ...]:
    """Variable permutations mapping the ideal onto itself.

    Brute force over all n! permutations; supported for n <= 8.  Returned in
    lexicographic order of one-line notation; always contains the identity.
    """
    if ideal.n > 8:
        raise UnsupportedDimension("permutation search is limited to n <= 8")
    gens = frozenset(ideal.generators)
    found = []
    for sigma in permutations(range(ideal.n)):
        if frozenset(permute_vec(sigma, g) for g in gens) == gens:
            found.append(sigma)
    return tuple(found)
