"""Exact lattice arithmetic for monomial ideals and their staircases.

Everything here is plain integer combinatorics on exponent vectors, which
are ordinary tuples of ints.  A monomial ideal is stored by its minimal
generating exponents; the finite-dimensional quotients it cuts out are
described by their co-support (the staircase of standard monomials).
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from math import gcd
from operator import add, sub
from typing import Iterable, Iterator

from .errors import (
    DimensionMismatch,
    InfiniteAlgebra,
    NotDownwardClosed,
    NotFull,
    ZeroGenerator,
)

Vec = tuple[int, ...]


def vadd(a: Vec, b: Vec) -> Vec:
    return tuple(map(add, a, b))


def vsub(a: Vec, b: Vec) -> Vec:
    return tuple(map(sub, a, b))


def leq(a: Vec, b: Vec) -> bool:
    """Componentwise <=, i.e. x^a divides x^b."""
    return all(x <= y for x, y in zip(a, b))


def in_orthant(v: Vec) -> bool:
    return all(x >= 0 for x in v)


def unit_vec(n: int, i: int) -> Vec:
    return tuple(1 if j == i else 0 for j in range(n))


def grlex_key(v: Vec) -> tuple[int, Vec]:
    """Sort key for graded lexicographic order (total degree, then lex)."""
    return (sum(v), v)


def permute_vec(sigma: tuple[int, ...], v: Vec) -> Vec:
    """Push v forward along the coordinate permutation i -> sigma[i]."""
    out = [0] * len(v)
    for i, x in enumerate(v):
        out[sigma[i]] = x
    return tuple(out)


def _check_dim(v: Vec, n: int, what: str = "vector") -> None:
    if len(v) != n:
        raise DimensionMismatch(f"{what} {v!r} has length {len(v)}, expected {n}")


class MonomialIdeal:
    """A monomial ideal, stored by its minimal generating exponents.

    Construction minimalizes: duplicate and divisible generators are
    dropped and the survivors are kept sorted lexicographically, so two
    descriptions of the same ideal compare equal.
    """

    __slots__ = ("n", "generators")

    def __init__(self, n: int, generators: Iterable[Iterable[int]]):
        if n < 1:
            raise ValueError("ambient dimension must be at least 1")
        gens: list[Vec] = []
        for raw in generators:
            g = tuple(int(e) for e in raw)
            _check_dim(g, n, "generator")
            if any(e < 0 for e in g):
                raise ValueError(f"generator {g!r} has a negative exponent")
            if not any(g):
                raise ZeroGenerator("the zero exponent vector generates the unit ideal")
            gens.append(g)
        distinct = sorted(set(gens))
        minimal = tuple(
            g for g in distinct if not any(h != g and leq(h, g) for h in distinct)
        )
        self.n = n
        self.generators = minimal

    def contains(self, m: Iterable[int]) -> bool:
        """Whether x^m lies in the ideal, i.e. some generator divides m."""
        m = tuple(m)
        _check_dim(m, self.n, "exponent")
        return any(leq(g, m) for g in self.generators)

    def is_full(self) -> bool:
        """True when no variable x_i itself lies in the ideal."""
        return not any(self.contains(unit_vec(self.n, i)) for i in range(self.n))

    def is_finite(self) -> bool:
        """True when the quotient algebra is finite dimensional.

        Equivalent to every axis carrying a pure-power generator.
        """
        return all(self.pure_power(i) is not None for i in range(self.n))

    def pure_power(self, i: int) -> int | None:
        """Exponent of the pure-power generator on axis i, if any.

        After minimalization there is at most one such generator per axis.
        """
        for g in self.generators:
            if g[i] > 0 and not any(g[j] for j in range(self.n) if j != i):
                return g[i]
        return None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.n == other.n and self.generators == other.generators

    def __hash__(self) -> int:
        return hash((self.n, self.generators))

    def __repr__(self) -> str:
        return f"MonomialIdeal({self.n}, {list(self.generators)})"


class CoSupport:
    """A finite set of lattice points in the nonnegative orthant.

    Staircases of full finite ideals are downward closed and contain the
    origin; the constructor deliberately does not enforce that, so synthetic
    point sets can be fed to :func:`weights_generate_lattice`.  Closure is
    checked where it matters, in :func:`ideal_from_cosupport`.
    """

    __slots__ = ("n", "points", "box", "_sorted")

    def __init__(self, n: int, points: Iterable[Iterable[int]]):
        if n < 1:
            raise ValueError("ambient dimension must be at least 1")
        pts = set()
        for raw in points:
            p = tuple(int(e) for e in raw)
            _check_dim(p, n, "point")
            if any(e < 0 for e in p):
                raise ValueError(f"point {p!r} lies outside the nonnegative orthant")
            pts.add(p)
        self.n = n
        self.points = frozenset(pts)
        self._sorted: tuple[Vec, ...] | None = None
        # bounding corner; the -1 sentinel keeps grids empty for the empty set
        if pts:
            self.box = tuple(max(p[i] for p in pts) for i in range(n))
        else:
            self.box = tuple(-1 for _ in range(n))

    def __contains__(self, v: object) -> bool:
        return v in self.points

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[Vec]:
        return iter(self.sorted_points())

    def sorted_points(self) -> tuple[Vec, ...]:
        """The points in graded lexicographic order (the basis order)."""
        if self._sorted is None:
            self._sorted = tuple(sorted(self.points, key=grlex_key))
        return self._sorted

    def is_downward_closed(self) -> bool:
        for p in self.points:
            for i in range(self.n):
                if p[i] > 0 and vsub(p, unit_vec(self.n, i)) not in self.points:
                    return False
        return True

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CoSupport):
            return NotImplemented
        return self.n == other.n and self.points == other.points

    def __hash__(self) -> int:
        return hash((self.n, self.points))

    def __repr__(self) -> str:
        return f"CoSupport({self.n}, {len(self.points)} points)"


@lru_cache(maxsize=4096)
def cosupport(ideal: MonomialIdeal) -> CoSupport:
    """Standard monomials of the quotient, as a staircase of lattice points.

    Requires the ideal to be finite (else InfiniteAlgebra) and full (else
    NotFull).  The result is downward closed, contains the origin and every
    unit vector, and is exactly the monomial basis of the quotient algebra.
    """
    if not ideal.is_finite():
        raise InfiniteAlgebra(
            f"{ideal!r} has no pure power on some axis; the quotient is infinite dimensional"
        )
    if not ideal.is_full():
        raise NotFull(f"{ideal!r} contains a variable")
    bounds = [ideal.pure_power(i) - 1 for i in range(ideal.n)]
    pts = [
        m for m in product(*(range(b + 1) for b in bounds)) if not ideal.contains(m)
    ]
    return CoSupport(ideal.n, pts)


def ideal_from_cosupport(cos: CoSupport) -> MonomialIdeal:
    """The unique monomial ideal whose staircase is the given set.

    The generators are the inner corners: points outside the set all of
    whose backward unit steps stay inside.  Raises NotDownwardClosed when
    the set is not a staircase (or misses the origin, which would encode
    the unit ideal).
    """
    n = cos.n
    if not cos.is_downward_closed():
        raise NotDownwardClosed(f"{cos!r} is not downward closed")
    if (0,) * n not in cos.points:
        raise NotDownwardClosed(f"{cos!r} does not contain the origin")
    corners = []
    for b in product(*(range(hi + 2) for hi in cos.box)):
        if b in cos.points:
            continue
        if all(
            b[i] == 0 or vsub(b, unit_vec(n, i)) in cos.points for i in range(n)
        ):
            corners.append(b)
    return MonomialIdeal(n, corners)


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended gcd: returns (g, s, t) with s*a + t*b = g >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def weights_generate_lattice(cos: CoSupport) -> bool:
    """Whether the integer span of the points is the whole lattice Z^n.

    Used to decide faithfulness of the torus action on the quotient: the
    characters that occur must generate the full character lattice.
    """
    n = cos.n
    pivots: dict[int, list[int]] = {}
    for p in cos.points:
        v = list(p)
        for c in range(n):
            if v[c] == 0:
                continue
            row = pivots.get(c)
            if row is None:
                pivots[c] = v
                break
            g, s, t = _xgcd(row[c], v[c])
            u, w = row[c] // g, v[c] // g
            combined = [s * row[j] + t * v[j] for j in range(n)]
            v = [u * v[j] - w * row[j] for j in range(n)]
            pivots[c] = combined
    if len(pivots) < n:
        return False
    det = 1
    for c, row in pivots.items():
        det *= abs(row[c])
    return det == 1
