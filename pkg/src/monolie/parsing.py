"""Parsing and rendering of monomial ideals in generator syntax.

Accepted input looks like ``"y^3, x*y, x^3"`` or ``"x1^2, x2^2"``: generators
separated by commas, each a ``*``-separated product of powers.  Variables are
either plain letters from x, y, z, w (at most four) or indexed names x1, x2,
...; the two styles cannot be mixed.  Coordinates follow the canonical
variable order (x < y < z < w, or increasing index), an omitted exponent
means 1, and whitespace is insignificant.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import DimensionMismatch, IdealSyntaxError, InfiniteAlgebra, NotFull, ZeroGenerator
from .ideals import MonomialIdeal

_LETTERS = ("x", "y", "z", "w")
_INDEXED_RE = re.compile(r"^x([1-9][0-9]*)$")
_TOKEN_RE = re.compile(r"[A-Za-z][A-Za-z0-9]*|[0-9]+|[\^*,]")


@dataclass(frozen=True)
class IdealSource:
    """A parsed ideal together with the variable names it was written in."""

    raw: str
    variables: tuple[str, ...]
    ideal: MonomialIdeal

    @property
    def n(self) -> int:
        return self.ideal.n


def _tokens(text: str) -> list[tuple[str, int]]:
    out = []
    i = 0
    while i < len(text):
        if text[i].isspace():
            i += 1
            continue
        m = _TOKEN_RE.match(text, i)
        if m is None:
            raise IdealSyntaxError(f"unexpected character {text[i]!r}", i)
        out.append((m.group(), i))
        i = m.end()
    return out


def _parse_factors(text: str) -> list[list[tuple[str | None, int, int]]]:
    """Split into generators, each a list of (name, exponent, position).

    A bare integer constant is recorded as name None (only its nonzeroness
    matters for a monomial ideal).
    """
    toks = _tokens(text)
    if not toks:
        raise IdealSyntaxError("empty ideal", 0)
    gens: list[list[tuple[str | None, int, int]]] = []
    cur: list[tuple[str | None, int, int]] = []
    expect_factor = True
    i = 0
    while i < len(toks):
        tok, pos = toks[i]
        if expect_factor:
            if tok[0].isalpha():
                i += 1
                exp = 1
                if i < len(toks) and toks[i][0] == "^":
                    caret_pos = toks[i][1]
                    i += 1
                    if i >= len(toks) or not toks[i][0].isdigit():
                        raise IdealSyntaxError("expected an integer exponent after '^'", caret_pos + 1)
                    exp = int(toks[i][0])
                    i += 1
                cur.append((tok, exp, pos))
            elif tok.isdigit():
                if int(tok) == 0:
                    raise IdealSyntaxError("a generator must be a nonzero monomial", pos)
                cur.append((None, 0, pos))
                i += 1
            else:
                raise IdealSyntaxError(f"expected a variable or constant, got {tok!r}", pos)
            expect_factor = False
        else:
            if tok == "*":
                expect_factor = True
                i += 1
            elif tok == ",":
                gens.append(cur)
                cur = []
                expect_factor = True
                i += 1
            else:
                raise IdealSyntaxError(f"expected '*' or ',', got {tok!r}", pos)
    if expect_factor:
        raise IdealSyntaxError("dangling separator", len(text))
    gens.append(cur)
    return gens


def _variable_order(gens: list[list[tuple[str | None, int, int]]]) -> tuple[str, ...]:
    letters: dict[str, int] = {}
    indexed: dict[str, tuple[int, int]] = {}
    for gen in gens:
        for name, _exp, pos in gen:
            if name is None:
                continue
            m = _INDEXED_RE.match(name)
            if m is not None:
                indexed.setdefault(name, (int(m.group(1)), pos))
            elif name in _LETTERS:
                letters.setdefault(name, pos)
            else:
                raise IdealSyntaxError(
                    f"unknown variable {name!r} (use x, y, z, w or x1, x2, ...)", pos
                )
    if letters and indexed:
        pos = max(min(letters.values()), min(p for _, p in indexed.values()))
        raise IdealSyntaxError("cannot mix letter and indexed variable names", pos)
    if letters:
        return tuple(v for v in _LETTERS if v in letters)
    return tuple(sorted(indexed, key=lambda s: indexed[s][0]))


def parse_ideal_source(text: str) -> IdealSource:
    """Parse generator syntax, returning the ideal plus its variable names.

    Raises IdealSyntaxError with the offending position on malformed text,
    ZeroGenerator on a constant generator, and NotFull / InfiniteAlgebra
    when the quotient is degenerate or infinite dimensional.
    """
    gens = _parse_factors(text)
    variables = _variable_order(gens)
    if not variables:
        raise ZeroGenerator("the ideal is generated by constants (unit ideal)")
    axis = {v: i for i, v in enumerate(variables)}
    vectors = []
    for gen in gens:
        exps = [0] * len(variables)
        for name, exp, _pos in gen:
            if name is not None:
                exps[axis[name]] += exp
        vectors.append(tuple(exps))
    ideal = MonomialIdeal(len(variables), vectors)
    if not ideal.is_full():
        raise NotFull(f"{text.strip()!r} contains a variable")
    if not ideal.is_finite():
        raise InfiniteAlgebra(
            f"{text.strip()!r} lacks a pure power in some variable; the quotient is infinite dimensional"
        )
    return IdealSource(raw=text, variables=variables, ideal=ideal)


def parse_ideal(text: str) -> MonomialIdeal:
    """Parse generator syntax into a minimalized full finite ideal."""
    return parse_ideal_source(text).ideal


def default_variables(n: int) -> tuple[str, ...]:
    return _LETTERS[:n] if n <= 4 else tuple(f"x{i + 1}" for i in range(n))


def render_ideal(ideal: MonomialIdeal, variables: tuple[str, ...] | None = None) -> str:
    """Canonical text form; re-parsing it yields the same ideal."""
    names = tuple(variables) if variables is not None else default_variables(ideal.n)
    if len(names) != ideal.n:
        raise DimensionMismatch(f"{len(names)} names for {ideal.n} coordinates")
    parts = []
    for g in ideal.generators:
        factors = [
            name if e == 1 else f"{name}^{e}" for name, e in zip(names, g) if e
        ]
        parts.append("*".join(factors))
    return ", ".join(parts)
