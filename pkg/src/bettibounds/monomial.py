"""Exact Betti diagrams of monomial quotients via the Taylor complex.

Index the free module in homological degree i by the i-element subsets of the
minimal generators, placed in the multidegree of their lcm.  Tensoring the
(generally nonminimal) Taylor resolution with the residue field leaves only
the +-1 incidences where dropping a generator preserves the lcm, and the
Betti number at (i, multidegree m) is the homology rank of the m-strand at
position i, computed by exact rational elimination.  Characteristic zero
throughout.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Tuple

from .diagram import BettiDiagram
from .errors import FormatError, TooManyGeneratorsError, UnknownFamilyError
from .poly import Poly

MAX_GENERATORS = 20


@dataclass(frozen=True)
class MonomialIdeal:
    """Minimal generating set of a monomial ideal, as exponent vectors."""

    nvars: int
    generators: Tuple[Tuple[int, ...], ...]

    def to_json_dict(self) -> dict:
        return {"nvars": self.nvars, "generators": [list(g) for g in self.generators]}

    def to_json(self, indent=None) -> str:
        return json.dumps(self.to_json_dict(), indent=indent)

    @classmethod
    def from_json_dict(cls, payload) -> "MonomialIdeal":
        if not isinstance(payload, dict) or not {"nvars", "generators"} <= set(payload):
            raise FormatError('ideal JSON must be an object with "nvars" and "generators"')
        nvars = payload["nvars"]
        if not isinstance(nvars, int) or nvars < 1:
            raise FormatError(f"nvars must be a positive integer, got {nvars!r}")
        gens = payload["generators"]
        if not isinstance(gens, list) or not gens:
            raise FormatError("generators must be a nonempty list")
        vectors = []
        for g in gens:
            if (
                not isinstance(g, list)
                or len(g) != nvars
                or any(not isinstance(x, int) or x < 0 for x in g)
            ):
                raise FormatError(f"generator must be a length-{nvars} list of ints >= 0: {g!r}")
            vectors.append(tuple(g))
        return minimalize(nvars, vectors)

    @classmethod
    def from_json(cls, text: str) -> "MonomialIdeal":
        try:
            payload = json.loads(text)
        except json.JSONDecodeError as exc:
            raise FormatError(f"invalid JSON: {exc}") from exc
        return cls.from_json_dict(payload)


def _divides(a: Sequence[int], b: Sequence[int]) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _grlex_key(exponents: Sequence[int]):
    return (sum(exponents), tuple(exponents))


def minimalize(nvars: int, generators: Iterable[Sequence[int]]) -> MonomialIdeal:
    """Drop generators divisible by another; order the rest graded-lex."""
    vectors = {tuple(int(x) for x in g) for g in generators}
    if not vectors:
        raise FormatError("need at least one generator")
    for g in vectors:
        if len(g) != nvars or any(x < 0 for x in g):
            raise FormatError(f"generator must be a length-{nvars} vector of ints >= 0: {g}")
    minimal = [
        g
        for g in vectors
        if not any(other != g and _divides(other, g) for other in vectors)
    ]
    return MonomialIdeal(nvars, tuple(sorted(minimal, key=_grlex_key)))


def _lcm(a: Sequence[int], b: Sequence[int]) -> Tuple[int, ...]:
    return tuple(max(x, y) for x, y in zip(a, b))


def _rational_rank(rows) -> int:
    """Rank of a matrix given as a list of row lists, by exact elimination."""
    matrix = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    ncols = len(matrix[0]) if matrix else 0
    col = 0
    while rank < len(matrix) and col < ncols:
        pivot_row = next((r for r in range(rank, len(matrix)) if matrix[r][col]), None)
        if pivot_row is None:
            col += 1
            continue
        matrix[rank], matrix[pivot_row] = matrix[pivot_row], matrix[rank]
        pivot = matrix[rank][col]
        for r in range(rank + 1, len(matrix)):
            factor = matrix[r][col] / pivot
            if factor:
                matrix[r] = [a - factor * b for a, b in zip(matrix[r], matrix[rank])]
        rank += 1
        col += 1
    return rank


def taylor_betti(ideal: MonomialIdeal) -> BettiDiagram:
    """Betti diagram of the quotient by a monomial ideal (characteristic zero)."""
    gens = ideal.generators
    r = len(gens)
    if r > MAX_GENERATORS:
        raise TooManyGeneratorsError(f"{r} generators exceeds the guard of {MAX_GENERATORS}")
    lcm_of = {0: (0,) * ideal.nvars}
    for mask in range(1, 1 << r):
        low = mask & -mask
        lcm_of[mask] = _lcm(lcm_of[mask ^ low], gens[low.bit_length() - 1])

    strands: dict[tuple, dict[int, list[int]]] = {}
    for mask, multidegree in lcm_of.items():
        strands.setdefault(multidegree, {}).setdefault(bin(mask).count("1"), []).append(mask)

    betti: dict[tuple[int, int], int] = {}
    for multidegree, levels in sorted(strands.items()):
        for masks in levels.values():
            masks.sort()
        index_of = {
            level: {mask: pos for pos, mask in enumerate(masks)}
            for level, masks in levels.items()
        }
        # boundary[i] maps level i to level i - 1 within the strand
        ranks: dict[int, int] = {}
        for level, masks in levels.items():
            below = index_of.get(level - 1)
            if not below:
                continue
            rows = []
            for mask in masks:
                row = [0] * len(below)
                sign = 1
                for bit in range(r):
                    if mask >> bit & 1:
                        sub = mask ^ (1 << bit)
                        if lcm_of[sub] == multidegree:
                            row[below[sub]] = sign
                        sign = -sign
                rows.append(row)
            # rank of the transpose equals the rank of the map
            ranks[level] = _rational_rank(rows)
        degree = sum(multidegree)
        for level, masks in levels.items():
            homology = len(masks) - ranks.get(level, 0) - ranks.get(level + 1, 0)
            if homology:
                betti[level, degree] = betti.get((level, degree), 0) + homology
    return BettiDiagram(betti)


def subset_numerator(ideal: MonomialIdeal) -> Poly:
    """Inclusion-exclusion Hilbert numerator: sum of (-1)^|S| t^(deg lcm S).

    Independent of the homology computation; must agree with the alternating
    sum over the Taylor Betti diagram.
    """
    gens = ideal.generators
    r = len(gens)
    if r > MAX_GENERATORS:
        raise TooManyGeneratorsError(f"{r} generators exceeds the guard of {MAX_GENERATORS}")
    terms: dict[int, int] = {}
    lcm_of = {0: (0,) * ideal.nvars}
    for mask in range(1 << r):
        if mask:
            low = mask & -mask
            lcm_of[mask] = _lcm(lcm_of[mask ^ low], gens[low.bit_length() - 1])
        degree = sum(lcm_of[mask])
        sign = -1 if bin(mask).count("1") % 2 else 1
        terms[degree] = terms.get(degree, 0) + sign
    return Poly(terms)


# -- named parametric families ---------------------------------------------------

_FAMILY_RE = re.compile(r"\s*([a-z-]+)\s*\(([^)]*)\)\s*\Z")
_MONOMIAL_TERM_RE = re.compile(r"x(\d+)(?:\^(\d+))?\Z")


def _parse_monomial(text: str, nvars: int) -> Tuple[int, ...]:
    """Parse "x0^2*x1" into an exponent vector."""
    exponents = [0] * nvars
    for factor in text.split("*"):
        match = _MONOMIAL_TERM_RE.fullmatch(factor.strip())
        if not match:
            raise UnknownFamilyError(f"cannot parse monomial factor {factor!r}")
        index = int(match.group(1))
        if index >= nvars:
            raise UnknownFamilyError(f"variable x{index} outside x0..x{nvars - 1}")
        exponents[index] += int(match.group(2) or 1)
    return tuple(exponents)


def _degree_monomials(nvars: int, degree: int):
    """All exponent vectors of the given total degree, lexicographic."""
    if nvars == 1:
        yield (degree,)
        return
    for first in range(degree, -1, -1):
        for rest in _degree_monomials(nvars - 1, degree - first):
            yield (first,) + rest


def corpus(name: str) -> MonomialIdeal:
    """Named parametric families of monomial ideals.

    * power-of-maximal(n, d): all degree-d monomials in n variables.
    * vplusm(n, d, m1, m2, ...): the listed degree-d monomials together with
      every monomial of degree d + 1, minimalized.
    * square-free-example(k): all products of two distinct variables among k.
    """
    match = _FAMILY_RE.fullmatch(name)
    if not match:
        raise UnknownFamilyError(f"cannot parse family {name!r}")
    family, arg_text = match.group(1), match.group(2)
    args = [a.strip() for a in arg_text.split(",")] if arg_text.strip() else []

    def int_arg(position, minimum):
        try:
            value = int(args[position])
        except (IndexError, ValueError):
            raise UnknownFamilyError(f"{family} needs an integer argument {position}") from None
        if value < minimum:
            raise UnknownFamilyError(f"{family} argument {position} must be >= {minimum}")
        return value

    if family == "power-of-maximal":
        n, d = int_arg(0, 1), int_arg(1, 1)
        return minimalize(n, _degree_monomials(n, d))
    if family == "vplusm":
        n, d = int_arg(0, 1), int_arg(1, 1)
        if len(args) < 3:
            raise UnknownFamilyError("vplusm needs at least one monomial argument")
        span = [_parse_monomial(text, n) for text in args[2:]]
        for vector in span:
            if sum(vector) != d:
                raise UnknownFamilyError(f"vplusm monomial {vector} is not of degree {d}")
        return minimalize(n, span + list(_degree_monomials(n, d + 1)))
    if family == "square-free-example":
        k = int_arg(0, 2)
        gens = []
        for a in range(k):
            for b in range(a + 1, k):
                vector = [0] * k
                vector[a] = vector[b] = 1
                gens.append(tuple(vector))
        return minimalize(k, gens)
    raise UnknownFamilyError(f"unknown family {family!r}")
