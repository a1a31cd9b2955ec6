"""Greedy decomposition of Betti diagrams into pure diagrams.

Any diagram of a graded module is a positive rational combination of
normalized pure diagrams whose degree sequences form a chain.  The greedy
loop below constructs one: read off the minimal degree of each column,
subtract the largest multiple of that pure diagram that keeps all entries
nonnegative (it zeroes at least one entry), and repeat.  Inputs outside the
reach of this procedure raise NotInConeError.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from .diagram import (
    BettiDiagram,
    check_degree_sequence,
    format_rational,
    parse_rational,
    seq_leq,
    truncate,
)
from .errors import EmptyDiagramError, FormatError, GapColumnError, InvalidSequenceError, NotInConeError
from .pure import herzog_kuhl


@dataclass(frozen=True)
class Decomposition:
    """Ordered (coefficient, degree sequence) terms; coefficients all positive."""

    terms: Tuple[Tuple[Fraction, Tuple[int, ...]], ...]

    def __iter__(self):
        return iter(self.terms)

    def __len__(self):
        return len(self.terms)

    def to_json_dict(self) -> dict:
        return {
            "terms": [
                {"coefficient": format_rational(c), "degrees": list(d)} for c, d in self.terms
            ]
        }

    def to_json(self, indent=None) -> str:
        return json.dumps(self.to_json_dict(), indent=indent)

    @classmethod
    def from_json_dict(cls, payload) -> "Decomposition":
        if not isinstance(payload, dict) or "terms" not in payload:
            raise FormatError('decomposition JSON must be an object with a "terms" list')
        terms = []
        for row in payload["terms"]:
            if not isinstance(row, dict) or not {"coefficient", "degrees"} <= set(row):
                raise FormatError(f"term must have coefficient and degrees: {row!r}")
            coefficient = parse_rational(row["coefficient"])
            if coefficient <= 0:
                raise FormatError(f"coefficient must be positive, got {coefficient}")
            degrees = check_degree_sequence(row["degrees"])
            terms.append((coefficient, degrees))
        return cls(tuple(terms))

    @classmethod
    def from_json(cls, text: str) -> "Decomposition":
        try:
            payload = json.loads(text)
        except json.JSONDecodeError as exc:
            raise FormatError(f"invalid JSON: {exc}") from exc
        return cls.from_json_dict(payload)


def decompose(diagram: BettiDiagram) -> Decomposition:
    """Greedy chain decomposition; exact, and invertible by :func:`recompose`."""
    if not diagram:
        raise EmptyDiagramError("cannot decompose the zero diagram")
    if any(value < 0 for _, value in diagram.items()):
        raise NotInConeError("diagram has a negative entry")
    work = diagram
    terms = []
    max_steps = len(diagram)
    while work:
        if len(terms) == max_steps:
            raise NotInConeError("greedy did not terminate within the entry count")
        try:
            degrees = work.min_degrees()
        except GapColumnError as exc:
            raise NotInConeError(f"interior zero column: {exc}") from exc
        try:
            degrees = check_degree_sequence(degrees)
        except InvalidSequenceError as exc:
            raise NotInConeError(f"minimal degrees not strictly increasing: {degrees}") from exc
        pure = herzog_kuhl(degrees)
        coefficient = min(
            work[(i, d)] / pure.total(i) for i, d in enumerate(degrees)
        )
        if coefficient <= 0:
            raise NotInConeError(f"nonpositive coefficient {coefficient} at {degrees}")
        work = work - coefficient * pure.diagram
        if any(value < 0 for _, value in work.items()):
            raise NotInConeError(f"negative entry after subtracting {degrees}")
        terms.append((coefficient, degrees))
    return Decomposition(tuple(terms))


def recompose(decomposition: Decomposition) -> BettiDiagram:
    """Exact sum of coefficient * pure diagram over all terms."""
    total = BettiDiagram()
    for coefficient, degrees in decomposition:
        total = total + coefficient * herzog_kuhl(degrees).diagram
    return total


@dataclass(frozen=True)
class TermBounds:
    degrees: Tuple[int, ...]
    length_ok: bool
    lower_ok: bool
    upper_ok: bool

    @property
    def passed(self) -> bool:
        return self.length_ok and self.lower_ok and self.upper_ok


@dataclass(frozen=True)
class BoundsReport:
    codim: int
    projective_dimension: int
    min_degrees: Tuple[int, ...]
    max_degrees: Tuple[int, ...]
    recompose_matches: bool
    per_term: Tuple[TermBounds, ...]

    @property
    def passed(self) -> bool:
        return self.recompose_matches and all(t.passed for t in self.per_term)

    def to_json_dict(self) -> dict:
        return {
            "codim": self.codim,
            "projective_dimension": self.projective_dimension,
            "min_degrees": list(self.min_degrees),
            "max_degrees": list(self.max_degrees),
            "recompose_matches": self.recompose_matches,
            "passed": self.passed,
            "per_term": [
                {
                    "degrees": list(t.degrees),
                    "length_ok": t.length_ok,
                    "lower_ok": t.lower_ok,
                    "upper_ok": t.upper_ok,
                }
                for t in self.per_term
            ],
        }


def validate_bounds(decomposition: Decomposition, diagram: BettiDiagram) -> BoundsReport:
    """Check every term against the support bounds of the source diagram.

    A term of length s + 1 must satisfy codim <= s <= projective dimension and
    lie termwise between the truncated minimal and maximal degree sequences.
    """
    codim = diagram.codimension()
    pdim = diagram.projective_dimension()
    dmin = diagram.min_degrees()
    dmax = diagram.max_degrees()
    per_term = []
    for _, degrees in decomposition:
        s = len(degrees) - 1
        length_ok = codim <= s <= pdim
        if s <= pdim:
            lower_ok = seq_leq(truncate(dmin, s), degrees)
            upper_ok = seq_leq(degrees, truncate(dmax, s))
        else:
            lower_ok = upper_ok = False
        per_term.append(TermBounds(degrees, length_ok, lower_ok, upper_ok))
    matches = recompose(decomposition) == diagram
    return BoundsReport(codim, pdim, dmin, dmax, matches, tuple(per_term))
