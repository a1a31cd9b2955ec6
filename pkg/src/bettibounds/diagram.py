"""Sparse Betti diagrams over exact rationals, plus degree-sequence utilities.

A Betti diagram is a finite table of nonzero rational values keyed by
(homological index i, internal degree j); absent entries are zero.  Diagrams
are immutable: every operation returns a new instance, and construction
prunes zero entries so that equality is plain structural equality of the
underlying tables.  No floating point is used anywhere.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Tuple, Union

from .errors import (
    EmptyDiagramError,
    FormatError,
    GapColumnError,
    InvalidSequenceError,
    LengthMismatchError,
    NegativeGapError,
    ZeroNumeratorError,
)
from .poly import Poly

Rational = Fraction

DegreeSequence = Tuple[int, ...]
GapVector = Tuple[Fraction, ...]

_RATIONAL_RE = re.compile(r"[+-]?\d+(?:/\d+)?\Z")


def parse_rational(text: str) -> Fraction:
    """Parse a decimal-free rational literal "p" or "p/q" with q > 0."""
    if not isinstance(text, str):
        raise FormatError(f"rational literal must be a string, got {type(text).__name__}")
    stripped = text.strip()
    if not _RATIONAL_RE.fullmatch(stripped):
        raise FormatError(f"not a rational literal: {text!r}")
    try:
        return Fraction(stripped)
    except ZeroDivisionError:
        raise FormatError(f"zero denominator: {text!r}") from None


def format_rational(value) -> str:
    """Render a rational as "p" or "p/q" in lowest terms with q > 0."""
    return str(Fraction(value))


class BettiDiagram:
    """Immutable sparse table (i, j) -> nonzero Fraction."""

    __slots__ = ("_entries",)

    def __init__(self, entries: Union[Mapping, Iterable, None] = None):
        table: dict[tuple[int, int], Fraction] = {}
        if entries is not None:
            items = entries.items() if isinstance(entries, Mapping) else entries
            for key, raw in items:
                i, j = key
                if not isinstance(i, int) or not isinstance(j, int):
                    raise FormatError(f"diagram key must be a pair of integers, got {key!r}")
                if i < 0:
                    raise FormatError(f"homological index must be >= 0, got {i}")
                value = table.get((i, j), Fraction(0)) + Fraction(raw)
                if value:
                    table[i, j] = value
                else:
                    table.pop((i, j), None)
        self._entries = table

    # -- container protocol -------------------------------------------------

    def items(self) -> tuple:
        """Entries as ((i, j), value) pairs sorted by (i, j)."""
        return tuple(sorted(self._entries.items()))

    def __getitem__(self, key) -> Fraction:
        return self._entries.get(tuple(key), Fraction(0))

    def __contains__(self, key) -> bool:
        return tuple(key) in self._entries

    def __len__(self) -> int:
        return len(self._entries)

    def __bool__(self) -> bool:
        return bool(self._entries)

    def __eq__(self, other):
        if not isinstance(other, BettiDiagram):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self):
        return hash(frozenset(self._entries.items()))

    def __repr__(self):
        return f"BettiDiagram({dict(self.items())!r})"

    # -- linear structure ----------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, BettiDiagram):
            return NotImplemented
        merged = dict(self._entries)
        for key, value in other._entries.items():
            total = merged.get(key, Fraction(0)) + value
            if total:
                merged[key] = total
            else:
                del merged[key]
        return self._wrap(merged)

    def __sub__(self, other):
        if not isinstance(other, BettiDiagram):
            return NotImplemented
        return self + (-1) * other

    def __mul__(self, scalar):
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        factor = Fraction(scalar)
        if not factor:
            return BettiDiagram()
        return self._wrap({k: factor * v for k, v in self._entries.items()})

    __rmul__ = __mul__

    def translate(self, shift: int) -> "BettiDiagram":
        """Shift every internal degree j by `shift`."""
        return self._wrap({(i, j + shift): v for (i, j), v in self._entries.items()})

    # -- derived statistics --------------------------------------------------

    def projective_dimension(self) -> int:
        if not self._entries:
            raise EmptyDiagramError("empty diagram has no projective dimension")
        return max(i for i, _ in self._entries)

    def total(self, i: int) -> Fraction:
        """Column total: sum of all entries with homological index i."""
        return sum((v for (ii, _), v in self._entries.items() if ii == i), Fraction(0))

    def totals(self) -> tuple:
        """All column totals (index 0 through the projective dimension)."""
        return tuple(self.total(i) for i in range(self.projective_dimension() + 1))

    def min_degrees(self) -> DegreeSequence:
        return self._column_extremes(min)

    def max_degrees(self) -> DegreeSequence:
        return self._column_extremes(max)

    def _column_extremes(self, pick) -> DegreeSequence:
        if not self._entries:
            raise EmptyDiagramError("empty diagram")
        columns: dict[int, list[int]] = {}
        for i, j in self._entries:
            columns.setdefault(i, []).append(j)
        pdim = max(columns)
        out = []
        for i in range(pdim + 1):
            if i not in columns:
                raise GapColumnError(f"column {i} is zero but column {pdim} is not")
            out.append(pick(columns[i]))
        return tuple(out)

    def regularity(self) -> int:
        if not self._entries:
            raise EmptyDiagramError("empty diagram has no regularity")
        return max(j - i for i, j in self._entries)

    def hilbert_numerator(self) -> Poly:
        """Alternating sum over the table: sum of (-1)^i * value * t^j."""
        return Poly(((j, -value if i % 2 else value) for (i, j), value in self._entries.items()))

    def codimension(self) -> int:
        """Order of vanishing of the Hilbert numerator at t = 1."""
        numerator = self.hilbert_numerator()
        if not numerator:
            raise ZeroNumeratorError("Hilbert numerator is identically zero")
        return numerator.vanishing_order_at_one()

    # -- wire format -----------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "entries": [
                {"i": i, "j": j, "value": format_rational(v)} for (i, j), v in self.items()
            ]
        }

    def to_json(self, indent=None) -> str:
        return json.dumps(self.to_json_dict(), indent=indent)

    @classmethod
    def from_json_dict(cls, payload) -> "BettiDiagram":
        if not isinstance(payload, dict) or "entries" not in payload:
            raise FormatError('diagram JSON must be an object with an "entries" list')
        entries = payload["entries"]
        if not isinstance(entries, list):
            raise FormatError('"entries" must be a list')
        seen = set()
        pairs = []
        for row in entries:
            if not isinstance(row, dict) or not {"i", "j", "value"} <= set(row):
                raise FormatError(f"diagram entry must have i, j, value: {row!r}")
            i, j = row["i"], row["j"]
            if not isinstance(i, int) or not isinstance(j, int):
                raise FormatError(f"entry indices must be integers: {row!r}")
            if (i, j) in seen:
                raise FormatError(f"duplicate entry at ({i}, {j})")
            seen.add((i, j))
            pairs.append(((i, j), parse_rational(row["value"])))
        return cls(pairs)

    @classmethod
    def from_json(cls, text: str) -> "BettiDiagram":
        try:
            payload = json.loads(text)
        except json.JSONDecodeError as exc:
            raise FormatError(f"invalid JSON: {exc}") from exc
        return cls.from_json_dict(payload)

    def table(self) -> str:
        """Human-readable table: rows indexed by j - i, columns by i, "." for zero."""
        if not self._entries:
            return "(empty Betti diagram)"
        pdim = self.projective_dimension()
        rows = sorted({j - i for i, j in self._entries})
        row_range = range(rows[0], rows[-1] + 1)
        cells = {}
        for r in row_range:
            for i in range(pdim + 1):
                value = self._entries.get((i, r + i))
                cells[r, i] = format_rational(value) if value is not None else "."
        totals = [format_rational(self.total(i)) for i in range(pdim + 1)]
        widths = [
            max(len(str(i)), len(totals[i]), *(len(cells[r, i]) for r in row_range))
            for i in range(pdim + 1)
        ]
        label_width = max(len("total:"), *(len(f"{r}:") for r in row_range))
        lines = []

        def emit(label, values):
            body = "  ".join(value.rjust(widths[i]) for i, value in enumerate(values))
            lines.append(f"{label.rjust(label_width)}  {body}")

        emit("", [str(i) for i in range(pdim + 1)])
        emit("total:", totals)
        for r in row_range:
            emit(f"{r}:", [cells[r, i] for i in range(pdim + 1)])
        return "\n".join(lines)

    @staticmethod
    def _wrap(entries: dict) -> "BettiDiagram":
        diagram = BettiDiagram.__new__(BettiDiagram)
        diagram._entries = entries
        return diagram


# -- degree sequences and gap vectors ------------------------------------------


def check_degree_sequence(degrees: Sequence[int]) -> DegreeSequence:
    """Validate and normalize a strictly increasing integer tuple."""
    if len(degrees) == 0:
        raise InvalidSequenceError("degree sequence must be nonempty")
    out = []
    for d in degrees:
        if isinstance(d, Fraction):
            if d.denominator != 1:
                raise InvalidSequenceError(f"degrees must be integers, got {d}")
            d = int(d)
        if not isinstance(d, int):
            raise InvalidSequenceError(f"degrees must be integers, got {d!r}")
        out.append(d)
    for prev, nxt in zip(out, out[1:]):
        if nxt <= prev:
            raise InvalidSequenceError(f"not strictly increasing: {tuple(out)}")
    return tuple(out)


def truncate(degrees: Sequence[int], s: int) -> DegreeSequence:
    """First s + 1 degrees (d_0, ..., d_s)."""
    degrees = check_degree_sequence(degrees)
    if not 0 <= s <= len(degrees) - 1:
        raise IndexError(f"truncation index {s} out of range for length {len(degrees)}")
    return degrees[: s + 1]


def seq_leq(lower: Sequence[int], upper: Sequence[int]) -> bool:
    """Termwise comparison of equal-length degree sequences."""
    if len(lower) != len(upper):
        raise LengthMismatchError(f"lengths {len(lower)} and {len(upper)} differ")
    return all(a <= b for a, b in zip(lower, upper))


def gaps(degrees: Sequence[int]) -> GapVector:
    """Gap coordinates e_i = d_i - d_{i-1} - 1 of a degree sequence."""
    degrees = check_degree_sequence(degrees)
    return tuple(Fraction(b - a - 1) for a, b in zip(degrees, degrees[1:]))


def from_gaps(gap_vector: Sequence, d0: int = 0) -> DegreeSequence:
    """Degree sequence with base degree d0 realizing the given gaps.

    Inverse of :func:`gaps` up to the base degree: d_j = d0 + j + e_1 + ... + e_j.
    """
    out = [d0]
    for e in gap_vector:
        e = Fraction(e)
        if e < 0 or e.denominator != 1:
            raise NegativeGapError(f"gap coordinates must be nonnegative integers, got {e}")
        out.append(out[-1] + 1 + int(e))
    return tuple(out)
