"""Binomial rank bounds of Buchsbaum-Eisenbud-Horrocks type on Betti diagrams.

The conjectural floor for a codimension-c module is a column total of at
least C(c, j) in every column j.  The sufficient condition checked here is a
shape condition on the diagram: generators in degrees <= 0 and regularity at
most 2*(minimal first-syzygy degree) - 2.  `scan` hunts through pure diagrams
for sequences that satisfy, or provably violate, the bound.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Optional, Sequence, Tuple

from .diagram import BettiDiagram, format_rational
from .errors import BoundsError, EmptyDiagramError, NoFirstSyzygyError
from .pure import herzog_kuhl, pure_shape_check

SCAN_MODES = ("shape-verify", "find-violations", "integral-violations")


def shape_hypothesis(diagram: BettiDiagram) -> bool:
    """True when generators sit in degrees <= 0 and reg <= 2*min_deg_1 - 2."""
    if not diagram:
        raise EmptyDiagramError("empty diagram")
    if diagram.projective_dimension() < 1:
        raise NoFirstSyzygyError("column 1 is empty; the hypothesis is vacuous")
    max_deg = diagram.max_degrees()
    min_deg = diagram.min_degrees()
    return max_deg[0] <= 0 and diagram.regularity() <= 2 * min_deg[1] - 2


@dataclass(frozen=True)
class ColumnCheck:
    j: int
    actual: Fraction
    required: Fraction

    @property
    def passed(self) -> bool:
        return self.actual >= self.required

    def to_json_dict(self) -> dict:
        return {
            "j": self.j,
            "actual": format_rational(self.actual),
            "required": format_rational(self.required),
            "pass": self.passed,
        }


@dataclass(frozen=True)
class BehReport:
    codim: int
    beta0: Fraction
    per_j: Tuple[ColumnCheck, ...]
    hypothesis_met: bool
    notes: Tuple[str, ...] = ()

    @property
    def overall(self) -> bool:
        return all(check.passed for check in self.per_j)

    def failures(self) -> Tuple[ColumnCheck, ...]:
        return tuple(check for check in self.per_j if not check.passed)

    def to_json_dict(self) -> dict:
        return {
            "codim": self.codim,
            "beta0": format_rational(self.beta0),
            "per_j": [check.to_json_dict() for check in self.per_j],
            "hypothesis_met": self.hypothesis_met,
            "overall": self.overall,
            "notes": list(self.notes),
        }

    def to_json(self, indent=None) -> str:
        return json.dumps(self.to_json_dict(), indent=indent)


def beh_check(diagram: BettiDiagram, codim: Optional[int] = None) -> BehReport:
    """Compare column totals against beta_0 * C(codim, j) for j = 0..codim.

    The comparison itself is translation-invariant; for the shape hypothesis a
    diagram generated in positive degrees is first shifted so its top
    generator sits in degree 0 (noted in the report).
    """
    if not diagram:
        raise EmptyDiagramError("empty diagram")
    c = diagram.codimension() if codim is None else codim
    if c < 0:
        raise ValueError(f"codimension must be >= 0, got {c}")
    beta0 = diagram.total(0)
    per_j = tuple(
        ColumnCheck(j, diagram.total(j), beta0 * math.comb(c, j)) for j in range(c + 1)
    )
    notes = []
    work = diagram
    top_generator = diagram.max_degrees()[0]
    if top_generator > 0:
        work = diagram.translate(-top_generator)
        notes.append(f"translated degrees by {-top_generator} to place generators in degrees <= 0")
    try:
        hypothesis = shape_hypothesis(work)
    except NoFirstSyzygyError:
        hypothesis = False
        notes.append("column 1 is empty (free module); shape hypothesis vacuous")
    return BehReport(c, beta0, per_j, hypothesis, tuple(notes))


def pure_beh_check(degrees: Sequence[int]) -> BehReport:
    """BEH report for the normalized pure diagram of a degree sequence."""
    pure = herzog_kuhl(degrees)
    return beh_check(pure.diagram, codim=len(pure.degrees) - 1)


# -- degree-sequence scanning -------------------------------------------------


@dataclass(frozen=True)
class ScanRow:
    degrees: Tuple[int, ...]
    s: int
    shape: bool
    beh_pass: bool
    first_violating_j: int
    betti_totals: Tuple[Fraction, ...]

    def to_csv(self) -> str:
        return ";".join(
            [
                ",".join(str(d) for d in self.degrees),
                str(self.s),
                "true" if self.shape else "false",
                "true" if self.beh_pass else "false",
                str(self.first_violating_j),
                ",".join(format_rational(v) for v in self.betti_totals),
            ]
        )


CSV_HEADER = "degrees;s;shape;beh_pass;first_violating_j;betti_totals"


@dataclass(frozen=True)
class ScanReport:
    mode: str
    s_values: Tuple[int, ...]
    d_max: int
    sequences_checked: int
    rows: Tuple[ScanRow, ...]

    @property
    def findings(self) -> int:
        return len(self.rows)

    def to_csv(self) -> str:
        return "\n".join([CSV_HEADER] + [row.to_csv() for row in self.rows])

    def summary(self) -> str:
        return (
            f"scan mode={self.mode} s={min(self.s_values)}..{max(self.s_values)} "
            f"d_max={self.d_max}: {self.sequences_checked} sequences, "
            f"{self.findings} findings"
        )


def _first_violation(totals: Sequence[Fraction], s: int) -> Optional[int]:
    for j in range(s + 1):
        if totals[j] < math.comb(s, j):
            return j
    return None


def scan(s_range: Iterable[int], d_max: int, mode: str) -> ScanReport:
    """Enumerate degree sequences with d_0 = 0 and run the selected check.

    * shape-verify: report any shape-satisfying sequence whose raw totals drop
      below C(s, j) (none should exist).
    * find-violations: report sequences whose smallest integral multiple of
      the pure diagram violates the binomial floor; these rays carry no
      diagram of any module satisfying the bound.
    * integral-violations: the find-violations test restricted to sequences
      whose pure diagram is integral outright or after doubling.
    """
    s_values = tuple(sorted(set(s_range)))
    if not s_values:
        raise BoundsError("empty s range")
    if s_values[0] < 1 or s_values[-1] > 8:
        raise BoundsError(f"s range must lie in [1, 8], got {s_values}")
    if not 1 <= d_max <= 20:
        raise BoundsError(f"d_max must lie in [1, 20], got {d_max}")
    if mode not in SCAN_MODES:
        raise BoundsError(f"unknown mode {mode!r}; choose from {SCAN_MODES}")

    rows = []
    checked = 0
    for s in s_values:
        for upper in combinations(range(1, d_max + 1), s):
            degrees = (0,) + upper
            checked += 1
            totals = herzog_kuhl(degrees).totals()
            raw_violation = _first_violation(totals, s)
            if mode == "shape-verify":
                if pure_shape_check(degrees) and raw_violation is not None:
                    rows.append(
                        ScanRow(degrees, s, True, False, raw_violation, totals)
                    )
                continue
            multiple = math.lcm(*(v.denominator for v in totals))
            scaled = [multiple * v for v in totals]
            scaled_violation = _first_violation(scaled, s)
            if scaled_violation is None:
                continue
            if mode == "integral-violations" and multiple > 2:
                continue
            rows.append(
                ScanRow(
                    degrees,
                    s,
                    pure_shape_check(degrees),
                    raw_violation is None,
                    scaled_violation,
                    totals,
                )
            )
    return ScanReport(mode, s_values, d_max, checked, tuple(rows))
