"""Normalized pure diagrams and the rational functions behind their column totals.

A pure diagram has exactly one nonzero entry per column, at degrees given by a
strictly increasing sequence (d_0, ..., d_s); normalizing the top entry to 1
forces every other entry through the Herzog-Kuhl product

    total_j = prod over i != j of |d_i - d_0| / |d_i - d_j|.

In gap coordinates e_i = d_i - d_{i-1} - 1 the column total becomes a rational
function of e with no poles on the closed nonnegative orthant, which makes
sign questions about its partial derivatives exact finite computations.  The
verify_* functions sample seeded rational points and check those signs, plus
the binomial floor total_j >= C(s, j) on the region where the first gap
dominates the rest.
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from .diagram import BettiDiagram, check_degree_sequence, format_rational
from .errors import DomainError, PoleError

_SAMPLE_DENOMINATORS = (1, 2, 4, 8, 16, 32, 64)


@dataclass(frozen=True)
class PureDiagram:
    """Degree sequence plus its normalized one-entry-per-column diagram."""

    degrees: Tuple[int, ...]
    diagram: BettiDiagram

    def total(self, j: int) -> Fraction:
        return self.diagram[(j, self.degrees[j])] if 0 <= j < len(self.degrees) else Fraction(0)

    def totals(self) -> Tuple[Fraction, ...]:
        return tuple(self.total(j) for j in range(len(self.degrees)))


def herzog_kuhl(degrees: Sequence[int]) -> PureDiagram:
    """Normalized pure diagram of a degree sequence via the Herzog-Kuhl product."""
    degrees = check_degree_sequence(degrees)
    s = len(degrees) - 1
    entries = {(0, degrees[0]): Fraction(1)}
    for j in range(1, s + 1):
        value = Fraction(1)
        for i in range(1, s + 1):
            if i != j:
                value *= Fraction(abs(degrees[i] - degrees[0]), abs(degrees[i] - degrees[j]))
        entries[j, degrees[j]] = value
    return PureDiagram(degrees, BettiDiagram(entries))


def koszul(n: int) -> BettiDiagram:
    """Diagram with entry C(n, i) at (i, i); the gap-zero pure diagram."""
    if n < 0:
        raise DomainError(f"need n >= 0, got {n}")
    return BettiDiagram({(i, i): math.comb(n, i) for i in range(n + 1)})


def pure_shape_check(degrees: Sequence[int]) -> bool:
    """True when d_0 <= 0 and d_s - s <= 2*d_1 - 2.

    Length-one sequences have no syzygy degree to constrain, so only d_0 <= 0
    is required of them.
    """
    degrees = check_degree_sequence(degrees)
    s = len(degrees) - 1
    if degrees[0] > 0:
        return False
    if s == 0:
        return True
    return degrees[s] - s <= 2 * degrees[1] - 2


# -- linear forms in gap coordinates ---------------------------------------------
#
# With d = (0, 1 + e_1, 2 + e_1 + e_2, ...) the three degree differences below
# are exactly the factors of the Herzog-Kuhl product for column j.


def _as_gap_vector(e: Sequence) -> Tuple[Fraction, ...]:
    return tuple(Fraction(x) for x in e)


def dist_to_base(i: int, e: Sequence) -> Fraction:
    """d_i - d_0 = i + e_1 + ... + e_i, for 1 <= i <= s."""
    e = _as_gap_vector(e)
    if not 1 <= i <= len(e):
        raise IndexError(f"index {i} outside 1..{len(e)}")
    return i + sum(e[:i], Fraction(0))


def dist_from_below(i: int, j: int, e: Sequence) -> Fraction:
    """d_j - d_{i-1} = (j - i + 1) + e_i + ... + e_j, for 1 <= i <= j <= s."""
    e = _as_gap_vector(e)
    if not 1 <= i <= j <= len(e):
        raise IndexError(f"need 1 <= i <= j <= {len(e)}, got i={i}, j={j}")
    return (j - i + 1) + sum(e[i - 1 : j], Fraction(0))


def dist_from_above(i: int, j: int, e: Sequence) -> Fraction:
    """d_i - d_j = (i - j) + e_{j+1} + ... + e_i, for 1 <= j < i <= s."""
    e = _as_gap_vector(e)
    if not 1 <= j < i <= len(e):
        raise IndexError(f"need 1 <= j < i <= {len(e)}, got i={i}, j={j}")
    return (i - j) + sum(e[j:i], Fraction(0))


def _check_column(j: int, s: int):
    if not 1 <= j <= s:
        raise IndexError(f"column {j} outside 1..{s}")


def _factors(j: int, e: Tuple[Fraction, ...]):
    """Numerator and denominator linear-form values of the column-j total.

    Returns (numerator factors keyed by i, below factors keyed by i, above
    factors keyed by i) where the denominator of the total is the product of
    the below factors (i = 2..j) and above factors (i = j+1..s).
    """
    s = len(e)
    prefix = [Fraction(0)] * (s + 1)
    for i, x in enumerate(e, start=1):
        prefix[i] = prefix[i - 1] + x
    base = {i: i + prefix[i] for i in range(1, s + 1) if i != j}
    below = {i: (j - i + 1) + prefix[j] - prefix[i - 1] for i in range(2, j + 1)}
    above = {i: (i - j) + prefix[i] - prefix[j] for i in range(j + 1, s + 1)}
    return base, below, above


def pure_total(j: int, e: Sequence) -> Fraction:
    """Column-j total of the normalized pure diagram with gap vector e >= 0."""
    e = _as_gap_vector(e)
    _check_column(j, len(e))
    if any(x < 0 for x in e):
        raise DomainError(f"gap vector must be nonnegative, got {e}")
    base, below, above = _factors(j, e)
    value = Fraction(1)
    for factor in base.values():
        value *= factor
    for factor in below.values():
        value /= factor
    for factor in above.values():
        value /= factor
    return value


def _log_gradient(j: int, e: Tuple[Fraction, ...]):
    """Value of the column total and all its logarithmic partials.

    Each linear form L contributes (dL/de_k)/L with dL/de_k in {0, 1}, so the
    k-th partial of log(total) is an explicit signed sum of reciprocals.
    """
    s = len(e)
    base, below, above = _factors(j, e)
    for group in (base, below, above):
        for factor in group.values():
            if factor == 0:
                raise PoleError("a linear form vanishes at this point")
    value = Fraction(1)
    for factor in base.values():
        value *= factor
    for factor in below.values():
        value /= factor
    for factor in above.values():
        value /= factor
    inv_base = {i: 1 / f for i, f in base.items()}
    inv_below = {i: 1 / f for i, f in below.items()}
    inv_above = {i: 1 / f for i, f in above.items()}
    grad = []
    for k in range(1, s + 1):
        total = sum((inv_base[i] for i in inv_base if i >= k), Fraction(0))
        if k <= j:
            total -= sum((inv_below[i] for i in inv_below if i <= k), Fraction(0))
        else:
            total -= sum((inv_above[i] for i in inv_above if i >= k), Fraction(0))
        grad.append(total)
    return value, tuple(grad)


def pure_total_partial(j: int, k: int, e: Sequence) -> Fraction:
    """Exact partial derivative of the column-j total with respect to e_k."""
    e = _as_gap_vector(e)
    _check_column(j, len(e))
    _check_column(k, len(e))
    value, grad = _log_gradient(j, e)
    return value * grad[k - 1]


def pure_total_split(j: int, s: int, t, e1) -> Fraction:
    """Column-j total on the slice e = e1*u_1 + t*e1*u_j + (1-t)*e1*u_{j+1}.

    Closed product form used for the interior columns 1 < j < s:

        [(1+e1)...(j-1+e1) * (j+1+2e1)...(s+2e1)]
        / [(j-1+t*e1)...(1+t*e1) * (1+(1-t)*e1)...((s-j)+(1-t)*e1)]
    """
    t = Fraction(t)
    e1 = Fraction(e1)
    if not 1 < j < s:
        raise IndexError(f"need 1 < j < s, got j={j}, s={s}")
    if not 0 <= t <= 1 or e1 < 0:
        raise DomainError(f"need 0 <= t <= 1 and e1 >= 0, got t={t}, e1={e1}")
    value = Fraction(1)
    for i in range(1, j):
        value *= i + e1
    for i in range(j + 1, s + 1):
        value *= i + 2 * e1
    for i in range(1, j):
        value /= i + t * e1
    for i in range(1, s - j + 1):
        value /= i + (1 - t) * e1
    return value


# -- seeded verification sweeps ---------------------------------------------------


@dataclass(frozen=True)
class Violation:
    e: Tuple[Fraction, ...]
    j: int
    k: Optional[int]
    value: Fraction

    def to_json_dict(self) -> dict:
        return {
            "e": [format_rational(x) for x in self.e],
            "j": self.j,
            "k": self.k,
            "value": format_rational(self.value),
        }


@dataclass(frozen=True)
class VerifyReport:
    name: str
    samples: int
    seed: int
    s_max: int
    violations: Tuple[Violation, ...]

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json_dict(self) -> dict:
        return {
            "lemma": self.name,
            "samples": self.samples,
            "seed": self.seed,
            "violations": [v.to_json_dict() for v in self.violations],
        }

    def to_json(self, indent=None) -> str:
        return json.dumps(self.to_json_dict(), indent=indent)

    def summary(self) -> str:
        status = "PASS" if self.passed else f"FAIL ({len(self.violations)} violations)"
        return f"{self.name}: {self.samples} samples, seed {self.seed}, s <= {self.s_max}: {status}"


def _sample_coordinate(rng: random.Random, max_value: int = 10) -> Fraction:
    # zero with probability 1/8 so boundary points of the orthant get exercised
    if rng.random() < 0.125:
        return Fraction(0)
    den = rng.choice(_SAMPLE_DENOMINATORS)
    return Fraction(rng.randint(0, max_value * den), den)


def _sample_gap_vector(rng: random.Random, s: int, max_value: int = 10):
    return tuple(_sample_coordinate(rng, max_value) for _ in range(s))


def verify_first_gap_monotone(s_max: int, samples: int, seed: int) -> VerifyReport:
    """Check d(total_j)/de_1 >= 0 at seeded rational points of the orthant."""
    rng = random.Random(seed)
    violations = []
    for _ in range(samples):
        s = rng.randint(1, s_max)
        e = _sample_gap_vector(rng, s)
        for j in range(1, s + 1):
            value, grad = _log_gradient(j, e)
            derivative = value * grad[0]
            if derivative < 0:
                violations.append(Violation(e, j, 1, derivative))
    return VerifyReport("first-gap-monotonicity", samples, seed, s_max, tuple(violations))


def verify_inward_shift_monotone(s_max: int, samples: int, seed: int) -> VerifyReport:
    """Check that shifting gap mass toward columns j, j+1 never raises total_j.

    Two sign conditions per column: (d/de_j - d/de_k) total_j <= 0 for k < j,
    and (d/de_{j+1} - d/de_k) total_j <= 0 for k > j + 1.
    """
    rng = random.Random(seed)
    violations = []
    for _ in range(samples):
        s = rng.randint(1, s_max)
        e = _sample_gap_vector(rng, s)
        for j in range(1, s + 1):
            value, grad = _log_gradient(j, e)
            for k in range(1, j):
                combined = value * (grad[j - 1] - grad[k - 1])
                if combined > 0:
                    violations.append(Violation(e, j, k, combined))
            for k in range(j + 2, s + 1):
                combined = value * (grad[j] - grad[k - 1])
                if combined > 0:
                    violations.append(Violation(e, j, k, combined))
    return VerifyReport("inward-shift-monotonicity", samples, seed, s_max, tuple(violations))


def verify_binomial_floor(s_max: int, samples: int, seed: int) -> VerifyReport:
    """Check total_j >= C(s, j) when the first gap dominates the others.

    Sampled points satisfy e_1 >= e_2 + ... + e_s.  The boundary columns also
    get their closed forms asserted: for e = (x, 0, ..., 0),

        total_1 = (2+x)(3+x)...(s+x) / (s-1)!

    and for e = (x, 0, ..., 0, y),

        total_s = prod_{i<s} (i+x) / prod_{i<s} (i+y),

    which is at least 1 whenever y <= x.
    """
    rng = random.Random(seed)
    violations = []
    for _ in range(samples):
        s = rng.randint(1, s_max)
        tail = tuple(_sample_coordinate(rng, 5) for _ in range(s - 1))
        e1 = sum(tail, Fraction(0)) + _sample_coordinate(rng, 10)
        e = (e1,) + tail
        for j in range(1, s + 1):
            value = pure_total(j, e)
            if value < math.comb(s, j):
                violations.append(Violation(e, j, None, value))

        # closed-form checks at the reduced points
        x = e1
        reduced = (x,) + (Fraction(0),) * (s - 1)
        first = pure_total(1, reduced)
        expected_first = Fraction(1)
        for i in range(2, s + 1):
            expected_first *= i + x
        expected_first /= math.factorial(s - 1)
        if first != expected_first or first < s:
            violations.append(Violation(reduced, 1, None, first))
        if s >= 2:
            y = x * Fraction(rng.randint(0, 64), 64)
            boundary = (x,) + (Fraction(0),) * (s - 2) + (y,)
            last = pure_total(s, boundary)
            expected_last = Fraction(1)
            for i in range(1, s):
                expected_last *= Fraction(i + x) / (i + y)
            if last != expected_last or last < 1:
                violations.append(Violation(boundary, s, None, last))
    return VerifyReport("binomial-floor", samples, seed, s_max, tuple(violations))
