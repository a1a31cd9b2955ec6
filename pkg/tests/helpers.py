"""Shared oracles and corpus builders for the test suite.

The oracles here deliberately avoid the library's own code paths: pure
diagrams are solved from their defining linear equations, diagram statistics
are recomputed from dense tables, and derivatives are approximated by central
differences in exact rational arithmetic.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction

from bettibounds import BettiDiagram, herzog_kuhl, koszul, minimalize, corpus, taylor_betti


def hk_equation_solve(degrees):
    """Column totals of the normalized pure diagram, from the linear system.

    Solves sum_i (-1)^i * d_i^t * x_i = 0 for t = 0..s-1 with x_0 = 1 by
    exact Gaussian elimination.
    """
    degrees = tuple(degrees)
    s = len(degrees) - 1
    if s == 0:
        return (Fraction(1),)
    rows = []
    for t in range(s):
        row = [Fraction((-1) ** i * degrees[i] ** t) for i in range(1, s + 1)]
        row.append(Fraction(-(degrees[0] ** t)))
        rows.append(row)
    for col in range(s):
        pivot = next(r for r in range(col, s) if rows[r][col])
        rows[col], rows[pivot] = rows[pivot], rows[col]
        for r in range(col + 1, s):
            factor = rows[r][col] / rows[col][col]
            if factor:
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[col])]
    xs = [Fraction(0)] * s
    for r in range(s - 1, -1, -1):
        acc = rows[r][s] - sum((rows[r][c] * xs[c] for c in range(r + 1, s)), Fraction(0))
        xs[r] = acc / rows[r][r]
    return (Fraction(1),) + tuple(xs)


def dense_scan(diagram):
    """Recompute column totals, extreme degrees, and regularity from a dense table."""
    items = diagram.items()
    imax = max(i for (i, _), _ in items)
    jmin = min(j for (_, j), _ in items)
    jmax = max(j for (_, j), _ in items)
    dense = [[Fraction(0)] * (jmax - jmin + 1) for _ in range(imax + 1)]
    for (i, j), value in items:
        dense[i][j - jmin] += value
    totals = [sum(row, Fraction(0)) for row in dense]
    min_deg = []
    max_deg = []
    for row in dense:
        support = [jmin + c for c, v in enumerate(row) if v]
        if not support:
            min_deg = max_deg = None
            break
        min_deg.append(min(support))
        max_deg.append(max(support))
    reg = max(j - i for i in range(imax + 1) for j in range(jmin, jmax + 1) if dense[i][j - jmin])
    return {
        "totals": totals,
        "min_degrees": tuple(min_deg) if min_deg is not None else None,
        "max_degrees": tuple(max_deg) if max_deg is not None else None,
        "regularity": reg,
    }


def random_sparse_diagram(rng: random.Random, max_i=4, max_j=8, entries=6):
    table = {}
    while len(table) < entries:
        i = rng.randint(0, max_i)
        j = rng.randint(-2, max_j)
        table[i, j] = Fraction(rng.randint(1, 40), rng.choice((1, 2, 3, 4, 6)))
    return BettiDiagram(table)


def random_chain(rng: random.Random, s: int, n_terms: int, step=2):
    """Chain of degree sequences of fixed length, nondecreasing termwise."""
    current = [0]
    for _ in range(s):
        current.append(current[-1] + 1 + rng.randint(0, step))
    chain = [tuple(current)]
    for _ in range(n_terms - 1):
        bumped = list(chain[-1])
        for idx in range(s, 0, -1):
            ceiling = bumped[idx + 1] - 1 if idx < s else bumped[idx] + step
            bumped[idx] = rng.randint(bumped[idx], max(bumped[idx], ceiling))
        chain.append(tuple(bumped))
    return chain


def random_pure_combination(rng: random.Random, s_max=4, max_terms=3):
    """Integral multiple of a random nonnegative-integer chain combination."""
    s = rng.randint(1, s_max)
    chain = random_chain(rng, s, rng.randint(1, max_terms))
    total = BettiDiagram()
    for degrees in chain:
        total = total + rng.randint(1, 5) * herzog_kuhl(degrees).diagram
    clear = math.lcm(*(value.denominator for _, value in total.items()))
    return clear * total


MONOMIAL_FAMILIES = (
    "power-of-maximal(2,2)",
    "power-of-maximal(2,3)",
    "power-of-maximal(3,1)",
    "power-of-maximal(3,2)",
    "power-of-maximal(4,1)",
    "vplusm(2,2,x0^2)",
    "vplusm(2,3,x0^3)",
    "vplusm(3,2,x0^2,x0*x1)",
    "square-free-example(3)",
    "square-free-example(4)",
)


def monomial_corpus():
    ideals = [(name, corpus(name)) for name in MONOMIAL_FAMILIES]
    ideals.append(("two-generators", minimalize(2, [(2, 0), (1, 1)])))
    return ideals


def corpus_diagrams():
    """Named module diagrams exercised across the pipeline tests."""
    diagrams = {f"koszul-{n}": koszul(n) for n in range(1, 7)}
    diagrams["quotient-x2-xy"] = BettiDiagram({(0, 0): 1, (1, 2): 2, (2, 3): 1})
    diagrams["generic-2x3"] = BettiDiagram({(0, 0): 2, (1, 1): 3, (2, 3): 1})
    for name, ideal in monomial_corpus():
        diagrams[f"monomial-{name}"] = taylor_betti(ideal)
    return diagrams
