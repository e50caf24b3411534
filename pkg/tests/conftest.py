"""Shared oracles and generators.

The oracles recompute results by routes independent of the library code:
brute-force vertex enumeration for linear programs, bisection on membership
for the gauge, and direct arithmetic re-verification of certificates. They
are deliberately slow and simple.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

import pytest

from polarcut.lp import LinearProgram
from polarcut.polyhedra import HPolyhedron, membership, normalize
from polarcut.rationals import QScalar, dot, vector


@pytest.fixture
def quadrant_k() -> HPolyhedron:
    """The running example: {x : x1 <= 1, x2 <= 1}."""
    return normalize([(1, 0), (0, 1)], [1, 1])


# ---------------------------------------------------------------- LP oracle


def solve_square(matrix, rhs):
    """Exact Gaussian elimination; None when the system is singular."""
    n = len(rhs)
    aug = [list(row) + [b] for row, b in zip(matrix, rhs)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            return None
        aug[col], aug[pivot] = aug[pivot], aug[col]
        p = aug[col][col]
        aug[col] = [v / p for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return tuple(aug[r][n] for r in range(n))


def oracle_feasible(lp: LinearProgram, x) -> bool:
    for j, bound in enumerate(lp.bounds):
        if bound == "nonneg" and x[j] < 0:
            return False
    for coeffs, rel, b in lp.rows:
        lhs = sum(c * v for c, v in zip(coeffs, x))
        if rel == "<=" and lhs > b:
            return False
        if rel == "=" and lhs != b:
            return False
    return True


def brute_force_best(lp: LinearProgram):
    """Enumerate every basic point: n-subsets of {rows as equalities} union
    {x_j = 0 for nonneg j}, solved exactly. Returns (any_feasible, best).

    Sound for pointed feasible regions: a feasible pointed polyhedron has a
    vertex, and a finite optimum is attained at one.
    """
    n = len(lp.objective)
    cands = [(coeffs, b) for coeffs, _, b in lp.rows]
    for j, bound in enumerate(lp.bounds):
        if bound == "nonneg":
            unit = [QScalar(0)] * n
            unit[j] = QScalar(1)
            cands.append((tuple(unit), QScalar(0)))
    any_feasible = False
    best = None
    for subset in combinations(range(len(cands)), n):
        x = solve_square(
            [cands[i][0] for i in subset], [cands[i][1] for i in subset]
        )
        if x is None or not oracle_feasible(lp, x):
            continue
        any_feasible = True
        value = sum(c * v for c, v in zip(lp.objective, x))
        if (
            best is None
            or (lp.direction == "max" and value > best)
            or (lp.direction == "min" and value < best)
        ):
            best = value
    return any_feasible, best


def random_lp(rng: random.Random) -> LinearProgram:
    """Random program kept pointed (free variables get one box row each) and
    small enough that brute_force_best enumerates a few hundred subsets."""
    max_rows_for = {1: 9, 2: 9, 3: 8, 4: 6, 5: 5, 6: 4}
    n = rng.randint(1, 6)
    bounds = []
    for _ in range(n):
        bounds.append("free" if rng.random() < 0.25 else "nonneg")
    n_free = bounds.count("free")
    total_rows = rng.randint(max(1, n_free), max_rows_for[n])
    rows = []
    for j, bound in enumerate(bounds):
        if bound == "free":
            box = [0] * n
            box[j] = rng.choice([1, -1])
            rows.append((tuple(box), "<=", QScalar(rng.randint(1, 6))))
    while len(rows) < total_rows:
        coeffs = tuple(
            QScalar(rng.randint(-4, 4), rng.randint(1, 2)) for _ in range(n)
        )
        if all(c == 0 for c in coeffs):
            continue
        rel = "=" if rng.random() < 0.15 else "<="
        rows.append((coeffs, rel, QScalar(rng.randint(-6, 6))))
    objective = tuple(QScalar(rng.randint(-5, 5)) for _ in range(n))
    direction = rng.choice(["max", "min"])
    return LinearProgram.make(direction, objective, rows, bounds)


# -------------------------------------------------------------- gauge oracle


def gauge_bracket(h: HPolyhedron, x, steps: int = 60):
    """Bracket the gauge using only membership queries: gauge(x) <= t iff
    x/t stays in the set. Returns exact Fractions (lo, hi), hi - lo tiny."""
    def inside(t: Fraction) -> bool:
        exact = [Fraction(int(c.numerator), int(c.denominator)) / t for c in x]
        scaled = vector([QScalar(int(c.numerator), int(c.denominator)) for c in exact])
        return membership(h, scaled).position != "outside"

    hi = Fraction(1)
    grow = 0
    while not inside(hi):
        hi *= 2
        grow += 1
        assert grow < 64, "gauge bracket failed to find an upper bound"
    lo = Fraction(0)
    if inside(Fraction(1, 2**40)):
        # the whole ray is inside: gauge is somewhere in [0, 2^-40]
        return lo, Fraction(1, 2**40)
    for _ in range(steps):
        mid = (lo + hi) / 2
        if mid > 0 and inside(mid):
            hi = mid
        else:
            lo = mid
    return lo, hi


# ------------------------------------------------------- hull re-verification


def recheck_hull_verdict(p, polytope, verdict) -> bool:
    """Direct arithmetic on the certificate, no library calls."""
    pts = polytope.points
    if verdict.inside:
        mults = verdict.multipliers
        if mults is None or len(mults) != len(pts):
            return False
        if any(m < 0 for m in mults) or sum(mults) != 1:
            return False
        for d in range(polytope.dim):
            if sum(m * q[d] for m, q in zip(mults, pts)) != p[d]:
                return False
        return True
    if verdict.separator is None:
        return False
    c, gamma = verdict.separator
    if dot(c, p) <= gamma:
        return False
    return all(dot(c, q) <= gamma for q in pts)
