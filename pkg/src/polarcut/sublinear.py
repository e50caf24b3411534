"""Sublinear functions attached to a canonical polyhedral set.

For a canonical set K = {x : <a_i, x> <= 1} three evaluators matter:

* gauge(K, x)             = max(0, max_i <a_i, x>), the Minkowski gauge -
                            equivalently the support function of the polar;
* minimal_sublinear(K, x) = max_i <a_i, x>, the pointwise-least sublinear
                            function whose unit ball is K (it drops the
                            clamp at zero, so it goes negative on the
                            interior of the recession cone);
* support(C, x)           = max over a finite generator set C, covering
                            every candidate in between.

The checks below make the minimality statement executable: any support
function whose generators squeeze between the tight polar points and the
polar itself agrees with the sandwich
minimal_sublinear <= support <= gauge pointwise, the unit ball is
recoverable from either evaluator, and off the recession cone all three
routes agree exactly.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product

from . import lp
from .polyhedra import (
    HPolyhedron,
    VPolytope,
    hull_membership,
    in_recession,
    membership,
)
from .rationals import (
    ONE,
    QScalar,
    Vec,
    ZERO,
    dot,
    is_zero_vector,
    vadd,
    vscale,
    zero_vector,
)


@dataclass(frozen=True)
class SupportFunction:
    """max over a finite generator set; evaluate with support()."""

    generator: VPolytope


@dataclass(frozen=True)
class SandwichReport:
    """violations holds one tuple per failed sample (the sample followed by
    the compared values, lower to upper); passed iff there are none."""

    samples_checked: int
    violations: tuple
    passed: bool


def gauge(h: HPolyhedron, x: Vec):
    top = max(dot(a, x) for a in h.rows)
    return top if top > 0 else ZERO


def minimal_sublinear(h: HPolyhedron, x: Vec):
    return max(dot(a, x) for a in h.rows)


def support(sf: SupportFunction, x: Vec):
    return max(dot(p, x) for p in sf.generator.points)


def check_unit_ball(sf: SupportFunction, h: HPolyhedron) -> bool:
    """Is the sandwich guaranteed for this generator set?

    Two exact conditions: (a) every row of h lies in the hull of the
    generators, so the support dominates the minimal evaluator; (b) every
    generator supports the set by at most 1 (sup of <., v> over K <= 1 -
    unbounded sup means false), so the gauge dominates the support.
    Generators that are literal rows of h satisfy (b) by definition of K
    and are skipped, as is the zero vector.
    """
    if sf.generator.dim != h.dim:
        raise ValueError("generator dimension differs from the set's")
    hull = sf.generator
    for a in h.rows:
        if not hull_membership(a, hull).inside:
            return False
    row_set = set(h.rows)
    for v in hull.points:
        if v in row_set or is_zero_vector(v):
            continue
        outcome = lp.solve(
            lp.LinearProgram(
                direction="max",
                objective=v,
                rows=tuple((a, "<=", ONE) for a in h.rows),
                bounds=("free",) * h.dim,
            )
        )
        if outcome.status == "unbounded" or outcome.value > 1:
            return False
    return True


def random_unit_ball_rep(h: HPolyhedron, seed: int, count: int) -> SupportFunction:
    """Seeded valid generator set: the rows of h plus `count` random exact
    convex combinations of the origin and the rows (duplicates merged).
    Always passes check_unit_ball by construction."""
    rng = random.Random(seed)
    anchors = [zero_vector(h.dim)] + list(h.rows)
    gens = list(h.rows)
    seen = set(gens)
    for _ in range(count):
        weights = [rng.randint(0, 4) for _ in anchors]
        if sum(weights) == 0:
            weights[0] = 1
        total = QScalar(sum(weights))
        point = zero_vector(h.dim)
        for w, anchor in zip(weights, anchors):
            if w:
                point = vadd(point, vscale(QScalar(w) / total, anchor))
        if point not in seen:
            seen.add(point)
            gens.append(point)
    return SupportFunction(VPolytope(h.dim, tuple(gens)))


def sandwich_check(h: HPolyhedron, sf: SupportFunction, samples) -> SandwichReport:
    """Exact minimal_sublinear <= support <= gauge at every sample.

    Refuses candidates that are not unit-ball representations of h - the
    sandwich is only a theorem under that precondition."""
    if not check_unit_ball(sf, h):
        raise ValueError(
            "candidate generators are not a unit-ball representation of the set"
        )
    violations = []
    count = 0
    for x in samples:
        count += 1
        low = minimal_sublinear(h, x)
        mid = support(sf, x)
        high = gauge(h, x)
        if not (low <= mid <= high):
            violations.append((x, low, mid, high))
    return SandwichReport(count, tuple(violations), not violations)


def reconstruct_check(h: HPolyhedron, samples) -> bool:
    """The set is recoverable from the minimal evaluator: a sample belongs
    iff its value is <= 1, and rescaling any sample with positive gauge onto
    the boundary lands exactly on value 1."""
    for x in samples:
        rho = minimal_sublinear(h, x)
        inside = membership(h, x).position != "outside"
        if inside != (rho <= 1):
            return False
        g = gauge(h, x)
        if g > 0:
            scaled = vscale(ONE / g, x)
            if minimal_sublinear(h, scaled) != 1:
                return False
    return True


def polar_support_lp(h: HPolyhedron, x: Vec):
    """sup of <x, .> over the polar, computed as an LP over exact convex
    multipliers of {0} union rows - an independent route to the same number
    the direct evaluators produce."""
    points = [zero_vector(h.dim)] + list(h.rows)
    npts = len(points)
    outcome = lp.solve(
        lp.LinearProgram(
            direction="max",
            objective=tuple(dot(x, p) for p in points),
            rows=(((ONE,) * npts, "=", ONE),),
            bounds=("nonneg",) * npts,
        )
    )
    assert outcome.status == "optimal"  # a simplex is compact and nonempty
    return outcome.value


def off_recession_check(h: HPolyhedron, x: Vec) -> bool:
    """Off the recession cone the three routes agree exactly:
    minimal_sublinear = gauge = the polar-support LP value.

    Points inside the recession cone are rejected - the agreement is not a
    theorem there."""
    if in_recession(h, x):
        raise ValueError("sample lies in the recession cone")
    rho = minimal_sublinear(h, x)
    return rho == gauge(h, x) and rho == polar_support_lp(h, x)


def sample_points(h: HPolyhedron, seed: int, count: int) -> tuple:
    """Deterministic seeded sample mix: a small integer grid slab, random
    rational points, boundary rescalings of positive-gauge samples, and
    recession-cone members found by sign search. Exactly `count` points."""
    rng = random.Random(seed)
    dim = h.dim
    out = []

    def rand_point() -> Vec:
        return tuple(
            QScalar(rng.randint(-12, 12), rng.randint(1, 6)) for _ in range(dim)
        )

    grid_quota = min(count // 4, 40)
    for ints in product(range(-2, 3), repeat=dim):
        if len(out) >= grid_quota:
            break
        out.append(tuple(QScalar(v) for v in ints))

    while len(out) < (count * 2) // 4:
        out.append(rand_point())

    boundary_quota = (count * 3) // 4
    source = list(out)
    for x in source:
        if len(out) >= boundary_quota:
            break
        g = gauge(h, x)
        if g > 0:
            out.append(vscale(ONE / g, x))

    recession_quota = min(count // 8, boundary_quota + count - len(out))
    found = 0
    for _ in range(recession_quota * 4):
        if found >= recession_quota or len(out) >= count:
            break
        base = rand_point()
        for signs in product((1, -1), repeat=dim):
            candidate = tuple(s * v for s, v in zip(signs, base))
            if in_recession(h, candidate):
                out.append(candidate)
                found += 1
                break

    while len(out) < count:
        out.append(rand_point())
    return tuple(out[:count])
