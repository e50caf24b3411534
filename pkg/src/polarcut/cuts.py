"""Intersection cuts for corner relaxations, with executable validity.

The model: a fractional anchor point f, a finite ray list r^1..r^m, and the
feasible completions x = f + sum_j r^j s_j with s >= 0 required to land in
S = P intersect Z^n (P a rational H-description; P absent means the whole
space). A body B containing f strictly inside but no point of S strictly
inside ("S-free") yields the valid inequality

    sum_j coeff(r^j) s_j >= 1,

where coeff is the minimal sublinear evaluator of the centered body
K = B - f in canonical row form: coeff(r) = max_i <a_i, r>. Validity is
inherited from sublinearity - any s reaching a point of S satisfies the
inequality because the body is S-free - and is additionally *checked* here
point by point on a lattice region, by exact LPs, rather than trusted.

All region scans enumerate the integer box of a given radius around the
componentwise rounding of f in lexicographic order, so reported witnesses
are deterministic: the lexicographically smallest in the box.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from . import lp
from .polyhedra import HPolyhedron, membership, normalize
from .rationals import (
    ONE,
    QScalar,
    Vec,
    ZERO,
    dot,
    format_rational,
    is_integral,
    nearest_int,
    vector,
    vsub,
    zero_vector,
)
from .sublinear import SupportFunction, SandwichReport, check_unit_ball, minimal_sublinear, support

DEFAULT_RADIUS = 5


class AnchorNotInteriorError(ValueError):
    """Raised when f is on the boundary of, or outside, the body."""


class NotSFreeError(ValueError):
    """Raised when cut generation is attempted from a body that strictly
    contains a feasible lattice point; carries that witness."""

    def __init__(self, witness: Vec, radius: int):
        self.witness = witness
        self.radius = radius
        coords = ", ".join(format_rational(c) for c in witness)
        super().__init__(
            f"body strictly contains the feasible lattice point ({coords}) "
            f"(radius-{radius} scan); no valid cut exists"
        )


@dataclass(frozen=True)
class CornerInstance:
    """Anchor f (at least one non-integer coordinate), nonempty rays, and an
    optional H-description of P (general right-hand sides)."""

    dim: int
    f: Vec
    rays: tuple
    p_rows: tuple = ()
    p_rhs: tuple = ()

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dimension must be positive")
        if len(self.f) != self.dim:
            raise ValueError("anchor width differs from dimension")
        if all(is_integral(c) for c in self.f):
            raise ValueError("anchor must have a non-integer coordinate")
        if not self.rays:
            raise ValueError("at least one ray required")
        for r in self.rays:
            if len(r) != self.dim:
                raise ValueError("ray width differs from dimension")
        if len(self.p_rows) != len(self.p_rhs):
            raise ValueError("P row/right-hand-side count mismatch")
        for row in self.p_rows:
            if len(row) != self.dim:
                raise ValueError("P row width differs from dimension")

    @classmethod
    def make(cls, dim, f, rays, p_rows=(), p_rhs=()):
        return cls(
            dim,
            vector(f),
            tuple(vector(r) for r in rays),
            tuple(vector(r) for r in p_rows),
            tuple(QScalar(b) for b in p_rhs),
        )


@dataclass(frozen=True)
class SFreeBody:
    """The body B as given (rows/rhs in x-space) plus its centered canonical
    form K = B - f. Build with make_body so the two stay consistent."""

    rows: tuple
    rhs: tuple
    centered: HPolyhedron


@dataclass(frozen=True)
class Cut:
    alpha: tuple
    provenance: str


@dataclass(frozen=True)
class SFreeVerdict:
    free_on_region: bool
    radius: int
    witness: Vec | None = None


@dataclass(frozen=True)
class CutViolation:
    """x is the offending lattice point; s either attains value < 1
    (improving_ray False) or is a feasible direction along which the value
    drops without bound (improving_ray True)."""

    x: Vec
    s: Vec
    improving_ray: bool


@dataclass(frozen=True)
class ValidityReport:
    valid_on_region: bool
    radius: int
    violation: CutViolation | None = None


@dataclass(frozen=True)
class MaximalityReport:
    """certified iff every facet of the centered body is touched by a
    feasible lattice point tight on exactly that facet. heuristic flags
    verdicts outside the certified scope (P present or unbounded body):
    there the scan radius may simply have missed the touching points."""

    certified: bool
    radius: int
    uncertified_facets: tuple
    heuristic: bool


def translate_to_origin(b_rows, b_rhs, f: Vec) -> HPolyhedron:
    """Centered canonical form of the body: {r : <a_i, r> <= b_i - <a_i, f>},
    normalized. Demands f strictly interior (every shifted rhs positive)."""
    rows = [vector(a) for a in b_rows]
    rhs = [QScalar(b) for b in b_rhs]
    if len(rows) != len(rhs):
        raise ValueError("body row/right-hand-side count mismatch")
    shifted = []
    for a, b in zip(rows, rhs):
        margin = b - dot(a, f)
        if margin <= 0:
            raise AnchorNotInteriorError("f not interior to the body")
        shifted.append(margin)
    return normalize(rows, shifted)


def make_body(b_rows, b_rhs, f: Vec) -> SFreeBody:
    rows = tuple(vector(a) for a in b_rows)
    rhs = tuple(QScalar(b) for b in b_rhs)
    return SFreeBody(rows, rhs, translate_to_origin(rows, rhs, f))


def cut_coeff(centered: HPolyhedron, ray: Vec):
    """Cut coefficient of one ray: the centered body's minimal sublinear
    evaluator, max_i <a_i, ray>. Positive homogeneous and subadditive, which
    is what makes the resulting inequality valid."""
    return minimal_sublinear(centered, ray)


def region_lattice_points(inst: CornerInstance, radius: int):
    """Lattice points of the scan box around round(f), lexicographic order,
    filtered to P."""
    center = [nearest_int(c) for c in inst.f]
    ranges = [range(c - radius, c + radius + 1) for c in center]
    for ints in product(*ranges):
        z = tuple(QScalar(v) for v in ints)
        if all(dot(p, z) <= b for p, b in zip(inst.p_rows, inst.p_rhs)):
            yield z


def is_s_free(body: SFreeBody, inst: CornerInstance, radius: int = DEFAULT_RADIUS) -> SFreeVerdict:
    """Scan the region for a feasible lattice point strictly inside the
    body; the first (lexicographically smallest) one found is the witness."""
    for z in region_lattice_points(inst, radius):
        offset = vsub(z, inst.f)
        if membership(body.centered, offset).position == "interior":
            return SFreeVerdict(False, radius, z)
    return SFreeVerdict(True, radius, None)


def generate_cut(inst: CornerInstance, body: SFreeBody, radius: int = DEFAULT_RADIUS) -> Cut:
    """Refuses (NotSFreeError, with witness) unless the body scans S-free on
    the region; otherwise one coefficient per ray."""
    verdict = is_s_free(body, inst, radius)
    if not verdict.free_on_region:
        raise NotSFreeError(verdict.witness, radius)
    alpha = tuple(cut_coeff(body.centered, r) for r in inst.rays)
    rows_text = ", ".join(
        "(" + ", ".join(format_rational(c) for c in row) + ")"
        for row in body.centered.rows
    )
    f_text = ", ".join(format_rational(c) for c in inst.f)
    return Cut(
        alpha=alpha,
        provenance=f"centered body rows [{rows_text}] about f=({f_text})",
    )


def check_cut_validity(inst: CornerInstance, cut: Cut, radius: int = DEFAULT_RADIUS) -> ValidityReport:
    """For each feasible lattice point z in the region, minimize the cut's
    left-hand side over the exact ray combinations reaching z. The cut is
    valid on the region iff every such point is unreachable or has minimum
    >= 1. A minimum below 1 (or an unbounded descent direction) is returned
    as the lexicographically first violation."""
    if len(cut.alpha) != len(inst.rays):
        raise ValueError("one coefficient per ray required")
    nrays = len(inst.rays)
    for z in region_lattice_points(inst, radius):
        target = vsub(z, inst.f)
        rows = tuple(
            (tuple(r[d] for r in inst.rays), "=", target[d])
            for d in range(inst.dim)
        )
        outcome = lp.solve(
            lp.LinearProgram(
                direction="min",
                objective=cut.alpha,
                rows=rows,
                bounds=("nonneg",) * nrays,
            )
        )
        if outcome.status == "infeasible":
            continue
        if outcome.status == "unbounded":
            return ValidityReport(
                False, radius, CutViolation(z, outcome.ray, True)
            )
        if outcome.value < 1:
            return ValidityReport(
                False, radius, CutViolation(z, outcome.point, False)
            )
    return ValidityReport(True, radius, None)


def _cone_is_pointed(centered: HPolyhedron) -> bool:
    """True iff the centered body is bounded: its recession cone
    {x : <a_i, x> <= 0} contains no direction at all beyond the origin."""
    cone_rows = tuple((a, "<=", ZERO) for a in centered.rows)
    for d in range(centered.dim):
        for sign in (ONE, -ONE):
            objective = list(zero_vector(centered.dim))
            objective[d] = sign
            outcome = lp.solve(
                lp.LinearProgram(
                    direction="max",
                    objective=tuple(objective),
                    rows=cone_rows,
                    bounds=("free",) * centered.dim,
                )
            )
            if outcome.status == "unbounded":
                return False
    return True


def maximality_certificate(
    body: SFreeBody, inst: CornerInstance, radius: int = DEFAULT_RADIUS
) -> MaximalityReport:
    """A facet counts as certified when some feasible lattice point in the
    region is tight on it and strictly slack on every other row - i.e. sits
    in the facet's relative interior, blocking any strict enlargement of the
    body there. Bounded bodies with P absent get a definitive verdict;
    anything else is labelled heuristic."""
    k = body.centered
    heuristic = bool(inst.p_rows) or not _cone_is_pointed(k)
    uncertified = []
    for i in range(len(k.rows)):
        found = False
        for z in region_lattice_points(inst, radius):
            values = [dot(a, vsub(z, inst.f)) for a in k.rows]
            if values[i] == 1 and all(
                v < 1 for j, v in enumerate(values) if j != i
            ):
                found = True
                break
        if not found:
            uncertified.append(i)
    return MaximalityReport(
        certified=not uncertified,
        radius=radius,
        uncertified_facets=tuple(uncertified),
        heuristic=heuristic,
    )


def minimality_compare(body: SFreeBody, sf: SupportFunction, samples) -> SandwichReport:
    """The body's cut coefficients never exceed any competing unit-ball
    support function at the sampled rays. Candidates failing
    check_unit_ball against the centered body are rejected."""
    if not check_unit_ball(sf, body.centered):
        raise ValueError(
            "candidate generators are not a unit-ball representation of the body"
        )
    violations = []
    count = 0
    for r in samples:
        count += 1
        low = cut_coeff(body.centered, r)
        mid = support(sf, r)
        if not low <= mid:
            violations.append((r, low, mid))
    return SandwichReport(count, tuple(violations), not violations)
