"""Polyhedral sets containing the origin in their interior, and their polars.

The central representation is the canonical H-form ``{x : <a_i, x> <= 1}``:
every right-hand side is scaled to 1, so a set is just its tuple of rows.
normalize() is the only sanctioned way to build one from raw data - it
validates that the origin is strictly interior (all raw right-hand sides
positive), scales, deduplicates, and strips redundant rows with exact LPs.

For such a set K the polar K* is conv({0} union rows), and the rows
themselves are exactly the points of the polar at which the pairing
<x, y> = 1 is attained by some x in K (each row is an exposed face
direction; exposed_witness produces the attaining point). Everything here
is exact; all verdicts are decided by rational arithmetic, never tolerance.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import lp
from .rationals import (
    ONE,
    QScalar,
    Vec,
    ZERO,
    dot,
    is_zero_vector,
    vector,
    zero_vector,
)


class OriginNotInteriorError(ValueError):
    """Raised when a raw description does not hold the origin strictly inside."""


class ImproperSetError(ValueError):
    """Raised when every row is vacuous, i.e. the set is the whole space."""


@dataclass(frozen=True)
class HPolyhedron:
    """Canonical row form {x : <a_i, x> <= 1}; rows nonzero, deduplicated,
    irredundant. Build through normalize()."""

    dim: int
    rows: tuple

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dimension must be positive")
        if not self.rows:
            raise ImproperSetError("a canonical set needs at least one row")
        for a in self.rows:
            if len(a) != self.dim:
                raise ValueError("row width differs from dimension")
            if is_zero_vector(a):
                raise ValueError("zero rows are not canonical")
        if len(set(self.rows)) != len(self.rows):
            raise ValueError("duplicate rows are not canonical")


@dataclass(frozen=True)
class VPolytope:
    """Convex hull of finitely many points. Operations never depend on
    redundant (non-vertex) points being present or absent."""

    dim: int
    points: tuple

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dimension must be positive")
        if not self.points:
            raise ValueError("a polytope needs at least one point")
        for p in self.points:
            if len(p) != self.dim:
                raise ValueError("point width differs from dimension")


@dataclass(frozen=True)
class MembershipVerdict:
    position: str  # "interior" | "boundary" | "outside"
    tight_rows: tuple


@dataclass(frozen=True)
class HullVerdict:
    """inside => multipliers are exact convex coefficients reproducing the
    query point; outside => separator (c, gamma) with <c, p> > gamma while
    <c, q> <= gamma for every stored point q."""

    inside: bool
    multipliers: tuple | None = None
    separator: tuple | None = None


def remove_redundancy(dim: int, rows) -> HPolyhedron:
    """Keep a row iff dropping it would enlarge the set.

    Row i is redundant exactly when max <a_i, x> subject to the remaining
    rows stays <= 1. Rows are filtered sequentially so the survivors are
    mutually irredundant; the result is a subset of the input rows.
    """
    kept = []
    for a in rows:
        if a not in kept:
            kept.append(a)
    i = 0
    while i < len(kept):
        others = kept[:i] + kept[i + 1 :]
        if not others:
            i += 1
            continue
        outcome = lp.solve(
            lp.LinearProgram(
                direction="max",
                objective=kept[i],
                rows=tuple((o, "<=", ONE) for o in others),
                bounds=("free",) * dim,
            )
        )
        if outcome.status == "unbounded" or (
            outcome.status == "optimal" and outcome.value > 1
        ):
            i += 1
        else:
            kept.pop(i)
    return HPolyhedron(dim, tuple(kept))


def normalize(raw_rows, raw_rhs) -> HPolyhedron:
    """Canonicalize {x : <a_i, x> <= b_i}.

    Requires every b_i > 0 (the origin strictly inside); scales rows to
    right-hand side 1, drops vacuous zero rows, merges duplicates, and
    strips redundant rows.
    """
    rows = [vector(a) for a in raw_rows]
    rhs = [QScalar(b) for b in raw_rhs]
    if len(rows) != len(rhs):
        raise ValueError("row/right-hand-side count mismatch")
    if not rows:
        raise ImproperSetError("empty description denotes the whole space")
    dim = len(rows[0])
    if dim < 1:
        raise ValueError("dimension must be positive")
    scaled = []
    for a, b in zip(rows, rhs):
        if len(a) != dim:
            raise ValueError("rows of differing dimension")
        if b <= 0:
            raise OriginNotInteriorError(
                f"right-hand side {b} is not positive: origin not interior"
            )
        if is_zero_vector(a):
            continue
        scaled.append(tuple(x / b for x in a))
    if not scaled:
        raise ImproperSetError("all rows vacuous: the set is the whole space")
    return remove_redundancy(dim, scaled)


def membership(h: HPolyhedron, x: Vec) -> MembershipVerdict:
    values = [dot(a, x) for a in h.rows]
    top = max(values)
    if top > 1:
        return MembershipVerdict("outside", ())
    if top < 1:
        return MembershipVerdict("interior", ())
    tight = tuple(i for i, v in enumerate(values) if v == 1)
    return MembershipVerdict("boundary", tight)


def polar(h: HPolyhedron) -> VPolytope:
    """The polar body: conv of the origin together with the rows."""
    return VPolytope(h.dim, (zero_vector(h.dim),) + tuple(h.rows))


def tight_points(h: HPolyhedron) -> tuple:
    """Points of the polar where <x, y> = 1 is attained by some x in the set.

    For a canonical row form these are precisely the rows themselves; each
    one is an exposed vertex of the polar (exposed_witness exhibits the
    attaining point)."""
    return tuple(h.rows)


def recession_rows(h: HPolyhedron) -> tuple:
    """Row form of the recession cone {x : <a_i, x> <= 0}."""
    return tuple(h.rows)


def in_recession(h: HPolyhedron, x: Vec) -> bool:
    return all(dot(a, x) <= 0 for a in h.rows)


def hull_membership(p: Vec, v: VPolytope) -> HullVerdict:
    """Exact convex-hull membership with a certificate either way."""
    if len(p) != v.dim:
        raise ValueError("point width differs from polytope dimension")
    for k, q in enumerate(v.points):
        if q == p:
            mults = [ZERO] * len(v.points)
            mults[k] = ONE
            return HullVerdict(inside=True, multipliers=tuple(mults))
    npts = len(v.points)
    rows = []
    for d in range(v.dim):
        rows.append((tuple(q[d] for q in v.points), "=", p[d]))
    rows.append(((ONE,) * npts, "=", ONE))
    outcome = lp.solve(
        lp.LinearProgram(
            direction="max",
            objective=zero_vector(npts),
            rows=tuple(rows),
            bounds=("nonneg",) * npts,
        )
    )
    if outcome.status == "optimal":
        return HullVerdict(inside=True, multipliers=outcome.point)
    assert outcome.status == "infeasible"
    u = outcome.dual
    c = tuple(-u[d] for d in range(v.dim))
    gamma = u[v.dim]
    return HullVerdict(inside=False, separator=(c, gamma))


def exposed_witness(h: HPolyhedron, row_index: int) -> Vec:
    """A point of the set tight on the given row and strictly slack on all
    others, found by maximizing the slack margin (capped at 1).

    Canonical sets always admit one with positive margin; anything else
    signals an internal inconsistency."""
    a_i = h.rows[row_index]
    nvars = h.dim + 1  # the point plus the margin variable
    rows = [(tuple(a_i) + (ZERO,), "=", ONE)]
    for j, a_j in enumerate(h.rows):
        if j != row_index:
            rows.append((tuple(a_j) + (ONE,), "<=", ONE))
    rows.append((zero_vector(h.dim) + (ONE,), "<=", ONE))
    outcome = lp.solve(
        lp.LinearProgram(
            direction="max",
            objective=zero_vector(h.dim) + (ONE,),
            rows=tuple(rows),
            bounds=("free",) * nvars,
        )
    )
    if outcome.status != "optimal" or outcome.value <= 0:
        raise RuntimeError(
            f"row {row_index} admits no strictly exposed point; "
            "the row set is not canonical"
        )
    return outcome.point[: h.dim]


def random_polyhedron(dim: int, n_rows: int, rng: random.Random) -> HPolyhedron:
    """Seeded random canonical set: n_rows raw rows with small rational
    entries, right-hand sides 1, then normalized (so the result may have
    fewer rows). Mixes bounded and unbounded sets."""
    raw = []
    for _ in range(n_rows):
        while True:
            a = tuple(
                QScalar(rng.randint(-6, 6), rng.randint(1, 4))
                for _ in range(dim)
            )
            if not is_zero_vector(a):
                break
        raw.append(a)
    return normalize(raw, [ONE] * len(raw))
