"""Exact linear programming with self-verifying certificates.

A two-phase primal simplex over exact rationals with Bland's anti-cycling
rule, so termination is guaranteed and results are deterministic: the same
program always produces the identical outcome. Every outcome carries a
certificate that verify_certificate re-checks by direct arithmetic:

* optimal   - a feasible point, its objective value, and dual multipliers
              whose combination proves the value (strong duality holds with
              exact equality, no tolerance);
* unbounded - a feasible recession direction with strict objective
              improvement (plus a feasible point witnessing nonemptiness);
* infeasible- a Farkas witness: row multipliers whose combination is a
              nonnegative functional on the feasible cone with a negative
              right-hand side.

Internal shape (invisible to callers): the program is converted to
``maximize`` over equality standard form. Free variables are split into
differences of nonnegative ones, inequality rows receive slacks, rows with
negative right-hand sides are flipped, and every row gets an artificial
variable so the initial basis is always the identity. Dual multipliers are
read off the artificial columns of the final objective row and mapped back
through the flips/direction to the original row space.
"""

from __future__ import annotations

from dataclasses import dataclass

from .rationals import ONE, ZERO, QScalar, Vec, dot, vector

MAX_PIVOTS = 200_000  # Bland's rule cannot cycle; this trips only on a bug.

_DIRECTIONS = ("max", "min")
_RELATIONS = ("<=", "=")
_BOUNDS = ("nonneg", "free")


@dataclass(frozen=True)
class LinearProgram:
    """direction in {max,min}; rows are (coeffs, '<=' or '=', rhs);
    bounds give each variable's domain, 'nonneg' or 'free'."""

    direction: str
    objective: Vec
    rows: tuple
    bounds: tuple

    def __post_init__(self):
        if self.direction not in _DIRECTIONS:
            raise ValueError(f"direction must be one of {_DIRECTIONS}")
        n = len(self.objective)
        if n < 1:
            raise ValueError("a program needs at least one variable")
        if len(self.bounds) != n:
            raise ValueError("one bound per variable required")
        for b in self.bounds:
            if b not in _BOUNDS:
                raise ValueError(f"bound must be one of {_BOUNDS}")
        for coeffs, rel, _ in self.rows:
            if len(coeffs) != n:
                raise ValueError("row width differs from variable count")
            if rel not in _RELATIONS:
                raise ValueError(f"relation must be one of {_RELATIONS}")

    @classmethod
    def make(cls, direction, objective, rows, bounds=None):
        """Coercing constructor: plain ints/Fractions welcome."""
        obj = vector(objective)
        rows_t = tuple(
            (vector(coeffs), rel, QScalar(rhs)) for coeffs, rel, rhs in rows
        )
        if bounds is None:
            bounds = ("nonneg",) * len(obj)
        return cls(direction, obj, rows_t, tuple(bounds))


@dataclass(frozen=True)
class LPOutcome:
    """status in {optimal, unbounded, infeasible}.

    point/value/dual are set when optimal; ray (and a feasible point) when
    unbounded; dual alone holds the Farkas witness when infeasible.
    """

    status: str
    point: Vec | None = None
    value: object | None = None
    ray: Vec | None = None
    dual: Vec | None = None


def _pivot(tab, rhs, objrow, value, basis, leave, enter):
    prow = tab[leave]
    p = prow[enter]
    newrow = [x / p for x in prow]
    newrhs = rhs[leave] / p
    tab[leave] = newrow
    rhs[leave] = newrhs
    basis[leave] = enter
    for i, row in enumerate(tab):
        if i == leave:
            continue
        f = row[enter]
        if f != 0:
            tab[i] = [a - f * b for a, b in zip(row, newrow)]
            rhs[i] -= f * newrhs
    f = objrow[enter]
    if f != 0:
        for j, b in enumerate(newrow):
            if b != 0:
                objrow[j] -= f * b
        value -= f * newrhs
    return value


def _build_objrow(tab, rhs, basis, cost):
    objrow = [-c for c in cost]
    value = ZERO
    for i, bi in enumerate(basis):
        cb = cost[bi]
        if cb != 0:
            row = tab[i]
            for j in range(len(objrow)):
                if row[j] != 0:
                    objrow[j] += cb * row[j]
            value += cb * rhs[i]
    return objrow, value


def _run_simplex(tab, rhs, objrow, value, basis, enter_cols):
    """Bland's rule: entering = smallest eligible column index; leaving =
    minimum ratio, ties broken by smallest basis variable index."""
    for _ in range(MAX_PIVOTS):
        enter = -1
        for j in enter_cols:
            if objrow[j] < 0:
                enter = j
                break
        if enter < 0:
            return "optimal", value, -1
        leave = -1
        best = None
        for i, row in enumerate(tab):
            a = row[enter]
            if a > 0:
                ratio = rhs[i] / a
                if (
                    best is None
                    or ratio < best
                    or (ratio == best and basis[i] < basis[leave])
                ):
                    best = ratio
                    leave = i
        if leave < 0:
            return "unbounded", value, enter
        value = _pivot(tab, rhs, objrow, value, basis, leave, enter)
    raise RuntimeError("pivot limit exceeded; simplex invariant broken")


def solve(lp: LinearProgram) -> LPOutcome:
    """Deterministic exact solve; see module docstring for the certificates."""
    n = len(lp.objective)
    sense = 1 if lp.direction == "max" else -1

    # Column layout: split columns for the original variables, then slacks,
    # then one artificial per row.
    ucols = []  # (original variable, sign)
    for j, b in enumerate(lp.bounds):
        ucols.append((j, 1))
        if b == "free":
            ucols.append((j, -1))
    nu = len(ucols)
    m = len(lp.rows)
    slack_of = {}
    col = nu
    for i, (_, rel, _) in enumerate(lp.rows):
        if rel == "<=":
            slack_of[i] = col
            col += 1
    art0 = col
    ncols = art0 + m

    tab = []
    rhs = []
    flip = []
    for i, (coeffs, rel, b) in enumerate(lp.rows):
        row = [ZERO] * ncols
        for k, (j, sg) in enumerate(ucols):
            row[k] = sg * coeffs[j]
        if i in slack_of:
            row[slack_of[i]] = ONE
        s = 1
        if b < 0:
            s = -1
            row = [-x for x in row]
            b = -b
        row[art0 + i] = ONE
        tab.append(row)
        rhs.append(QScalar(b))
        flip.append(s)
    basis = list(range(art0, ncols))

    # Phase 1: drive the artificials to zero.
    if m > 0:
        cost1 = [ZERO] * art0 + [-ONE] * m
        objrow, value = _build_objrow(tab, rhs, basis, cost1)
        status, value, _ = _run_simplex(
            tab, rhs, objrow, value, basis, range(ncols)
        )
        assert status == "optimal"  # phase-1 objective is bounded above by 0
        if value < 0:
            # Farkas witness from the artificial columns: y_i = objrow - cost.
            dual = tuple(
                flip[i] * (objrow[art0 + i] - ONE) for i in range(m)
            )
            return LPOutcome(status="infeasible", dual=dual)
        # Pivot leftover artificials out of the basis (always degenerate,
        # rhs 0). A row with no nonzero structural entry is linearly
        # dependent on the others and stays inert with its artificial
        # parked at zero.
        for i in range(m):
            if basis[i] >= art0:
                enter = next(
                    (j for j in range(art0) if tab[i][j] != 0), -1
                )
                if enter >= 0:
                    value = _pivot(tab, rhs, objrow, value, basis, i, enter)

    # Phase 2: the real objective over the structural columns.
    cost2 = [ZERO] * ncols
    for k, (j, sg) in enumerate(ucols):
        cost2[k] = sg * sense * lp.objective[j]
    objrow, value = _build_objrow(tab, rhs, basis, cost2)
    status, value, enter = _run_simplex(
        tab, rhs, objrow, value, basis, range(art0)
    )

    uvals = {b: rhs[i] for i, b in enumerate(basis)}
    point = [ZERO] * n
    for k, (j, sg) in enumerate(ucols):
        v = uvals.get(k)
        if v is not None:
            point[j] += sg * v
    point = tuple(point)

    if status == "unbounded":
        dvals = {enter: ONE}
        for i, b in enumerate(basis):
            t = tab[i][enter]
            if t != 0:
                dvals[b] = -t
        ray = [ZERO] * n
        for k, (j, sg) in enumerate(ucols):
            v = dvals.get(k)
            if v is not None:
                ray[j] += sg * v
        return LPOutcome(status="unbounded", point=point, ray=tuple(ray))

    duals = tuple(
        sense * flip[i] * objrow[art0 + i] for i in range(m)
    )
    return LPOutcome(
        status="optimal", point=point, value=sense * value, dual=duals
    )


def _feasible(lp: LinearProgram, x: Vec) -> bool:
    if len(x) != len(lp.objective):
        return False
    for j, b in enumerate(lp.bounds):
        if b == "nonneg" and x[j] < 0:
            return False
    for coeffs, rel, b in lp.rows:
        lhs = dot(coeffs, x)
        if rel == "<=" and lhs > b:
            return False
        if rel == "=" and lhs != b:
            return False
    return True


def verify_certificate(lp: LinearProgram, outcome: LPOutcome) -> bool:
    """Re-check an outcome by direct exact arithmetic.

    Returns False on any mismatch; never raises on a well-formed program.
    """
    m = len(lp.rows)
    n = len(lp.objective)
    is_max = lp.direction == "max"

    if outcome.status == "optimal":
        if outcome.point is None or outcome.value is None or outcome.dual is None:
            return False
        if len(outcome.dual) != m or not _feasible(lp, outcome.point):
            return False
        if dot(lp.objective, outcome.point) != outcome.value:
            return False
        # Dual feasibility: multipliers on <= rows carry the direction's
        # sign, and their combination dominates the objective on the
        # nonnegative orthant (matches it exactly on free coordinates).
        combo = [ZERO] * n
        rhs_total = ZERO
        for u, (coeffs, rel, b) in zip(outcome.dual, lp.rows):
            if rel == "<=" and ((is_max and u < 0) or (not is_max and u > 0)):
                return False
            for j in range(n):
                combo[j] += u * coeffs[j]
            rhs_total += u * b
        for j, bound in enumerate(lp.bounds):
            cj = lp.objective[j]
            if bound == "free":
                if combo[j] != cj:
                    return False
            elif is_max:
                if combo[j] < cj:
                    return False
            else:
                if combo[j] > cj:
                    return False
        return rhs_total == outcome.value

    if outcome.status == "unbounded":
        ray = outcome.ray
        if ray is None or len(ray) != n or all(x == 0 for x in ray):
            return False
        for j, bound in enumerate(lp.bounds):
            if bound == "nonneg" and ray[j] < 0:
                return False
        for coeffs, rel, _ in lp.rows:
            lhs = dot(coeffs, ray)
            if rel == "<=" and lhs > 0:
                return False
            if rel == "=" and lhs != 0:
                return False
        gain = dot(lp.objective, ray)
        if is_max and gain <= 0:
            return False
        if not is_max and gain >= 0:
            return False
        if outcome.point is not None and not _feasible(lp, outcome.point):
            return False
        return True

    if outcome.status == "infeasible":
        u = outcome.dual
        if u is None or len(u) != m:
            return False
        combo = [ZERO] * n
        rhs_total = ZERO
        for ui, (coeffs, rel, b) in zip(u, lp.rows):
            if rel == "<=" and ui < 0:
                return False
            for j in range(n):
                combo[j] += ui * coeffs[j]
            rhs_total += ui * b
        for j, bound in enumerate(lp.bounds):
            if bound == "free":
                if combo[j] != 0:
                    return False
            elif combo[j] < 0:
                return False
        return rhs_total < 0

    return False
