import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import gauge_bracket
from polarcut.polyhedra import (
    VPolytope,
    hull_membership,
    in_recession,
    normalize,
    polar,
    random_polyhedron,
)
from polarcut.rationals import QScalar, vadd, vector, vscale
from polarcut.sublinear import (
    SupportFunction,
    check_unit_ball,
    gauge,
    minimal_sublinear,
    off_recession_check,
    polar_support_lp,
    random_unit_ball_rep,
    reconstruct_check,
    sample_points,
    sandwich_check,
    support,
)


def V(*entries):
    return vector(entries)


coords = st.fractions(min_value=-8, max_value=8, max_denominator=24).map(QScalar)
vec2 = st.tuples(coords, coords)
scales = st.fractions(min_value=0, max_value=6, max_denominator=12).map(QScalar)


def test_quadrant_values(quadrant_k):
    assert gauge(quadrant_k, V(3, 2)) == 3
    assert gauge(quadrant_k, V(-1, -2)) == 0
    assert minimal_sublinear(quadrant_k, V(3, 2)) == 3
    assert minimal_sublinear(quadrant_k, V(-1, -2)) == -1
    assert minimal_sublinear(quadrant_k, V(Fraction(1, 2), Fraction(1, 4))) == Fraction(1, 2)
    sf = SupportFunction(VPolytope(2, (V(1, 0), V(0, 1))))
    assert support(sf, V(3, 2)) == 3
    assert support(sf, V(-1, -2)) == -1


@given(vec2, vec2, scales)
@settings(max_examples=60)
def test_sublinearity_properties(x, y, t):
    h = normalize([(1, 0), (0, 1)], [1, 1])
    for fn in (lambda p: gauge(h, p), lambda p: minimal_sublinear(h, p)):
        assert fn(vscale(t, x)) == t * fn(x)  # positive homogeneity
        assert fn(vadd(x, y)) <= fn(x) + fn(y)  # subadditivity
    assert gauge(h, x) >= 0
    assert minimal_sublinear(h, x) <= gauge(h, x)
    if gauge(h, x) > 0:
        assert minimal_sublinear(h, x) == gauge(h, x)


def test_gauge_against_bisection_oracle():
    rng = random.Random(7)
    for _ in range(6):
        h = random_polyhedron(rng.randint(1, 3), rng.randint(2, 6), rng)
        for x in sample_points(h, 13, 15):
            lo, hi = gauge_bracket(h, x)
            g = gauge(h, x)
            assert lo <= Fraction(int(g.numerator), int(g.denominator)) <= hi


def test_gauge_is_polar_support():
    # independent LP route: gauge = sup over the polar body
    rng = random.Random(17)
    for _ in range(5):
        h = random_polyhedron(2, 5, rng)
        for x in sample_points(h, 19, 10):
            assert polar_support_lp(h, x) == gauge(h, x)


def test_check_unit_ball_cases(quadrant_k):
    rows_only = SupportFunction(VPolytope(2, (V(1, 0), V(0, 1))))
    with_origin = SupportFunction(polar(quadrant_k))
    assert check_unit_ball(rows_only, quadrant_k)
    assert check_unit_ball(with_origin, quadrant_k)
    # missing the second row: its hull no longer covers (0,1)
    assert not check_unit_ball(
        SupportFunction(VPolytope(2, (V(1, 0),))), quadrant_k
    )
    # a generator outside the polar: sup over K exceeds 1
    assert not check_unit_ball(
        SupportFunction(VPolytope(2, (V(1, 0), V(0, 1), V(2, 0)))), quadrant_k
    )
    # a generator with unbounded support over this (unbounded) K
    assert not check_unit_ball(
        SupportFunction(VPolytope(2, (V(1, 0), V(0, 1), V(-1, 0)))), quadrant_k
    )
    with pytest.raises(ValueError):
        check_unit_ball(SupportFunction(VPolytope(1, ((QScalar(1),),))), quadrant_k)


def test_random_unit_ball_rep_valid_and_deterministic(quadrant_k):
    sf = random_unit_ball_rep(quadrant_k, 0, 0)
    assert sf.generator.points == quadrant_k.rows
    rng = random.Random(29)
    for _ in range(6):
        h = random_polyhedron(rng.randint(1, 3), rng.randint(2, 6), rng)
        sf1 = random_unit_ball_rep(h, 4, 5)
        sf2 = random_unit_ball_rep(h, 4, 5)
        assert sf1 == sf2
        assert check_unit_ball(sf1, h)
        body = polar(h)
        for p in sf1.generator.points:
            assert hull_membership(p, body).inside


def test_sandwich_quadrant_and_random(quadrant_k):
    sf = random_unit_ball_rep(quadrant_k, 3, 4)
    report = sandwich_check(quadrant_k, sf, sample_points(quadrant_k, 5, 100))
    assert report.passed and report.samples_checked == 100
    assert report.violations == ()


def test_sandwich_rejects_invalid_candidate(quadrant_k):
    bad = SupportFunction(VPolytope(2, (V(1, 0),)))
    with pytest.raises(ValueError):
        sandwich_check(quadrant_k, bad, sample_points(quadrant_k, 5, 5))


def test_reconstruct_quadrant_and_random(quadrant_k):
    assert reconstruct_check(quadrant_k, sample_points(quadrant_k, 21, 200))
    rng = random.Random(31)
    for _ in range(6):
        h = random_polyhedron(rng.randint(1, 4), rng.randint(2, 7), rng)
        assert reconstruct_check(h, sample_points(h, 23, 60))


def test_off_recession_quadrant(quadrant_k):
    assert off_recession_check(quadrant_k, V(3, 2))
    assert off_recession_check(quadrant_k, V(1, -5))
    with pytest.raises(ValueError):
        off_recession_check(quadrant_k, V(-1, -2))


def test_sample_points_deterministic_mix(quadrant_k):
    pts = sample_points(quadrant_k, 42, 120)
    assert pts == sample_points(quadrant_k, 42, 120)
    assert len(pts) == 120
    # the mix covers the interesting strata for this unbounded set
    assert any(in_recession(quadrant_k, x) for x in pts)
    boundary = [x for x in pts if minimal_sublinear(quadrant_k, x) == 1]
    assert boundary
    assert any(gauge(quadrant_k, x) > 1 for x in pts)
