import math

import numpy as np
import pytest
from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

import oracles
from convexdual.body import disk, polygon
from convexdual.calculus import census, check_pair_identities, check_selfdual_identity
from convexdual.gallery import example2
from convexdual.polarity import dual, hull_with_points, intersect_halfplanes, polar
from convexdual.selfdual import glue_halves, is_selfdual, make_selfdual
from convexdual.verify import verify_all

PI = math.pi
ANGLES = np.linspace(0, 2 * PI, 47)
SETTINGS = settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])


@st.composite
def polygons(draw):
    """Vertices around the origin with every angular gap below pi."""
    k = draw(st.integers(3, 9))
    gaps = draw(st.lists(st.floats(0.15, 1.0), min_size=k, max_size=k))
    total = sum(gaps)
    angles = np.cumsum([g * 2 * PI / total for g in gaps])
    assume(max(g * 2 * PI / total for g in gaps) < PI - 0.2)
    radii = draw(st.lists(st.floats(0.5, 2.0), min_size=k, max_size=k))
    pts = [(r * math.cos(t), r * math.sin(t)) for r, t in zip(radii, angles)]
    hull = oracles.hull_vertices(pts)
    # keep clearly strict corners so both sides agree on the vertex count
    v = np.asarray(hull)
    e = np.roll(v, -1, axis=0) - v
    prev = np.roll(e, 1, axis=0)
    turns = np.abs(prev[:, 0] * e[:, 1] - prev[:, 1] * e[:, 0]) / (np.hypot(*prev.T) * np.hypot(*e.T))
    assume(turns.min() > 1e-3)
    assume(np.hypot(*e.T).min() > 1e-3)
    return [tuple(p) for p in hull]


@SETTINGS
@given(polygons())
def test_polar_matches_facet_oracle(verts):
    P = polar(polygon(verts))
    ref = oracles.polar_vertices(verts)
    for t in ANGLES:
        assert P.support(t) == pytest.approx(oracles.support(ref, t), rel=1e-9, abs=1e-12)


@SETTINGS
@given(polygons())
def test_double_polar_is_identity(verts):
    K = polygon(verts)
    PP = polar(polar(K))
    for t in ANGLES:
        assert PP.support(t) == pytest.approx(K.support(t), rel=1e-10)
    assert census(PP) == census(K)


@SETTINGS
@given(polygons())
def test_polygon_census_and_identities(verts):
    K = polygon(verts)
    k = len(verts)
    assert census(K).as_tuple() == (0, k, 0, 0, k)
    assert check_pair_identities(census(K), census(polar(K)))


ab = st.floats(0.1, 2.0)


@SETTINGS
@given(ab, ab)
def test_example2_dual_closed_form(a, b):
    K = example2(a, b)
    D = dual(K)
    for t in ANGLES:
        assert D.radial(t) == pytest.approx(oracles.example2_dual_radial(t, a, b), rel=1e-10)
    assert census(K).as_tuple() == (2, 0, 0, 0, 1)
    assert census(D).as_tuple() == (0, 0, 0, 1, 0)


@SETTINGS
@given(ab, ab, st.floats(0.05, 0.95))
def test_dual_of_glue(a, b, w):
    s = a + b
    L1, L2 = example2(a, b), example2(w * s, (1 - w) * s)
    lhs = dual(glue_halves(L1, L2))
    rhs = glue_halves(dual(L2), dual(L1))
    for t in ANGLES:
        assert lhs.support(t) == pytest.approx(rhs.support(t), rel=1e-10)


@SETTINGS
@given(st.floats(0.05, 0.95))
def test_make_selfdual_gives_selfdual_body(a):
    # gluing a body to its dual needs unit extent along the x-axis
    b = 1.0 - a
    S = make_selfdual(example2(a, b))
    assert is_selfdual(S)[0]
    assert check_selfdual_identity(census(S))
    S = make_selfdual(dual(example2(a, b)))
    assert is_selfdual(S)[0]
    assert check_selfdual_identity(census(S))


@SETTINGS
@given(st.floats(0, 2 * PI), st.floats(1.2, 4.0))
def test_hull_with_outside_point(theta, d):
    p = (d * math.cos(theta), d * math.sin(theta))
    H = hull_with_points(disk(), [p])
    assert census(H).as_tuple() == (2, 1, 0, 0, 2)
    assert H.radial(theta) == pytest.approx(d, rel=1e-9)
    tangents = oracles.tangency_points(p)
    got = [x for e in H.edges for x in (e.a, e.b) if abs(x.norm() - 1) < 1e-9]
    for q in tangents:
        assert min(math.hypot(q[0] - x.x, q[1] - x.y) for x in got) < 1e-9
    assert check_pair_identities(census(H), census(polar(H)))


@SETTINGS
@given(st.floats(0, 2 * PI), st.floats(0.2, 0.95))
def test_cut_by_halfplane(nu, c):
    C = intersect_halfplanes(disk(), [(nu, c)])
    assert census(C).as_tuple() == (0, 0, 2, 0, 1)
    assert C.support(nu) == pytest.approx(c, abs=1e-12)
    (e,) = C.edges
    assert e.a.dist(e.b) == pytest.approx(2 * math.sqrt(1 - c * c), rel=1e-9)


@settings(max_examples=8, deadline=None)
@given(st.floats(0, 2 * PI), st.floats(1.3, 3.0), st.floats(0, 2 * PI), st.floats(0.3, 0.9))
def test_verify_on_random_hull_and_cut(theta, d, nu, c):
    p = (d * math.cos(theta), d * math.sin(theta))
    K = hull_with_points(disk(), [p])
    # keep the chord away from the tangent edges so no corner is degenerate
    assume(abs(math.remainder(nu - theta, 2 * PI)) > 0.3 + math.acos(1 / d))
    K = intersect_halfplanes(K, [(nu, c)])
    report = verify_all(K, sample_size=16)
    assert report.ok, report.text()
