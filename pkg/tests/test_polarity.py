import math

import numpy as np
import pytest

import oracles
from conftest import SQRT3_2
from convexdual.body import disk, polygon
from convexdual.calculus import census
from convexdual.polarity import (
    bisect_sign_change,
    dual,
    dual_boundary_point,
    hull_with_points,
    intersect_halfplanes,
    polar,
)

PI = math.pi
ANGLES = np.linspace(0, 2 * PI, 61)


def test_polar_of_disk_is_reciprocal_disk():
    P = polar(disk(2.0))
    for t in ANGLES:
        assert P.support(t) == pytest.approx(0.5)
        assert P.radial(t) == pytest.approx(0.5)


def test_polar_of_square_matches_hull_oracle(square):
    verts = [(1, 1), (-1, 1), (-1, -1), (1, -1)]
    ref = oracles.polar_vertices(verts)
    P = polar(square)
    for t in ANGLES:
        assert P.support(t) == pytest.approx(oracles.support(ref, t), abs=1e-12)
    assert census(P).as_tuple() == (0, 4, 0, 0, 4)


def test_polar_of_irregular_polygon_matches_oracle():
    verts = [(1.2, -0.3), (0.8, 0.9), (-0.5, 1.1), (-1.0, -0.2), (0.1, -1.3)]
    ref = oracles.polar_vertices(verts)
    P = polar(polygon(verts))
    for t in ANGLES:
        assert P.support(t) == pytest.approx(oracles.support(ref, t), abs=1e-12)
        assert P.radial(t) == pytest.approx(oracles.radial(ref, t), abs=1e-12)


def test_support_radial_reciprocity(ex2):
    P = polar(ex2)
    for t in ANGLES:
        assert P.support(t) == pytest.approx(1.0 / ex2.radial(t), rel=1e-12)
        assert P.radial(t) == pytest.approx(1.0 / ex2.support(t), rel=1e-12)


def test_dual_of_example2_closed_form(ex2):
    D = dual(ex2)
    for t in ANGLES:
        assert D.radial(t) == pytest.approx(oracles.example2_dual_radial(t), abs=1e-12)


@pytest.mark.parametrize("a,b", [(0.3, 0.7), (0.8, 0.4), (1.5, 1.0)])
def test_dual_of_example2_family(a, b):
    from convexdual.gallery import example2

    D = dual(example2(a, b))
    for t in ANGLES:
        assert D.radial(t) == pytest.approx(oracles.example2_dual_radial(t, a, b), rel=1e-12)


def test_dual_boundary_point_lies_on_dual(ex2):
    D = dual(ex2)
    for t in np.linspace(0.05, 2 * PI, 23):
        x = dual_boundary_point(ex2, t)
        assert x.norm() == pytest.approx(D.radial(x.angle()), rel=1e-10)


@pytest.mark.parametrize("name", ["example2", "fig1c", "fig1d"])
def test_double_polar_is_identity(name):
    from conftest import build

    K = build(name)
    PP = polar(polar(K))
    for t in ANGLES:
        assert PP.support(t) == pytest.approx(K.support(t), abs=1e-12)
    assert census(PP) == census(K)


def test_dual_of_fig1c_is_fig1d(fig1c, fig1d):
    D = dual(fig1c)
    for t in ANGLES:
        assert D.support(t) == pytest.approx(fig1d.support(t), abs=1e-12)
    assert census(D) == census(fig1d)


def test_bisect_sign_change():
    lo, hi = bisect_sign_change(lambda x: x * x - 2.0, 0.0, 2.0)
    assert lo <= math.sqrt(2) <= hi and hi - lo < 1e-14
    lo, hi = bisect_sign_change(lambda x: math.cos(x), 0.0, 3.0)
    assert lo <= PI / 2 <= hi and hi - lo < 1e-14


def test_hull_with_point_tangencies():
    p = (0.0, 2.0)
    H = hull_with_points(disk(), [p])
    got = sorted((round(e.a.x, 9), round(e.a.y, 9)) for e in H.edges)
    got += sorted((round(e.b.x, 9), round(e.b.y, 9)) for e in H.edges)
    for q in oracles.tangency_points(p):
        assert any(math.hypot(q[0] - g[0], q[1] - g[1]) < 1e-9 for g in got)
    assert H.radial(PI / 2) == pytest.approx(2.0)
    ref = oracles.fig1c_polygon()
    for t in ANGLES:
        assert H.support(t) == pytest.approx(oracles.support(ref, t), abs=1e-6)


def test_hull_with_interior_point_is_unchanged(ex2):
    H = hull_with_points(ex2, [(0.1, 0.1)])
    for t in ANGLES:
        assert H.support(t) == pytest.approx(ex2.support(t), abs=1e-15)


def test_hull_with_two_points_matches_oracle():
    pts = [(1.5, 0.5), (-1.2, -1.2)]
    H = hull_with_points(disk(), pts)
    ref = oracles.hull_vertices(np.vstack([oracles.circle_points((0, 0), 1, 0, 2 * PI, 8192), pts]))
    for t in ANGLES:
        assert H.support(t) == pytest.approx(oracles.support(ref, t), abs=1e-6)
    assert census(H).as_tuple() == oracles.census_from_polygon(ref)


def test_cut_makes_chord(unit_disk, fig1d):
    C = intersect_halfplanes(unit_disk, [(3 * PI / 2, 0.5)])
    for t in ANGLES:
        assert C.support(t) == pytest.approx(fig1d.support(t), abs=1e-12)
    (e,) = C.edges
    ends = sorted([e.a.x, e.b.x])
    assert ends == pytest.approx([-SQRT3_2, SQRT3_2], abs=1e-12)


def test_cut_of_square_corner_matches_oracle(square):
    C = intersect_halfplanes(square, [(PI / 4, 1.5 / math.sqrt(2))])
    # x + y <= 1.5 clips the corner (1, 1) at (0.5, 1) and (1, 0.5)
    ref = [(1, 0.5), (0.5, 1), (-1, 1), (-1, -1), (1, -1)]
    for t in ANGLES:
        assert C.support(t) == pytest.approx(oracles.support(ref, t), abs=1e-12)
    assert census(C).as_tuple() == (0, 5, 0, 0, 5)


def test_inactive_halfplane_is_noop(ex2):
    C = intersect_halfplanes(ex2, [(0.0, 5.0)])
    for t in ANGLES:
        assert C.support(t) == pytest.approx(ex2.support(t), abs=1e-15)


def test_halfplane_must_contain_origin(ex2):
    with pytest.raises(ValueError):
        intersect_halfplanes(ex2, [(0.0, -0.1)])


def test_polar_of_hull_is_cut_of_polar():
    # (conv(K, p))° = K° ∩ {<p, y> <= 1}
    K = disk()
    p = (0.0, 2.0)
    lhs = polar(hull_with_points(K, [p]))
    rhs = intersect_halfplanes(polar(K), [(PI / 2, 0.5)])
    for t in ANGLES:
        assert lhs.support(t) == pytest.approx(rhs.support(t), abs=1e-9)
