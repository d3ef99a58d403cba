"""Faces, touching cones and the maps between them.

Everything here works on the countable special structure of a body (edges,
corners and non-exposed points) plus explicitly supplied smooth points.
Points are located on the boundary with the body's ``face_tol``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

from .body import PlanarBody
from .errors import NotAFace, NotATouchingCone, NotExposed, NotOnBoundary
from .faces import (
    Cone,
    ConeKind,
    Face,
    FaceKind,
    cone_eq,
    cone_intersection,
    cone_leq,
    face_eq,
    face_intersection,
    face_leq,
    point_on_segment,
)
from .geometry import TWO_PI, Point2, angles_equal, canonical, strictly_inside, wrap_pi
from .polarity import polar

SEGMENT = "SEGMENT"
INFINITE = math.inf
DEFAULT_SMOOTH_SAMPLES = 64


class ExtremalClass(Enum):
    SMOOTH_EXPOSED = "smooth_exposed"
    NON_EXPOSED = "non_exposed"
    POLYHEDRAL_CORNER = "polyhedral_corner"
    MIXED_CORNER = "mixed_corner"
    FREE_CORNER = "free_corner"


_CORNER_CLASS = {
    2: ExtremalClass.POLYHEDRAL_CORNER,
    1: ExtremalClass.MIXED_CORNER,
    0: ExtremalClass.FREE_CORNER,
}


@dataclass(frozen=True)
class Census:
    n: float
    p: float
    m: float
    f: float
    s: float

    def as_tuple(self) -> tuple:
        return (self.n, self.p, self.m, self.f, self.s)

    def __str__(self) -> str:
        def fmt(v):
            return "inf" if v == INFINITE else str(int(v))

        return " ".join(f"{k}={fmt(v)}" for k, v in zip("npmfs", self.as_tuple()))


@dataclass(frozen=True)
class IdentityReport:
    ok: bool
    checked: list[str] = field(default_factory=list)
    violations: list[str] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        if self.ok:
            return "all identities hold: " + "; ".join(self.checked)
        return "violated: " + "; ".join(self.violations)


@dataclass(frozen=True)
class Location:
    """Where a point sits relative to the boundary features."""

    kind: str  # "interior", "corner", "nonexposed", "edge" or "smooth"
    index: int = -1  # piece index for corners, junction index for edges
    normal: float = 0.0  # outward normal angle for rays


# ---------------------------------------------------------------- structure


def corner_class(body: PlanarBody, piece_index: int) -> ExtremalClass:
    n = len(body.pieces)
    edges = int(body.has_edge_at(piece_index)) + int(body.has_edge_at((piece_index + 1) % n))
    return _CORNER_CLASS[edges]


def corner_indices(body: PlanarBody) -> list[int]:
    return [i for i, p in enumerate(body.pieces) if p.is_corner]


def corner_cone(body: PlanarBody, piece_index: int) -> Cone:
    p = body.pieces[piece_index]
    return Cone.sector(p.start, p.end)


def edge_faces(body: PlanarBody) -> list[Face]:
    return [Face.segment(j.a, j.b) for j in body.edges]


def nonexposed_points(body: PlanarBody) -> list[tuple[Point2, int]]:
    """Edge endpoints lying on arcs, with the junction index of their edge."""
    n = len(body.pieces)
    out = []
    for j in body.edges:
        if not body.pieces[j.index - 1].is_corner:
            out.append((j.a, j.index))
        if not body.pieces[j.index % n].is_corner:
            out.append((j.b, j.index))
    return out


def special_faces(body: PlanarBody) -> list[tuple[Face, object]]:
    """Segments and countable extremal points, in boundary order."""
    out: list[tuple[Face, object]] = []
    for i, piece in enumerate(body.pieces):
        junc = body.junctions[i]
        if junc.is_edge(body.eps_len):
            if not body.pieces[i - 1].is_corner:
                out.append((Face.point(junc.a), ExtremalClass.NON_EXPOSED))
            out.append((Face.segment(junc.a, junc.b), SEGMENT))
            if not piece.is_corner:
                out.append((Face.point(junc.b), ExtremalClass.NON_EXPOSED))
        if piece.is_corner:
            out.append((Face.point(piece.kind.point), corner_class(body, i)))
    return out


def census(body: PlanarBody) -> Census:
    counts = {c: 0 for c in ExtremalClass}
    s = 0
    for _, label in special_faces(body):
        if label == SEGMENT:
            s += 1
        else:
            counts[label] += 1
    return Census(
        counts[ExtremalClass.NON_EXPOSED],
        counts[ExtremalClass.POLYHEDRAL_CORNER],
        counts[ExtremalClass.MIXED_CORNER],
        counts[ExtremalClass.FREE_CORNER],
        s,
    )


def smooth_points(body: PlanarBody, count: int = DEFAULT_SMOOTH_SAMPLES) -> list[tuple[Point2, float]]:
    """Deterministic smooth exposed points with their normal angles.

    Normals are taken on a uniform grid and kept only when they fall strictly
    inside an arc piece, away from junctions.
    """
    margin = 1e-6
    out = []
    for k in range(count):
        theta = (k + 0.5) * TWO_PI / count
        i, t = body.piece_index(theta)
        piece = body.pieces[i]
        if piece.is_corner or t - piece.start <= margin or piece.end - t <= margin:
            continue
        out.append((piece.contact(t), canonical(t)))
    return out


# ---------------------------------------------------------------- location


def locate(body: PlanarBody, x: Point2) -> Location:
    tol = body.face_tol
    r = x.norm()
    if r == 0.0:
        return Location("interior")
    phi = x.angle()
    R = body.radial(phi)
    if r < R - tol:
        return Location("interior")
    if r > R + tol:
        raise NotOnBoundary(f"point ({x.x:.9g},{x.y:.9g}) lies outside the body (radial {R:.9g})")
    for i in corner_indices(body):
        if x.close_to(body.pieces[i].kind.point, tol):
            return Location("corner", i)
    for j in body.edges:
        if x.close_to(j.a, tol) or x.close_to(j.b, tol):
            return Location("nonexposed", j.index, j.angle)
    for j in body.edges:
        if point_on_segment(x, j.a, j.b, tol):
            return Location("edge", j.index, j.angle)
    f = body.feature_at(phi)
    if f.kind == "arc":
        return Location("smooth", f.index, canonical(body.pieces[f.index].kind.normal_at(phi)))
    # numerically on a feature boundary that is neither a corner nor an edge point
    i, _ = body.piece_index(phi)
    raise NotOnBoundary(f"could not attribute ({x.x:.9g},{x.y:.9g}) to a boundary feature (piece {i})")


def normal_cone(body: PlanarBody, x: Point2) -> Cone:
    """Normal cone at ``x``; the origin cone for interior points."""
    loc = locate(body, x)
    if loc.kind == "interior":
        return Cone.origin()
    if loc.kind == "corner":
        return corner_cone(body, loc.index)
    return Cone.ray(loc.normal)


def is_face(body: PlanarBody, F: Face) -> bool:
    if F.kind in (FaceKind.EMPTY, FaceKind.WHOLE):
        return True
    if F.kind is FaceKind.SEGMENT:
        return any(face_eq(F, e, body.face_tol) for e in edge_faces(body))
    try:
        return locate(body, F.a).kind in ("corner", "nonexposed", "smooth")
    except NotOnBoundary:
        return False


# ---------------------------------------------------------------- cones


def is_touching_cone(body: PlanarBody, T: Cone) -> bool:
    if T.kind in (ConeKind.ORIGIN, ConeKind.FULL_PLANE):
        return True
    if T.kind is ConeKind.RAY:
        return not any(
            strictly_inside(T.start, body.pieces[i].start, body.pieces[i].end) for i in corner_indices(body)
        )
    return any(cone_eq(T, corner_cone(body, i)) for i in corner_indices(body))


def is_normal_cone(body: PlanarBody, T: Cone) -> bool:
    if not is_touching_cone(body, T):
        return False
    if T.kind is not ConeKind.RAY:
        return True
    for i in corner_indices(body):
        p = body.pieces[i]
        for boundary, junction in ((p.start, i), (p.end, (i + 1) % len(body.pieces))):
            if angles_equal(T.start, boundary) and not body.has_edge_at(junction):
                return False
    return True


def psi(body: PlanarBody, F: Face) -> Cone:
    if F.kind is FaceKind.EMPTY:
        return Cone.full()
    if F.kind is FaceKind.WHOLE:
        return Cone.origin()
    if F.kind is FaceKind.SEGMENT:
        for j in body.edges:
            if face_eq(F, Face.segment(j.a, j.b), body.face_tol):
                return Cone.ray(j.angle)
        raise NotAFace(f"{F} is not an edge of the body")
    try:
        loc = locate(body, F.a)
    except NotOnBoundary as exc:
        raise NotAFace(str(exc)) from exc
    if loc.kind == "interior":
        raise NotAFace(f"{F} is an interior point")
    if loc.kind == "edge":
        raise NotAFace(f"{F} lies in the relative interior of an edge")
    if loc.kind == "corner":
        return corner_cone(body, loc.index)
    return Cone.ray(loc.normal)


def phi(body: PlanarBody, T: Cone) -> Face:
    if T.kind is ConeKind.ORIGIN:
        return Face.whole()
    if T.kind is ConeKind.FULL_PLANE:
        return Face.empty()
    if not is_touching_cone(body, T):
        raise NotATouchingCone(f"{T} is not a touching cone of the body")
    if T.kind is ConeKind.RAY:
        return body.contact_set(T.start)
    return body.contact_set(T.midline)


def closure_exposed(body: PlanarBody, F: Face) -> Face:
    return phi(body, psi(body, F))


def closure_normal(body: PlanarBody, T: Cone) -> Cone:
    return psi(body, phi(body, T))


def is_exposed(body: PlanarBody, F: Face) -> bool:
    return is_face(body, F) and face_eq(closure_exposed(body, F), F, body.face_tol)


def coatoms_of_normal_cone(body: PlanarBody, N: Cone) -> list[Cone]:
    if N.kind is ConeKind.SECTOR:
        return N.boundary_rays()
    if N.kind is ConeKind.RAY:
        return [Cone.origin()]
    if N.kind is ConeKind.ORIGIN:
        return []
    raise ValueError("coatoms of the full plane are not enumerated")


def is_complete(body: PlanarBody, N: Cone) -> bool:
    """All coatoms of the touching-cone ideal below ``N`` are normal cones.

    Decided from the junction jumps next to the corner whose sector is ``N``.
    """
    if N.kind is not ConeKind.SECTOR:
        return True
    n = len(body.pieces)
    for i in corner_indices(body):
        if cone_eq(N, corner_cone(body, i)):
            return body.has_edge_at(i) and body.has_edge_at((i + 1) % n)
    raise NotATouchingCone(f"{N} is not the normal cone of a corner")


# ---------------------------------------------------------------- polarity maps


def pos_hull(F: Face) -> Cone:
    """Positive hull of a face of the polar body."""
    if F.kind is FaceKind.EMPTY:
        return Cone.origin()
    if F.kind is FaceKind.WHOLE:
        return Cone.full()
    if F.kind is FaceKind.POINT:
        return Cone.ray(F.a.angle())
    a, b = F.a.angle(), F.b.angle()
    d = wrap_pi(b - a)
    return Cone.sector(a, a + d) if d > 0 else Cone.sector(b, b - d)


def pos_inverse(polar_body: PlanarBody, T: Cone) -> Face:
    """The face of the polar body cut out by a touching cone: its boundary meets T."""
    if T.kind is ConeKind.ORIGIN:
        return Face.empty()
    if T.kind is ConeKind.FULL_PLANE:
        return Face.whole()
    if T.kind is ConeKind.RAY:
        x = polar_body.boundary_point(T.start)
        if locate(polar_body, x).kind == "edge":
            raise NotATouchingCone(f"{T} meets the relative interior of an edge of the polar")
        return Face.point(x)
    a = polar_body.boundary_point(T.start)
    b = polar_body.boundary_point(T.end)
    F = Face.segment(a, b)
    if not any(face_eq(F, e, polar_body.face_tol) for e in edge_faces(polar_body)):
        raise NotATouchingCone(f"{T} does not span an edge of the polar")
    for e in edge_faces(polar_body):
        if face_eq(F, e, polar_body.face_tol):
            return e
    return F  # pragma: no cover


def conjugate(body: PlanarBody, F: Face, polar_body: PlanarBody | None = None) -> Face:
    """{v in polar : <v, u> = 1 for all u in F}, evaluated point by point."""
    if polar_body is None:
        polar_body = polar(body)
    if F.kind is FaceKind.EMPTY:
        return Face.whole()
    if F.kind is FaceKind.WHOLE:
        return Face.empty()
    if F.kind is FaceKind.POINT:
        return polar_body.contact_set(F.a.angle())
    ca = polar_body.contact_set(F.a.angle())
    cb = polar_body.contact_set(F.b.angle())
    return face_intersection(ca, cb, polar_body.face_tol)


def conjugate_preimage(body: PlanarBody, G: Face, polar_body: PlanarBody | None = None) -> list[Face]:
    """All faces of ``body`` whose conjugate is the exposed face ``G`` of the polar."""
    if polar_body is None:
        polar_body = polar(body)
    if not is_exposed(polar_body, G):
        raise NotExposed(f"{G} is not an exposed face of the polar body")
    H = conjugate(polar_body, G, body)
    out = [H]
    if H.kind is FaceKind.SEGMENT:
        for x, _ in nonexposed_points(body):
            if any(x.close_to(e, body.face_tol) for e in H.extreme_points()):
                out.append(Face.point(x))
    return out


# ---------------------------------------------------------------- lattices


def face_meet(body: PlanarBody, F: Face, G: Face) -> Face:
    return face_intersection(F, G, body.face_tol)


def face_join(body: PlanarBody, F: Face, G: Face) -> Face:
    tol = body.face_tol
    if face_leq(F, G, tol):
        return G
    if face_leq(G, F, tol):
        return F
    for e in edge_faces(body):
        if face_leq(F, e, tol) and face_leq(G, e, tol):
            return e
    return Face.whole()


def cone_meet(body: PlanarBody, T: Cone, U: Cone) -> Cone:
    return cone_intersection(T, U)


def cone_join(body: PlanarBody, T: Cone, U: Cone) -> Cone:
    if cone_leq(T, U):
        return U
    if cone_leq(U, T):
        return T
    for i in corner_indices(body):
        S = corner_cone(body, i)
        if cone_leq(T, S) and cone_leq(U, S):
            return S
    return Cone.full()


def exposed_join(body: PlanarBody, F: Face, G: Face) -> Face:
    return closure_exposed(body, face_join(body, F, G))


def normal_join(body: PlanarBody, T: Cone, U: Cone) -> Cone:
    return closure_normal(body, cone_join(body, T, U))


# ---------------------------------------------------------------- identities


def check_pair_identities(cK: Census, cP: Census) -> IdentityReport:
    """Counting identities linking the census of a body and of its polar."""
    checked, bad = [], []

    def check(name, lhs, rhs):
        line = f"{name}: {lhs} = {rhs}"
        (checked if lhs == rhs else bad).append(line)

    for (a, b), mine, other in (((cK, cP), "", "°"), ((cP, cK), "°", "")):
        check(f"n{mine} = m{other}+2f{other}", a.n, b.m + 2 * b.f)
        check(f"s{mine} = p{other}+m{other}+f{other}", a.s, b.p + b.m + b.f)
        check(f"2s{mine} = n{mine}+2p{mine}+m{mine}", 2 * a.s, a.n + 2 * a.p + a.m)
    return IdentityReport(not bad, checked, bad)


def check_selfdual_identity(c: Census) -> IdentityReport:
    """s - p = n - f = (n + m)/2, compared after doubling to stay in integers."""
    checked, bad = [], []
    lhs, mid, rhs = 2 * (c.s - c.p), 2 * (c.n - c.f), c.n + c.m
    line = f"2(s-p) = 2(n-f) = n+m: {lhs} = {mid} = {rhs}"
    (checked if lhs == mid == rhs else bad).append(line)
    return IdentityReport(not bad, checked, bad)

