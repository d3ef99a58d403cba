"""Piecewise support-function representation of a planar convex body.

The normal circle [0, 2pi) is partitioned into consecutive intervals, each
carrying a :class:`~convexdual.pieces.SupportPiece`.  Edges are not stored:
an edge with outward normal ``beta`` is the jump between the contact points
of the two pieces meeting at the junction angle ``beta``.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass
from functools import cached_property

from .errors import InvalidBody
from .faces import Face
from .geometry import (
    EPS_ANG,
    EPS_CURV,
    EPS_INT,
    EPS_LEN_REL,
    TWO_PI,
    Point2,
    canonical,
    unit,
    unwrap_from,
)
from .pieces import Corner, SupportPiece, is_arc

ARC_CHECK_SAMPLES = 33
SUPPORT_CHECK_SAMPLES = 65


@dataclass(frozen=True)
class Junction:
    """The meeting of piece ``index - 1`` and piece ``index`` at ``angle``."""

    index: int
    angle: float
    a: Point2  # end contact of the previous piece
    b: Point2  # start contact of this piece
    length: float  # signed tangential jump

    def is_edge(self, eps_len: float) -> bool:
        return self.length > eps_len


@dataclass(frozen=True)
class Feature:
    """A boundary feature in counterclockwise order with its position-angle range."""

    kind: str  # "edge", "corner" or "arc"
    index: int  # junction index for edges, piece index otherwise
    pos_start: float
    pos_end: float


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    code: str = "OK"
    piece_index: int | None = None
    defect: float = 0.0
    message: str = ""

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        if self.ok:
            return "OK"
        return f"{self.code} at piece {self.piece_index}: {self.message} (defect {self.defect:.3g})"


@dataclass(frozen=True, eq=False)
class PlanarBody:
    pieces: tuple[SupportPiece, ...]
    tag: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "pieces", tuple(self.pieces))

    @cached_property
    def starts(self) -> list[float]:
        return [p.start for p in self.pieces]

    @cached_property
    def scale(self) -> float:
        """Largest norm among piece end contacts; a proxy for the circumradius."""
        r = 0.0
        for p in self.pieces:
            r = max(r, p.start_contact().norm(), p.end_contact().norm())
            if is_arc(p.kind):
                r = max(r, p.contact(0.5 * (p.start + p.end)).norm())
        return r

    @property
    def eps_len(self) -> float:
        return EPS_LEN_REL * 2.0 * max(self.scale, 1e-300)

    @property
    def face_tol(self) -> float:
        """Tolerance for identifying faces computed along different routes."""
        return 1e-7 * max(self.scale, 1.0)

    def piece_index(self, theta: float) -> tuple[int, float]:
        """Index of the piece containing ``theta`` and the unwrapped angle."""
        t = unwrap_from(theta, self.starts[0])
        i = bisect.bisect_right(self.starts, t) - 1
        return max(i, 0), t

    def support(self, theta: float) -> float:
        i, t = self.piece_index(theta)
        return self.pieces[i].support(t)

    @cached_property
    def junctions(self) -> list[Junction]:
        out = []
        n = len(self.pieces)
        for j in range(n):
            prev, cur = self.pieces[j - 1], self.pieces[j]
            a = prev.end_contact()
            b = cur.start_contact()
            length = (b - a).dot(unit(cur.start + math.pi / 2))
            out.append(Junction(j, canonical(cur.start), a, b, length))
        return out

    @cached_property
    def edges(self) -> list[Junction]:
        eps = self.eps_len
        return [j for j in self.junctions if j.is_edge(eps)]

    def has_edge_at(self, junction_index: int) -> bool:
        return self.junctions[junction_index % len(self.pieces)].is_edge(self.eps_len)

    @cached_property
    def features(self) -> list[Feature]:
        raw: list[tuple[str, int, list[Point2]]] = []
        for j, piece in enumerate(self.pieces):
            junc = self.junctions[j]
            if junc.is_edge(self.eps_len):
                raw.append(("edge", j, [junc.a, junc.b]))
            if piece.is_corner:
                raw.append(("corner", j, [piece.kind.point]))
            else:
                ts = [piece.start + k * piece.width / 9.0 for k in range(10)]
                ts[-1] = piece.end
                raw.append(("arc", j, [piece.contact(t) for t in ts]))
        out = []
        prev = raw[0][2][0].angle()
        for kind, idx, pts in raw:
            angles = []
            for p in pts:
                d = canonical(p.angle() - prev)
                if d > TWO_PI - 1e-9:
                    d = 0.0
                prev = prev + d
                angles.append(prev)
            out.append(Feature(kind, idx, angles[0], angles[-1]))
        return out

    @cached_property
    def _feature_starts(self) -> list[float]:
        return [f.pos_start for f in self.features]

    def feature_at(self, phi: float) -> Feature:
        """The boundary feature hit by the ray at position angle ``phi``."""
        feats = self.features
        p = unwrap_from(phi, feats[0].pos_start)
        i = bisect.bisect_right(self._feature_starts, p) - 1
        i = max(i, 0)
        # corners have zero width; prefer a feature that truly spans p
        for k in (i, i - 1, i + 1):
            f = feats[k % len(feats)]
            if f.pos_start - 1e-12 <= p <= f.pos_end + 1e-12:
                return f
        return feats[i]

    def radial(self, phi: float) -> float:
        f = self.feature_at(phi)
        if f.kind == "edge":
            junc = self.junctions[f.index]
            h = self.pieces[f.index].support(self.pieces[f.index].start)
            return h / math.cos(phi - junc.angle)
        piece = self.pieces[f.index]
        if f.kind == "corner":
            return piece.kind.point.norm()
        return piece.kind.radial(phi)

    def boundary_point(self, phi: float) -> Point2:
        return unit(phi) * self.radial(phi)

    def contact_set(self, theta: float) -> Face:
        i, t = self.piece_index(theta)
        n = len(self.pieces)
        piece = self.pieces[i]
        junction = None
        if t - piece.start <= EPS_ANG:
            junction = i
        elif piece.end - t <= EPS_ANG:
            junction = (i + 1) % n
        if junction is not None:
            junc = self.junctions[junction]
            if junc.is_edge(self.eps_len):
                return Face.segment(junc.a, junc.b)
            return Face.point(self.pieces[junction].start_contact())
        return Face.point(piece.contact(t))

    def __repr__(self) -> str:
        kinds = ", ".join(
            f"{type(p.kind).__name__}[{p.start:.4f},{p.end:.4f}]" for p in self.pieces
        )
        return f"PlanarBody({kinds}{', tag=' + repr(self.tag) if self.tag else ''})"


def support_at(body: PlanarBody, theta: float) -> float:
    return body.support(theta)


def radial_at(body: PlanarBody, theta: float) -> float:
    return body.radial(theta)


def contact_set(body: PlanarBody, theta: float) -> Face:
    return body.contact_set(theta)


def _pieces_scale(pieces) -> float:
    return max(max(p.start_contact().norm(), p.end_contact().norm()) for p in pieces)


def validate(body: PlanarBody) -> ValidationReport:
    """Check the standing hypotheses; report the first violation found."""
    pieces = body.pieces
    n = len(pieces)
    if n == 0:
        return ValidationReport(False, "INTERVAL_GAP", None, TWO_PI, "no pieces")
    total = 0.0
    for i, p in enumerate(pieces):
        if not p.width > 0.0:
            return ValidationReport(False, "INTERVAL_GAP", i, p.width, "piece has non-positive width")
        total += p.width
        nxt = pieces[(i + 1) % n]
        gap = abs(canonical(nxt.start - p.end + math.pi) - math.pi)
        if gap > EPS_ANG:
            return ValidationReport(False, "INTERVAL_GAP", i, gap, "pieces are not consecutive")
    if abs(total - TWO_PI) > EPS_ANG * max(n, 1):
        return ValidationReport(False, "INTERVAL_GAP", None, total - TWO_PI, "widths do not sum to 2pi")

    eps_len = EPS_LEN_REL * 2.0 * max(_pieces_scale(pieces), 1e-300)
    for j in range(n):
        prev, cur = pieces[j - 1], pieces[j]
        if n > 1 and prev.is_corner and cur.is_corner and prev.kind.point.close_to(cur.kind.point, eps_len):
            return ValidationReport(
                False, "NONCONVEX_JUMP", j, 0.0,
                "consecutive corners share a point (normalization merges them)",
            )
        a, b = prev.end_contact(), cur.start_contact()
        normal_defect = (b - a).dot(unit(cur.start))
        tangential = (b - a).dot(unit(cur.start + math.pi / 2))
        if abs(normal_defect) > eps_len:
            return ValidationReport(False, "NONCONVEX_JUMP", j, normal_defect, "support is discontinuous at junction")
        if tangential < -eps_len:
            return ValidationReport(False, "NONCONVEX_JUMP", j, tangential, "contact points move clockwise")

    for i, p in enumerate(pieces):
        if p.is_corner:
            continue
        for k in range(ARC_CHECK_SAMPLES):
            t = p.start + p.width * k / (ARC_CHECK_SAMPLES - 1)
            rc = p.kind.curvature_radius(t)
            if not rc > EPS_CURV:
                return ValidationReport(
                    False, "ARC_NOT_STRICTLY_CONVEX", i, rc, f"h + h'' = {rc:.3g} at angle {t:.6g}"
                )

    for i, p in enumerate(pieces):
        m = _min_support(p)
        if not m > EPS_INT:
            return ValidationReport(False, "ORIGIN_NOT_INTERIOR", i, m, f"support minimum {m:.6g} <= {EPS_INT}")
    return ValidationReport(True)


def _min_support(piece: SupportPiece) -> float:
    if piece.is_corner:
        p = piece.kind.point
        vals = [piece.support(piece.start), piece.support(piece.end)]
        if p.norm() > 0.0 and _angle_in(p.angle() + math.pi, piece.start, piece.end):
            vals.append(-p.norm())
        return min(vals)
    return min(
        piece.support(piece.start + piece.width * k / (SUPPORT_CHECK_SAMPLES - 1))
        for k in range(SUPPORT_CHECK_SAMPLES)
    )


def _angle_in(theta: float, start: float, end: float) -> bool:
    return unwrap_from(theta, start) <= end


def normalize(pieces, eps_ang: float = EPS_ANG) -> tuple[SupportPiece, ...]:
    """Canonical piece list: chained intervals, no slivers, merged duplicates.

    The first piece starts in [0, 2pi).  Zero-width pieces are dropped,
    consecutive corners at one point and consecutive pieces of one arc are
    merged (also across the wrap-around).
    """
    pieces = list(pieces)
    if not pieces:
        return ()
    chained = [pieces[0].shifted(canonical(pieces[0].start) - pieces[0].start)]
    for p in pieces[1:]:
        prev_end = chained[-1].end
        delta = unwrap_from(p.start, prev_end - math.pi) - p.start
        chained.append(p.shifted(delta))

    kept = [p for p in chained if p.width > eps_ang]
    if not kept:
        raise ValueError("all pieces have zero width")
    # close the gaps left by dropped slivers; larger gaps are left for validate()
    closed = []
    for i, p in enumerate(kept):
        prev_end = kept[-1].end - TWO_PI if i == 0 else closed[-1].end
        start = prev_end if abs(prev_end - p.start) <= 4 * eps_ang else p.start
        closed.append(SupportPiece(p.kind, start, p.end))

    scale = max(_pieces_scale(closed), 1e-300)
    tol = EPS_LEN_REL * 2.0 * scale

    def mergeable(a: SupportPiece, b: SupportPiece) -> bool:
        if a.is_corner and b.is_corner:
            return a.kind.point.close_to(b.kind.point, tol)
        if a.is_corner or b.is_corner:
            return False
        return a.kind is b.kind or a.kind == b.kind

    merged: list[SupportPiece] = []
    for p in closed:
        if merged and mergeable(merged[-1], p):
            last = merged.pop()
            p = SupportPiece(last.kind, last.start, p.end)
        merged.append(p)
    if len(merged) > 1 and mergeable(merged[-1], merged[0]):
        last = merged.pop()
        first = merged.pop(0)
        merged.append(SupportPiece(last.kind, last.start, first.end + TWO_PI))
    # restore a canonical first start
    k = min(range(len(merged)), key=lambda i: canonical(merged[i].start))
    merged = merged[k:] + [p.shifted(TWO_PI) for p in merged[:k]]
    shift = canonical(merged[0].start) - merged[0].start
    return tuple(p.shifted(shift) for p in merged)


def make_body(pieces, tag: str | None = None) -> PlanarBody:
    """Normalize and validate; raise :class:`InvalidBody` on failure."""
    body = PlanarBody(normalize(pieces), tag)
    report = validate(body)
    if not report:
        raise InvalidBody(report)
    return body


def transform(body: PlanarBody, rotation: float | None = None, reflect: bool = False) -> PlanarBody:
    """Rotate by ``rotation`` radians, or reflect through the origin."""
    if reflect and rotation is not None:
        raise ValueError("choose either a rotation or the point reflection")
    if reflect:
        pieces = [SupportPiece(p.kind.reflected(), p.start + math.pi, p.end + math.pi) for p in body.pieces]
        tag = f"reflect-of:{body.tag}" if body.tag else None
    else:
        alpha = rotation or 0.0
        pieces = [SupportPiece(p.kind.rotated(alpha), p.start + alpha, p.end + alpha) for p in body.pieces]
        tag = f"rotate-of:{body.tag}" if body.tag else None
    return make_body(pieces, tag)


def rotate(body: PlanarBody, alpha: float) -> PlanarBody:
    return transform(body, rotation=alpha)


def reflect(body: PlanarBody) -> PlanarBody:
    return transform(body, reflect=True)


def restrict(body: PlanarBody, start: float, end: float) -> list[SupportPiece]:
    """Pieces clipped to the normal interval [start, end] (unwrapped, width <= 2pi)."""
    out = []
    for p in body.pieces:
        for shift in (-TWO_PI, 0.0, TWO_PI, 2 * TWO_PI):
            a, b = p.start + shift, p.end + shift
            lo, hi = max(a, start), min(b, end)
            if hi - lo > 0.0:
                out.append(SupportPiece(p.kind, lo, hi))
    out.sort(key=lambda q: q.start)
    return out


def disk(radius: float = 1.0, center: Point2 = Point2(0.0, 0.0)) -> PlanarBody:
    from .pieces import CircularArc

    return make_body([SupportPiece(CircularArc(center, radius), 0.0, TWO_PI)], tag="disk")


def polygon(vertices) -> PlanarBody:
    """The convex hull of a finite point set, as corner pieces."""
    import numpy as np
    from scipy.spatial import ConvexHull

    pts = np.asarray([[float(v[0]), float(v[1])] for v in vertices])
    if len(pts) < 3:
        raise InvalidBody(ValidationReport(False, "ORIGIN_NOT_INTERIOR", None, 0.0, "fewer than 3 vertices"))
    hull = ConvexHull(pts)
    verts = [Point2(float(pts[i][0]), float(pts[i][1])) for i in hull.vertices]  # counterclockwise in 2-D
    k = len(verts)
    normals = []
    for i in range(k):
        a, b = verts[i], verts[(i + 1) % k]
        d = b - a
        normals.append(canonical(math.atan2(-d.x, d.y)))  # outward normal of edge a->b
    pieces = []
    for i in range(k):
        lo = normals[i - 1]
        hi = unwrap_from(normals[i], lo)
        pieces.append(SupportPiece(Corner(verts[i]), lo, hi))
    return make_body(pieces, tag="polygon")
