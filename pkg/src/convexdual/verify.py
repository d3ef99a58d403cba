"""Batch checks of the face/cone calculus over one body and its polar.

Each check produces a :class:`ClaimResult` with a stable identifier.  The
universally quantified claims run over the special structure (edges,
corners, non-exposed points, the empty face and the whole body) plus a fixed
number of sampled smooth exposed points.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import calculus as fc
from .body import PlanarBody
from .calculus import ExtremalClass
from .faces import Cone, Face, FaceKind, cone_eq, cone_leq, face_eq, face_leq
from .polarity import polar
from .selfdual import is_selfdual

DEFAULT_SAMPLES = fc.DEFAULT_SMOOTH_SAMPLES
PAIR_SAMPLES = 8


@dataclass(frozen=True)
class ClaimResult:
    claim: str
    passed: bool
    witness: str | None = None
    deviation: float | None = None

    def line(self) -> str:
        parts = ["CLAIM", self.claim, "PASS" if self.passed else "FAIL"]
        if self.witness:
            parts.append(f"[{self.witness}]")
        if self.deviation is not None:
            parts.append(f"[dev={self.deviation:.3e}]")
        return " ".join(parts)


@dataclass
class Report:
    entries: list[ClaimResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(e.passed for e in self.entries)

    @property
    def failures(self) -> list[ClaimResult]:
        return [e for e in self.entries if not e.passed]

    def add(self, claim: str, passed: bool, witness: str | None = None, deviation: float | None = None):
        self.entries.append(ClaimResult(claim, bool(passed), witness, deviation))

    def extend(self, other: Report) -> Report:
        self.entries.extend(other.entries)
        return self

    def get(self, claim: str) -> ClaimResult:
        for e in self.entries:
            if e.claim == claim:
                return e
        raise KeyError(claim)

    def sorted(self) -> Report:
        return Report(sorted(self.entries, key=lambda e: e.claim))

    def text(self) -> str:
        return "\n".join(e.line() for e in self.entries)

    def __str__(self) -> str:
        return self.text()


class _Check:
    """Collects the first counterexample of a universally quantified claim."""

    def __init__(self):
        self.witness: str | None = None
        self.deviation = 0.0

    def require(self, cond: bool, witness) -> None:
        if not cond and self.witness is None:
            self.witness = str(witness)

    def measure(self, dev: float) -> None:
        self.deviation = max(self.deviation, dev)

    @property
    def ok(self) -> bool:
        return self.witness is None


def _run(report: Report, claim: str, fn, *args) -> None:
    """Evaluate a claim; exceptions become failures naming the exception."""
    try:
        out = fn(*args)
    except Exception as exc:  # a crash while checking is a failed claim, not a crashed batch
        report.add(claim, False, f"{type(exc).__name__}: {exc}")
        return
    if isinstance(out, _Check):
        report.add(claim, out.ok, out.witness, out.deviation if out.deviation else None)
    else:
        passed, witness = out
        report.add(claim, passed, witness)


# ---------------------------------------------------------------- structure


def sample_faces(body: PlanarBody, sample_size: int = DEFAULT_SAMPLES) -> list[tuple[Face, object]]:
    out = [(Face.empty(), "EMPTY"), (Face.whole(), "WHOLE")]
    out += fc.special_faces(body)
    out += [(Face.point(x), ExtremalClass.SMOOTH_EXPOSED) for x, _ in fc.smooth_points(body, sample_size)]
    return out


def sample_cones(body: PlanarBody, sample_size: int = DEFAULT_SAMPLES) -> list[Cone]:
    cones = [Cone.origin(), Cone.full()]
    for i in fc.corner_indices(body):
        S = fc.corner_cone(body, i)
        cones += [S] + S.boundary_rays()
    cones += [Cone.ray(j.angle) for j in body.edges]
    cones += [Cone.ray(t) for _, t in fc.smooth_points(body, sample_size)]
    out: list[Cone] = []
    for c in cones:
        if not any(cone_eq(c, d) for d in out):
            out.append(c)
    return out


def _pairs(items):
    for i, a in enumerate(items):
        for b in items[i:]:
            yield a, b


# ---------------------------------------------------------------- galois


def verify_galois(body: PlanarBody, sample_size: int = DEFAULT_SAMPLES) -> Report:
    tol = body.face_tol
    labelled = sample_faces(body, sample_size)
    faces = [F for F, _ in labelled]
    cones = sample_cones(body, sample_size)
    psi = [fc.psi(body, F) for F in faces]
    phi = [fc.phi(body, T) for T in cones]
    report = Report()

    def antitone_psi():
        c = _Check()
        for i, F in enumerate(faces):
            for j, G in enumerate(faces):
                if face_leq(F, G, tol):
                    c.require(cone_leq(psi[j], psi[i]), f"{F} <= {G}")
        return c

    def antitone_phi():
        c = _Check()
        for i, T in enumerate(cones):
            for j, U in enumerate(cones):
                if cone_leq(T, U):
                    c.require(face_leq(phi[j], phi[i], tol), f"{T} <= {U}")
        return c

    def extensive_faces():
        c = _Check()
        for i, F in enumerate(faces):
            c.require(face_leq(F, fc.phi(body, psi[i]), tol), F)
        return c

    def extensive_cones():
        c = _Check()
        for i, T in enumerate(cones):
            c.require(cone_leq(T, fc.psi(body, phi[i])), T)
        return c

    def idempotent_faces():
        c = _Check()
        for F in faces:
            once = fc.closure_exposed(body, F)
            c.require(face_eq(fc.closure_exposed(body, once), once, tol), F)
        return c

    def idempotent_cones():
        c = _Check()
        for T in cones:
            once = fc.closure_normal(body, T)
            c.require(cone_eq(fc.closure_normal(body, once), once), T)
        return c

    def closed_faces():
        c = _Check()
        for F, label in labelled:
            fixed = face_eq(fc.closure_exposed(body, F), F, tol)
            c.require(fixed == (label is not ExtremalClass.NON_EXPOSED), F)
        return c

    def closed_cones():
        c = _Check()
        for T in cones:
            fixed = cone_eq(fc.closure_normal(body, T), T)
            c.require(fixed == fc.is_normal_cone(body, T), T)
        return c

    _run(report, "galois.antitone.psi", antitone_psi)
    _run(report, "galois.antitone.phi", antitone_phi)
    _run(report, "galois.extensive.faces", extensive_faces)
    _run(report, "galois.extensive.cones", extensive_cones)
    _run(report, "galois.idempotent.cl_E", idempotent_faces)
    _run(report, "galois.idempotent.cl_N", idempotent_cones)
    _run(report, "galois.closed.exposed", closed_faces)
    _run(report, "galois.closed.normal", closed_cones)
    return report


def extensivity_strict_faces(body: PlanarBody) -> list[Face]:
    """Special faces strictly smaller than their exposed closure."""
    tol = body.face_tol
    return [F for F, _ in fc.special_faces(body) if not face_eq(fc.closure_exposed(body, F), F, tol)]


# ---------------------------------------------------------------- morphisms


def _pair_faces(body: PlanarBody) -> list[Face]:
    faces = [Face.empty(), Face.whole()] + [F for F, _ in fc.special_faces(body)]
    faces += [Face.point(x) for x, _ in fc.smooth_points(body, PAIR_SAMPLES)]
    return faces


def psi_strictness_witnesses(body: PlanarBody) -> list[tuple[Face, Face]]:
    """Pairs with psi(F meet G) strictly above psi(F) join psi(G)."""
    faces = _pair_faces(body)
    out = []
    for F, G in _pairs(faces):
        lhs = fc.psi(body, fc.face_meet(body, F, G))
        rhs = fc.cone_join(body, fc.psi(body, F), fc.psi(body, G))
        if not cone_eq(lhs, rhs):
            out.append((F, G))
    return out


def verify_morphisms(body: PlanarBody) -> Report:
    tol = body.face_tol
    faces = _pair_faces(body)
    report = Report()

    def psi_join():
        c = _Check()
        for F, G in _pairs(faces):
            lhs = fc.psi(body, fc.face_join(body, F, G))
            rhs = fc.cone_meet(body, fc.psi(body, F), fc.psi(body, G))
            c.require(cone_eq(lhs, rhs), f"{F} , {G}: {lhs} vs {rhs}")
        return c

    def psi_meet():
        c = _Check()
        for F, G in _pairs(faces):
            lhs = fc.psi(body, fc.face_meet(body, F, G))
            rhs = fc.cone_join(body, fc.psi(body, F), fc.psi(body, G))
            c.require(cone_leq(rhs, lhs), f"{F} , {G}: {lhs} vs {rhs}")
        return c

    def psi_strict():
        shared = {}
        for x, j in fc.nonexposed_points(body):
            shared.setdefault(j, []).append(x)
        required = any(len(v) >= 2 for v in shared.values())
        witnesses = psi_strictness_witnesses(body)
        if witnesses:
            F, G = witnesses[0]
            return True, f"{F} , {G}"
        return (not required), ("no witness" if required else "vacuous")

    def cl_join():
        c = _Check()
        for F, G in _pairs(faces):
            lhs = fc.closure_exposed(body, fc.face_join(body, F, G))
            rhs = fc.exposed_join(body, fc.closure_exposed(body, F), fc.closure_exposed(body, G))
            c.require(face_eq(lhs, rhs, tol), f"{F} , {G}: {lhs} vs {rhs}")
        return c

    def cl_meet():
        c = _Check()
        for F, G in _pairs(faces):
            lhs = fc.closure_exposed(body, fc.face_meet(body, F, G))
            rhs = fc.face_meet(body, fc.closure_exposed(body, F), fc.closure_exposed(body, G))
            c.require(face_leq(lhs, rhs, tol), f"{F} , {G}: {lhs} vs {rhs}")
        return c

    _run(report, "morph.psi.join", psi_join)
    _run(report, "morph.psi.meet", psi_meet)
    _run(report, "morph.psi.strict", psi_strict)
    _run(report, "morph.cl_E.join", cl_join)
    _run(report, "morph.cl_E.meet", cl_meet)
    return report


# ---------------------------------------------------------------- diagram


def _diagram(report: Report, A: PlanarBody, B: PlanarBody, side: str, sample_size: int) -> None:
    """Checks for a body A whose polar is B."""
    tol_a, tol_b = A.face_tol, B.face_tol
    faces = [F for F, _ in sample_faces(A, sample_size)]

    def psi_pos_conj():
        c = _Check()
        for F in faces:
            c.require(cone_eq(fc.psi(A, F), fc.pos_hull(fc.conjugate(A, F, B))), F)
        return c

    def conj_phi_pos():
        c = _Check()
        for F in faces:
            c.require(face_eq(fc.conjugate(A, F, B), fc.phi(B, fc.pos_hull(F)), tol_b), F)
        return c

    def pos_closure():
        c = _Check()
        for F in faces:
            c.require(cone_eq(fc.pos_hull(fc.closure_exposed(A, F)), fc.closure_normal(B, fc.pos_hull(F))), F)
        return c

    def double_conj():
        c = _Check()
        for F in faces:
            twice = fc.conjugate(B, fc.conjugate(A, F, B), A)
            c.require(face_eq(twice, fc.closure_exposed(A, F), tol_a), F)
        return c

    def roundtrip():
        c = _Check()
        for F in faces:
            c.require(face_eq(fc.pos_inverse(A, fc.pos_hull(F)), F, tol_a), F)
        return c

    _run(report, f"diagram.{side}.psi_eq_pos_conj", psi_pos_conj)
    _run(report, f"diagram.{side}.conj_eq_phi_pos", conj_phi_pos)
    _run(report, f"diagram.{side}.pos_cl_E_eq_cl_N_pos", pos_closure)
    _run(report, f"diagram.{side}.double_conj_eq_cl_E", double_conj)
    _run(report, f"diagram.{side}.pos_inverse_roundtrip", roundtrip)


def verify_diagram(body: PlanarBody, sample_size: int = DEFAULT_SAMPLES, polar_body: PlanarBody | None = None) -> Report:
    P = polar(body) if polar_body is None else polar_body
    report = Report()
    _diagram(report, body, P, "K", sample_size)
    _diagram(report, P, body, "polar", sample_size)
    return report


# ---------------------------------------------------------------- conjugation


def verify_conjugation_theorems(
    body: PlanarBody, sample_size: int = DEFAULT_SAMPLES, polar_body: PlanarBody | None = None
) -> Report:
    P = polar(body) if polar_body is None else polar_body
    tol_k, tol_p = body.face_tol, P.face_tol
    report = Report()
    corners_p = [(P.pieces[i].kind.point, fc.corner_class(P, i)) for i in fc.corner_indices(P)]

    def corner_of(face: Face):
        if face.kind is not FaceKind.POINT:
            return None
        for k, (pt, _) in enumerate(corners_p):
            if face.a.close_to(pt, tol_p):
                return k
        return None

    def facet_corner():
        c = _Check()
        hit = []
        for e in fc.edge_faces(body):
            image = fc.conjugate(body, e, P)
            k = corner_of(image)
            c.require(k is not None, f"{e} -> {image}")
            if k is not None:
                hit.append(k)
                back = fc.conjugate(P, image, body)
                c.require(face_eq(back, e, tol_k), f"{image} -> {back}")
        c.require(len(hit) == len(set(hit)), "two facets share a conjugate corner")
        c.require(sorted(hit) == list(range(len(corners_p))), "some corner of the polar is not hit")
        return c

    def smooth():
        c = _Check()
        for x, _ in fc.smooth_points(body, sample_size):
            y = fc.conjugate(body, Face.point(x), P)
            c.require(y.kind is FaceKind.POINT, f"{x} -> {y}")
            if y.kind is not FaceKind.POINT:
                continue
            c.require(fc.locate(P, y.a).kind == "smooth", f"{x} -> {y} not smooth")
            back = fc.conjugate(P, y, body)
            c.require(back.kind is FaceKind.POINT, f"{y} -> {back}")
            if back.kind is FaceKind.POINT:
                c.measure(back.a.dist(x))
                c.require(back.a.close_to(x, tol_k), f"{x} -> {y} -> {back}")
        return c

    def nonexposed_image():
        c = _Check()
        images = set()
        for x, _ in fc.nonexposed_points(body):
            k = corner_of(fc.conjugate(body, Face.point(x), P))
            c.require(k is not None, x)
            if k is not None:
                images.add(k)
        incomplete = {
            k for k, i in enumerate(fc.corner_indices(P)) if not fc.is_complete(P, fc.corner_cone(P, i))
        }
        mixed_free = {
            k for k, (_, cls) in enumerate(corners_p)
            if cls in (ExtremalClass.MIXED_CORNER, ExtremalClass.FREE_CORNER)
        }
        c.require(images == incomplete, f"images {sorted(images)} vs incomplete {sorted(incomplete)}")
        c.require(incomplete == mixed_free, f"incomplete {sorted(incomplete)} vs mixed+free {sorted(mixed_free)}")
        return c

    def degrees():
        c = _Check()
        count = [0] * len(corners_p)
        for x, _ in fc.nonexposed_points(body):
            k = corner_of(fc.conjugate(body, Face.point(x), P))
            if k is not None:
                count[k] += 1
        expected = {ExtremalClass.MIXED_CORNER: 1, ExtremalClass.FREE_CORNER: 2, ExtremalClass.POLYHEDRAL_CORNER: 0}
        for k, (pt, cls) in enumerate(corners_p):
            c.require(count[k] == expected[cls], f"{cls.name} corner {pt} has degree {count[k]}")
        return c

    def preimage():
        c = _Check()
        candidates = [F for F, _ in sample_faces(body, sample_size)]
        targets = [Face.empty(), Face.whole()]
        targets += [F for F, label in fc.special_faces(P) if label is not ExtremalClass.NON_EXPOSED]
        for G in targets:
            got = fc.conjugate_preimage(body, G, P)
            brute = [F for F in candidates if face_eq(fc.conjugate(body, F, P), G, tol_p)]
            same = len(got) == len(brute) and all(any(face_eq(a, b, tol_k) for b in brute) for a in got)
            c.require(same, f"{G}: {[str(F) for F in got]} vs {[str(F) for F in brute]}")
        for y, _ in fc.smooth_points(P, PAIR_SAMPLES):
            got = fc.conjugate_preimage(body, Face.point(y), P)
            c.require(len(got) == 1 and face_eq(fc.conjugate(body, got[0], P), Face.point(y), tol_p), y)
        return c

    _run(report, "conj.facet_corner_bijection", facet_corner)
    _run(report, "conj.smooth_bijection", smooth)
    _run(report, "conj.nonexposed_image", nonexposed_image)
    _run(report, "conj.degrees", degrees)
    _run(report, "conj.preimage", preimage)
    return report


# ---------------------------------------------------------------- census


def verify_census(body: PlanarBody, polar_body: PlanarBody | None = None) -> Report:
    P = polar(body) if polar_body is None else polar_body
    report = Report()
    c, cp = fc.census(body), fc.census(P)

    def pair():
        r = fc.check_pair_identities(c, cp)
        return r.ok, f"K {c}; polar {cp}" + ("" if r.ok else "; " + "; ".join(r.violations))

    _run(report, "census.pair_identities", pair)
    selfdual, dev = is_selfdual(body)
    if selfdual:
        report.add("census.selfdual", True, None, dev)

        def boxed():
            r = fc.check_selfdual_identity(c)
            return r.ok, str(c)

        _run(report, "census.selfdual_identity", boxed)
        if c.n == 0:
            law = c.m == 0 and c.f == 0 and c.s == c.p and (c.s == 0 or (c.s >= 3 and c.s % 2 == 1))
            report.add("census.smooth_selfdual_law", law, str(c))
    return report


# ---------------------------------------------------------------- batch

SECTIONS = {
    "galois": lambda b, n, p: verify_galois(b, n),
    "morph": lambda b, n, p: verify_morphisms(b),
    "diagram": lambda b, n, p: verify_diagram(b, n, p),
    "conj": lambda b, n, p: verify_conjugation_theorems(b, n, p),
    "census": lambda b, n, p: verify_census(b, p),
}


def verify_all(body: PlanarBody, claims=None, sample_size: int = DEFAULT_SAMPLES) -> Report:
    """Run every section (or those whose claim ids start with a prefix in ``claims``)."""
    P = polar(body)
    report = Report()
    for name, fn in SECTIONS.items():
        if claims and not any(name.startswith(c) or c.startswith(name) for c in claims):
            continue
        part = fn(body, sample_size, P)
        if claims:
            part = Report([e for e in part.entries if any(e.claim.startswith(c) for c in claims)])
        report.extend(part)
    return report
