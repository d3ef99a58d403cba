import re

import pytest

from conftest import GALLERY_CASES, build, case_id
from convexdual import calculus
from convexdual.calculus import ExtremalClass, census
from convexdual.faces import FaceKind
from convexdual.polarity import hull_with_points
from convexdual.verify import (
    ClaimResult,
    Report,
    extensivity_strict_faces,
    psi_strictness_witnesses,
    sample_cones,
    sample_faces,
    verify_all,
)

LINE = re.compile(r"^CLAIM [a-zA-Z_.]+(?:\.[\w_]+)* (PASS|FAIL)( \[.*\])?( \[dev=[0-9.e+-]+\])?$")
SECTIONS = ("galois.", "morph.", "diagram.", "conj.", "census.")


@pytest.mark.parametrize("case", GALLERY_CASES, ids=case_id)
def test_gallery_passes_every_claim(case):
    report = verify_all(build(*case))
    assert report.ok, report.text()
    ids = {e.claim for e in report.entries}
    for prefix in SECTIONS:
        assert any(i.startswith(prefix) for i in ids)
    for line in report.text().splitlines():
        assert LINE.match(line), line


def test_claim_ids_are_stable(ex2):
    ids = [e.claim for e in verify_all(ex2).entries]
    for expected in (
        "galois.antitone.psi",
        "galois.extensive.faces",
        "galois.idempotent.cl_N",
        "morph.psi.strict",
        "diagram.K.psi_eq_pos_conj",
        "diagram.polar.double_conj_eq_cl_E",
        "conj.facet_corner_bijection",
        "conj.degrees",
        "conj.preimage",
        "census.pair_identities",
    ):
        assert expected in ids
    assert len(ids) == len(set(ids))


def test_claim_filter(ex2):
    report = verify_all(ex2, claims=["conj."])
    assert report.entries and all(e.claim.startswith("conj.") for e in report.entries)
    one = verify_all(ex2, claims=["census.pair_identities"])
    assert [e.claim for e in one.entries] == ["census.pair_identities"]


def test_selfdual_claims_only_for_selfdual_bodies(ex2):
    ids = {e.claim for e in verify_all(ex2, claims=["census"]).entries}
    assert "census.selfdual" not in ids
    ids = {e.claim for e in verify_all(build("fig2a"), claims=["census"]).entries}
    assert {"census.selfdual", "census.selfdual_identity"} <= ids
    ids = {e.claim for e in verify_all(build("infinite_truncated", [2]), claims=["census"]).entries}
    assert "census.smooth_selfdual_law" in ids


def test_line_format():
    assert ClaimResult("a.b", True).line() == "CLAIM a.b PASS"
    assert ClaimResult("a.b", False, "x").line() == "CLAIM a.b FAIL [x]"
    assert ClaimResult("a.b", True, None, 1.5e-12).line() == "CLAIM a.b PASS [dev=1.500e-12]"
    r = Report()
    r.add("z", True)
    r.add("a", False, "w")
    assert not r.ok and [e.claim for e in r.failures] == ["a"]
    assert r.sorted().text().splitlines()[0] == "CLAIM a FAIL [w]"
    with pytest.raises(KeyError):
        r.get("missing")


def test_strict_extensivity_witness(ex2, square):
    strict = extensivity_strict_faces(ex2)
    assert len(strict) == 2 and all(F.kind is FaceKind.POINT for F in strict)
    assert extensivity_strict_faces(square) == []


def test_psi_strictness_needs_two_nonexposed_points(ex2, fig1d):
    # the two endpoints of the edge of example 2 meet in the empty face
    assert psi_strictness_witnesses(ex2)
    assert verify_all(ex2, claims=["morph.psi.strict"]).get("morph.psi.strict").passed
    assert verify_all(fig1d, claims=["morph.psi.strict"]).get("morph.psi.strict").witness == "vacuous"


def test_samples_cover_special_structure(fig1c):
    faces = sample_faces(fig1c, 16)
    labels = [lab for _, lab in faces]
    assert labels.count(ExtremalClass.NON_EXPOSED) == 2
    assert labels.count(ExtremalClass.POLYHEDRAL_CORNER) == 1
    assert "EMPTY" in labels and "WHOLE" in labels
    cones = sample_cones(fig1c, 16)
    assert sum(c.kind.name == "SECTOR" for c in cones) == 1


# ---------------------------------------------------------------- mutation self-test


def test_misclassified_corners_are_caught(monkeypatch, fig1c):
    # the polar of fig1c has two mixed corners; call every corner polyhedral
    assert verify_all(fig1c).ok
    monkeypatch.setattr(calculus, "corner_class", lambda body, i: ExtremalClass.POLYHEDRAL_CORNER)
    report = verify_all(fig1c)
    failed = {e.claim for e in report.failures}
    assert "conj.degrees" in failed or "conj.nonexposed_image" in failed
    assert "census.pair_identities" in failed


def test_broken_conjugate_is_caught(monkeypatch, ex2):
    real = calculus.conjugate

    def swapped(body, F, polar_body=None):
        G = real(body, F, polar_body)
        return calculus.Face.whole() if G.kind is FaceKind.SEGMENT else G

    monkeypatch.setattr(calculus, "conjugate", swapped)
    failed = {e.claim for e in verify_all(build("fig1c")).failures}
    assert any(c.startswith("conj.") or c.startswith("diagram.") for c in failed)


def test_mutant_body_differs(ex2):
    mutant = hull_with_points(ex2, [(0.5, -0.6), (-0.5, -0.6)])
    assert census(mutant).as_tuple() != (2, 0, 0, 0, 1)
    assert verify_all(mutant).ok


def test_crash_inside_claim_is_a_failure(monkeypatch, ex2):
    def boom(*args, **kwargs):
        raise RuntimeError("kaput")

    monkeypatch.setattr(calculus, "check_pair_identities", boom)
    r = verify_all(ex2, claims=["census.pair_identities"]).get("census.pair_identities")
    assert not r.passed and "RuntimeError: kaput" in r.witness
