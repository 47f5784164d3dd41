#!/usr/bin/env python3
"""
Test Depth Lab
Presented rings, regular sequence scans, phsop heights, certificates and the cmdef pipeline
"""

import os
import random
import sys
from functools import lru_cache

import pytest

sys.path.insert(0, os.path.join(os.path.dirname(__file__), ".."))

from cmdef_lab.actions import GroupKind
from cmdef_lab.config import settings
from cmdef_lab.depth_lab import (
    BUCHSBAUM_NOTE,
    AnnihilatorRecord,
    CertificateStatus,
    DepthCertificate,
    DefectPremises,
    HeightRecordModel,
    PresentedRing,
    cmdef_pipeline,
    is_phsop,
    phsop_record,
    replay_regular,
    scan_reg,
    verify_certificate,
)
from cmdef_lab.errors import CertificateFormatError, CertificationError
from cmdef_lab.groebner import Ideal
from cmdef_lab.poly_core import CoefficientField, Polynomial, RingContext, make_variables
from cmdef_lab.poly_core.text_format import parse_polynomial

RNG_SEED = 4411
INSTANCES = 40

QQ = CoefficientField.rationals()
F3 = CoefficientField.prime(3)


def cross_ring():
    """Q[x,y,z]/(xy)"""
    ring = RingContext.create(["x", "y", "z"], QQ)
    v = make_variables(ring)
    return PresentedRing(ring, Ideal(ring, [v["x"] * v["y"]])), v


def random_form(rng, ring, degree):
    """Nonzero homogeneous form over F3 with a few terms"""
    while True:
        terms = {}
        for _ in range(rng.randint(1, 3)):
            cut = sorted(rng.randint(0, degree) for _ in range(ring.nvars - 1))
            exps = tuple(b - a for a, b in zip([0] + cut, cut + [degree]))
            terms[exps] = rng.randint(1, 2)
        f = Polynomial(ring, terms)
        if f:
            return f


def test_presented_from_generators():
    print("🧪 Testing presented rings")
    ring = RingContext.create(["x", "y"], QQ)
    v = make_variables(ring)
    presented = PresentedRing.from_generators([v["x"] ** 2, v["x"] * v["y"], v["y"] ** 2])
    t = make_variables(presented.poly_ring)
    assert presented.relations.equals(Ideal(presented.poly_ring, [t["T1"] * t["T3"] - t["T2"] ** 2]))
    assert presented.dim == 2
    h = v["x"] ** 2 * v["y"] ** 2 + v["x"] * v["y"] ** 3
    assert presented.from_tags(presented.to_tags(h)) == h
    with pytest.raises(CertificationError):
        presented.to_tags(v["x"])

    assert PresentedRing.polynomial_ring(ring).dim == 2
    with pytest.raises(ValueError):
        PresentedRing.polynomial_ring(ring).to_tags(v["x"])
    with pytest.raises(ValueError):
        PresentedRing(presented.poly_ring, presented.relations, {"T1": v["x"] ** 2})


def test_presented_rejects_false_relations():
    ring = RingContext.create(["x"], QQ)
    x = Polynomial.variable(ring, "x")
    tags = RingContext.create(["T1", "T2"], QQ, [2, 3])
    t = make_variables(tags)
    with pytest.raises(CertificationError):
        PresentedRing(tags, Ideal(tags, [t["T1"] ** 3 + t["T2"] ** 2]), {"T1": x ** 2, "T2": x ** 3})
    assert PresentedRing(tags, Ideal(tags, [t["T1"] ** 3 - t["T2"] ** 2]), {"T1": x ** 2, "T2": x ** 3}).dim == 1


def test_scan_reg_skips_zero_divisors():
    """In Q[x,y,z]/(xy) neither x nor y is regular, x + y and z are"""
    presented, v = cross_ring()
    result = scan_reg(presented, [v["x"], v["y"], v["x"] + v["y"], v["z"]])
    assert result.positions == [2, 3]
    assert result.length == 2
    assert result.trimmed == 0
    assert replay_regular(presented, result.sequence)
    assert not replay_regular(presented, [v["x"]])
    assert replay_regular(presented, [])


def test_scan_reg_trims_units():
    """A unit in the test sequence forces trailing elements out until the ideal is proper"""
    ring = RingContext.create(["x", "y"], QQ)
    v = make_variables(ring)
    presented = PresentedRing.polynomial_ring(ring)
    result = scan_reg(presented, [v["x"], Polynomial.constant(ring, 1), v["y"]])
    assert result.positions == [0]
    assert result.trimmed == 2
    assert scan_reg(PresentedRing(ring, Ideal.unit(ring)), [v["x"]]).length == 0


def test_scan_reg_is_monotone():
    """
    Random graded quotients of F3[x,y,z]: appending elements never shortens
    the scan, and a scan that starts with an accepted sequence keeps all of it
    """
    print("🧪 Testing scan_reg monotonicity")
    rng = random.Random(RNG_SEED)
    ring = RingContext.create(["x", "y", "z"], F3)
    for _ in range(INSTANCES):
        relations = [random_form(rng, ring, 2) for _ in range(rng.randint(1, 2))]
        presented = PresentedRing(ring, Ideal(ring, relations))
        sequence = [random_form(rng, ring, rng.randint(1, 2)) for _ in range(3)]
        extra = [random_form(rng, ring, 1) for _ in range(2)]

        first = scan_reg(presented, sequence)
        longer = scan_reg(presented, sequence + extra)
        assert longer.length >= first.length
        assert longer.positions[: first.length] == first.positions
        assert replay_regular(presented, first.sequence)

        restarted = scan_reg(presented, first.sequence + extra)
        assert restarted.length >= first.length
        assert restarted.positions[: first.length] == list(range(first.length))
    print(f"   ✅ {INSTANCES} random quotients checked")


def test_phsop_heights():
    presented, v = cross_ring()
    assert is_phsop(presented, [v["z"]])
    assert is_phsop(presented, [v["z"], v["x"] + v["y"]])
    assert not is_phsop(presented, [v["x"]])
    record = phsop_record(presented, [v["x"]])
    assert (record.dim_ring, record.dim_cut, record.height) == (2, 2, 0)
    with pytest.raises(ValueError):
        phsop_record(presented, [v["x"] + 1])


def test_premise_bounds():
    phsop = HeightRecordModel(elements=["T1", "T2", "T3"], dim_ring=7, dim_cut=4)
    premises = DefectPremises(cocycle="t*X0", nontrivial=True, annihilators=[], coprime=True, phsop=phsop)
    assert not premises.certified
    assert premises.cmdef_lower == 0

    premises.annihilators = [AnnihilatorRecord(label=f"a{i}", annihilator="X1", witness="X0*Y1") for i in range(3)]
    assert premises.certified
    assert premises.cmdef_lower == 1
    premises.coprime = False
    assert premises.cmdef_lower == 0


def small_certificate(group=GroupKind.GA):
    if group is GroupKind.SL2:
        return cmdef_pipeline(2, 2, GroupKind.SL2)
    return cmdef_pipeline(2, 1)


@lru_cache(maxsize=1)
def two_copy_certificate():
    return cmdef_pipeline(2, 2)


def reloaded(certificate):
    """Write and re-read, so the digest matches the edited payload"""
    return DepthCertificate.from_report(certificate.to_report())


def test_pipeline_single_copy():
    """G_a(2,1) is a polynomial ring: depth 3 and cmdef 0"""
    print("🧪 Testing the cmdef pipeline on G_a(2,1)")
    certificate = small_certificate()
    assert certificate.status is CertificateStatus.COMPLETE
    assert certificate.dim == 3 == certificate.expected_dim
    assert certificate.relations == []
    assert len(certificate.generator_images) == 3
    assert certificate.accepted_positions == [0, 1, 2]
    assert certificate.lower_bound_depth == 3
    assert certificate.cmdef_interval == (0, 0)
    assert certificate.exact
    assert certificate.premises is None
    assert BUCHSBAUM_NOTE not in certificate.notes
    assert verify_certificate(certificate) == []


def test_pipeline_sl2_through_roberts():
    certificate = small_certificate(GroupKind.SL2)
    assert certificate.compute_copies == 1
    assert certificate.dim == 3
    assert len(certificate.reported_generators) == 3
    assert certificate.cmdef_interval == (0, 0)
    with pytest.raises(ValueError):
        cmdef_pipeline(2, 1, GroupKind.SL2)
    with pytest.raises(ValueError):
        cmdef_pipeline(2, 0)


def test_pipeline_two_copies():
    """G_a(2,2): cocycle premises certified, cmdef 0"""
    print("🧪 Testing the cmdef pipeline on G_a(2,2)")
    certificate = two_copy_certificate()
    assert certificate.dim == 5
    assert len(certificate.generator_images) == 6
    assert len(certificate.relations) == 1
    assert certificate.premises is not None and certificate.premises.nontrivial
    assert certificate.premises.coprime
    assert certificate.lower_bound_depth == 5
    assert certificate.cmdef_interval == (0, 0)
    assert verify_certificate(reloaded(certificate)) == []


def test_pipeline_two_copies_p3():
    """G_a(3,2) is Cohen-Macaulay as well"""
    certificate = cmdef_pipeline(3, 2)
    assert certificate.dim == 5
    assert len(certificate.generator_images) == 6
    assert certificate.lower_bound_depth == 5
    assert certificate.cmdef_interval == (0, 0)
    assert verify_certificate(certificate) == []


def test_certificate_report_round_trip():
    print("🧪 Testing certificate reports")
    certificate = small_certificate()
    text = certificate.to_report()
    lines = text.splitlines()
    assert lines[0] == "# cmdef_lab depth certificate"
    assert "instance = ga(2,1)" in lines
    assert "cmdef = 0" in lines
    assert lines[-1].startswith("sha256 ")
    loaded = DepthCertificate.from_report(text)
    assert loaded == certificate
    assert verify_certificate(loaded) == []


def test_certificate_edits_are_rejected():
    text = small_certificate().to_report()
    with pytest.raises(CertificateFormatError):
        DepthCertificate.from_report(text.replace("depth >= 3", "depth >= 4"))
    with pytest.raises(CertificateFormatError):
        DepthCertificate.from_report(text.replace('"dim": 3', '"dim": 4'))
    with pytest.raises(CertificateFormatError):
        DepthCertificate.from_report(text.replace("sha256 ", "sha256 0"))
    with pytest.raises(CertificateFormatError):
        DepthCertificate.from_report("# cmdef_lab depth certificate\n")


def witness_texts(certificate):
    """Every polynomial the certificate records"""
    texts = list(certificate.generator_images.values())
    texts += certificate.relations + certificate.test_sequence + certificate.regular_sequence
    premises = certificate.premises
    texts.append(premises.cocycle)
    for record in premises.annihilators:
        texts += [record.annihilator, record.witness]
    texts += premises.phsop.elements
    return texts


def test_single_byte_edits_are_rejected():
    """Changing any one character inside a recorded polynomial breaks the digest"""
    print("🧪 Testing single-byte edits of certificate witnesses")
    certificate = two_copy_certificate()
    text = certificate.to_report()
    body_start = text.index("\n---\n")
    rng = random.Random(RNG_SEED + 1)
    checked = 0
    for witness in witness_texts(certificate):
        start = text.index(f'"{witness}"', body_start) + 1
        offset = start + rng.randrange(len(witness))
        replacement = "Z" if text[offset] != "Z" else "W"
        edited = text[:offset] + replacement + text[offset + 1:]
        with pytest.raises(CertificateFormatError):
            DepthCertificate.from_report(edited)
        checked += 1
    assert checked >= 10


def test_false_claims_fail_verification():
    certificate = small_certificate()
    wrong_dim = certificate.model_copy(update={"dim": 4})
    assert any("dimension" in f for f in verify_certificate(wrong_dim))
    repeated = certificate.model_copy(update={"regular_sequence": certificate.regular_sequence + certificate.regular_sequence[:1]})
    failures = verify_certificate(repeated)
    assert any("regular sequence" in f for f in failures)
    assert any("accepted positions" in f for f in failures)
    wrong_instance = certificate.model_copy(update={"expected_dim": 99, "compute_copies": 2})
    failures = verify_certificate(wrong_instance)
    assert any("expected dimension of the instance is 3" in f for f in failures)
    assert any("computed on 1 copies" in f for f in failures)


def test_dropped_relation_fails_verification():
    """A rehashed certificate without the relation of G_a(2,2) presents a ring of the wrong dimension"""
    print("🧪 Testing certificates with a missing relation")
    certificate = two_copy_certificate()
    forged = reloaded(certificate.model_copy(update={"relations": []}, deep=True))
    failures = verify_certificate(forged)
    assert any("relation ideal" in f for f in failures)
    assert any("dimension replay gives 6" in f for f in failures)

    consistent = certificate.model_copy(update={"relations": [], "dim": 6}, deep=True)
    ring = consistent.presented_ring()
    record = phsop_record(ring, [parse_polynomial(e, ring.poly_ring) for e in consistent.premises.phsop.elements])
    consistent.premises.phsop.dim_ring, consistent.premises.phsop.dim_cut = record.dim_ring, record.dim_cut
    failures = verify_certificate(reloaded(consistent))
    assert not any("phsop dimensions" in f for f in failures)
    assert any("relation ideal" in f for f in failures)
    assert any("not the invariant ring dimension 5" in f for f in failures)


def test_edited_witnesses_fail_verification():
    certificate = two_copy_certificate()

    premises = certificate.premises.model_copy(deep=True)
    premises.annihilators[0].witness = f"{premises.annihilators[0].witness} + Y1"
    failures = verify_certificate(reloaded(certificate.model_copy(update={"premises": premises}, deep=True)))
    assert any("witness for" in f for f in failures)

    premises = certificate.premises.model_copy(deep=True)
    premises.phsop.elements[0] = f"{premises.phsop.elements[0]} + T1"
    failures = verify_certificate(reloaded(certificate.model_copy(update={"premises": premises}, deep=True)))
    assert any("phsop elements" in f for f in failures)

    regular = ["1 + " + certificate.regular_sequence[0]] + certificate.regular_sequence[1:]
    failures = verify_certificate(reloaded(certificate.model_copy(update={"regular_sequence": regular}, deep=True)))
    assert any("constant term" in f for f in failures)

    target = certificate.compute_action().target
    x1 = Polynomial.variable(target, "X1")
    name = next(n for n, t in certificate.generator_images.items() if parse_polynomial(t, target) == x1)
    images = dict(certificate.generator_images, **{name: "Y1"})
    failures = verify_certificate(reloaded(certificate.model_copy(update={"generator_images": images}, deep=True)))
    assert f"generator image {name} is not invariant" in failures


def test_budget_gives_partial_certificate():
    certificate = cmdef_pipeline(2, 1, budget=1e-9)
    assert certificate.status is CertificateStatus.PARTIAL
    assert certificate.aborted_stage in {"COCYCLE", "FROBENIUS", "RELATIONS", "SCAN REG", "PHSOP"}
    assert "status = partial" in certificate.to_report()
    assert DepthCertificate.from_report(certificate.to_report()) == certificate


@pytest.mark.slow
def test_pipeline_two_copies_p5():
    certificate = cmdef_pipeline(5, 2)
    assert certificate.dim == 5
    assert certificate.cmdef_interval == (0, 0)
    assert verify_certificate(certificate) == []


@pytest.mark.slow
@pytest.mark.parametrize("p", [2, 3])
def test_pipeline_three_copies_is_not_cohen_macaulay(p):
    """G_a(p,3): depth 6 in dimension 7, cmdef exactly 1"""
    print(f"🧪 Testing the cmdef pipeline on G_a({p},3)")
    certificate = cmdef_pipeline(p, 3)
    assert certificate.dim == 7
    assert certificate.lower_bound_depth == 6
    assert certificate.premises.certified
    assert certificate.cmdef_interval == (1, 1)
    assert BUCHSBAUM_NOTE in certificate.notes
    assert verify_certificate(reloaded(certificate)) == []


@pytest.mark.slow
def test_pipeline_four_copies():
    """G_a(2,4): depth 7 in dimension 9, cmdef exactly 2"""
    certificate = cmdef_pipeline(2, 4)
    assert certificate.dim == 9
    assert certificate.lower_bound_depth == 7
    assert len(certificate.premises.annihilators) == 4
    assert certificate.cmdef_interval == (2, 2)
    assert verify_certificate(reloaded(certificate)) == []


if __name__ == "__main__":
    print("🚀 Running depth_lab tests")
    print("=" * 60)
    test_presented_from_generators()
    test_presented_rejects_false_relations()
    test_scan_reg_skips_zero_divisors()
    test_scan_reg_trims_units()
    test_scan_reg_is_monotone()
    test_phsop_heights()
    test_premise_bounds()
    test_pipeline_single_copy()
    test_pipeline_sl2_through_roberts()
    test_pipeline_two_copies()
    test_pipeline_two_copies_p3()
    test_certificate_report_round_trip()
    test_certificate_edits_are_rejected()
    test_single_byte_edits_are_rejected()
    test_false_claims_fail_verification()
    test_dropped_relation_fails_verification()
    test_edited_witnesses_fail_verification()
    test_budget_gives_partial_certificate()
    if settings.run_slow:
        test_pipeline_two_copies_p5()
        for prime in (2, 3):
            test_pipeline_three_copies_is_not_cohen_macaulay(prime)
        test_pipeline_four_copies()
    print("✅ All depth_lab tests passed")
