"""
Cohen-Macaulay Defect Pipeline - depth_lab
Two-sided cmdef bounds for S(<X^p,Y^p> ⊕ k·<X,Y>)^G

Stages (all on the G_a side):
    1. cocycle premises: nontrivial cocycle, annihilation witnesses, coprimality
    2. Frobenius invariants and their relation ideal
    3. test sequence translated into tags and scanned for a regular subsequence
    4. phsop height of the annihilators in the presented ring
For SL2 with k copies the G_a ring on k - 1 copies is computed and its
generators are mapped back through Roberts' isomorphism.
"""

import logging
from typing import Optional

from ..actions.cocycle import (
    Cocycle1,
    builtin_cocycle,
    check_annihilator,
    solve_coboundary,
    verify_witness,
)
from ..actions.group_action import GroupKind
from ..budget import time_budget
from ..errors import CertificationError, TimeBudgetExceeded
from ..frobenius.invariants import compare_with_published, frobenius_invariants
from ..frobenius.problem import builtin_problem
from ..groebner.ideal import Ideal, quotient
from ..invariants_sl2.roberts import RobertsIsomorphism
from ..invariants_sl2.sequences import (
    annihilator_phsop,
    ga_test_sequence,
    known_annihilator_witnesses,
    twisted_ga_dimension,
    twisted_sl2_dimension,
)
from ..poly_core.polynomial import Polynomial
from ..poly_core.text_format import format_polynomial, format_ring
from .certificate import (
    AnnihilatorRecord,
    CertificateStatus,
    DepthCertificate,
    DefectPremises,
    HeightRecordModel,
    SystemRecord,
)
from .phsop import phsop_record
from .presented import PresentedRing
from .scan_reg import scan_reg

logger = logging.getLogger(__name__)

BUCHSBAUM_NOTE = (
    "a non-Cohen-Macaulay graded ring of depth greater than 2 is not Buchsbaum, "
    "so this invariant ring is not Buchsbaum"
)


def _cocycle_premises(p: int, k: int, certificate: DepthCertificate) -> tuple[Cocycle1, list[Polynomial]]:
    cocycle = builtin_cocycle(p, k)
    action = cocycle.action
    result = solve_coboundary(cocycle)
    premises = DefectPremises(
        cocycle=format_polynomial(cocycle.value),
        nontrivial=not result.is_coboundary,
        systems=[
            SystemRecord(
                multidegree=list(s.multidegree),
                unknowns=s.unknowns,
                equations=s.equations,
                rank=s.rank,
                augmented_rank=s.augmented_rank,
            )
            for s in result.systems
        ],
    )
    certificate.premises = premises
    if result.is_coboundary:
        logger.error("❌ [CMDEF] builtin cocycle is a coboundary")
        return cocycle, []

    annihilators = annihilator_phsop(p, k)
    for a, known in zip(annihilators, known_annihilator_witnesses(cocycle, p, k)):
        if known is not None and known.annihilator == a and verify_witness(a, cocycle, known.witness):
            if not action.is_invariant(a):
                raise CertificationError(f"annihilator {known.label} is not invariant")
            witness, closed, label = known.witness, True, known.label
        else:
            outcome = check_annihilator(a, cocycle)
            if not outcome.annihilates:
                raise CertificationError(f"{a} does not annihilate the cocycle")
            witness, closed, label = outcome.witness, False, format_polynomial(a)
        premises.annihilators.append(
            AnnihilatorRecord(
                label=label,
                annihilator=format_polynomial(a),
                witness=format_polynomial(witness),
                closed_form=closed,
            )
        )
    first = Ideal(action.target, [annihilators[0]])
    premises.coprime = quotient(first, annihilators[1]).equals(first)
    logger.info(
        f"✅ [CMDEF] {len(annihilators)} annihilators certified, first two coprime: {premises.coprime}"
    )
    return cocycle, annihilators


def cmdef_pipeline(
    p: int,
    k: int,
    group: GroupKind = GroupKind.GA,
    homogenize: bool = False,
    budget: Optional[float] = None,
) -> DepthCertificate:
    """
    Certificate with a cmdef interval for the (p, k) instance

    Args:
        p: Characteristic
        k: Natural copies next to the twisted one (k >= 1 for G_a, k >= 2 for SL2)
        group: GA is computed directly, SL2 through Roberts' isomorphism
        homogenize: Homogenize the middle block of the test sequence
        budget: Seconds before the run aborts with a partial certificate

    Returns:
        The certificate; status PARTIAL when the budget ran out
    """
    group = GroupKind(group)
    if group is GroupKind.SL2:
        if k < 2:
            raise ValueError("the SL2 pipeline needs k >= 2")
        copies, expected = k - 1, twisted_sl2_dimension(k)
    else:
        if k < 1:
            raise ValueError("the G_a pipeline needs k >= 1")
        copies, expected = k, twisted_ga_dimension(k)
    certificate = DepthCertificate(p=p, k=k, group=group, compute_copies=copies, expected_dim=expected)
    logger.info(f"🚀 [CMDEF] Starting {group.value}({p},{k}) on ga({p},{copies})")

    stage = "COCYCLE"
    try:
        with time_budget(budget):
            annihilators: list[Polynomial] = []
            if copies >= 2:
                _, annihilators = _cocycle_premises(p, copies, certificate)

            stage = "FROBENIUS"
            generators = frobenius_invariants(builtin_problem(p, copies, GroupKind.GA))
            compare_with_published(p, copies, len(generators))

            stage = "RELATIONS"
            ring = PresentedRing.from_generators(generators)
            certificate.tag_ring = format_ring(ring.poly_ring)
            certificate.generator_images = {
                name: format_polynomial(f) for name, f in ring.generator_images.items()
            }
            certificate.relations = [format_polynomial(r) for r in ring.relations.generators]
            certificate.dim = ring.dim
            if ring.dim != expected:
                raise CertificationError(f"computed dimension {ring.dim} differs from the expected {expected}")

            if group is GroupKind.SL2:
                stage = "ROBERTS"
                iso = RobertsIsomorphism.twisted_frame(p, k)
                certificate.reported_generators = [format_polynomial(iso.inverse(g)) for g in generators]

            stage = "SCAN REG"
            _, sequence = ga_test_sequence(p, copies, homogenize)
            tags = [ring.to_tags(f) for f in sequence]
            certificate.test_sequence = [format_polynomial(t) for t in tags]
            scan = scan_reg(ring, tags)
            certificate.accepted_positions = scan.positions
            certificate.regular_sequence = [format_polynomial(g) for g in scan.sequence]

            if annihilators and certificate.premises is not None:
                stage = "PHSOP"
                elements = [ring.to_tags(a) for a in annihilators]
                record = phsop_record(ring, elements)
                certificate.premises.phsop = HeightRecordModel(
                    elements=[format_polynomial(e) for e in elements],
                    dim_ring=record.dim_ring,
                    dim_cut=record.dim_cut,
                )
    except TimeBudgetExceeded as exc:
        logger.warning(f"⚠️ [CMDEF] Aborted in {stage}: {exc}")
        certificate.status = CertificateStatus.PARTIAL
        certificate.aborted_stage = stage
        return certificate

    lo, hi = certificate.cmdef_interval
    if hi is not None and lo > hi:
        raise CertificationError(f"depth lower bound exceeds the upper bound: cmdef in [{lo}, {hi}]")
    if hi is not None and hi > 0 and certificate.lower_bound_depth > 2 and lo > 0:
        certificate.notes.append(BUCHSBAUM_NOTE)
    logger.info(f"✅ [CMDEF] {group.value}({p},{k}): cmdef in [{lo}, {hi}]")
    return certificate
