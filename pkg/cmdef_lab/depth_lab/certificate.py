"""
Depth Certificates - depth_lab
Two-sided cmdef bounds with every premise recorded as text, a SHA-256 digest
over the payload, and an independent replay

Report layout:

    # cmdef_lab depth certificate
    <summary lines derived from the payload>
    ---
    <JSON payload>
    ---
    sha256 <hex digest of the JSON payload>

The summary is regenerated on load and must match byte for byte.
"""

import hashlib
import logging
from enum import Enum
from typing import Optional

from pydantic import BaseModel, Field, ValidationError

from ..actions.cocycle import Cocycle1, check_cocycle, solve_coboundary, verify_witness
from ..actions.group_action import GroupAction, GroupKind, builtin_actions
from ..errors import CertificateFormatError, CmdefLabError
from ..groebner.ideal import Ideal, quotient
from ..invariants_sl2.sequences import twisted_ga_dimension, twisted_sl2_dimension
from ..poly_core.polynomial import Polynomial
from ..poly_core.ring import RingContext
from ..poly_core.text_format import format_polynomial, parse_polynomial, parse_ring
from .phsop import phsop_record
from .presented import PresentedRing
from .scan_reg import replay_regular

logger = logging.getLogger(__name__)

HEADER = "# cmdef_lab depth certificate"
SEPARATOR = "---"


class CertificateStatus(str, Enum):
    COMPLETE = "complete"
    PARTIAL = "partial"


class SystemRecord(BaseModel):
    """One multi-homogeneous coboundary system: rank < augmented_rank means no solution"""
    multidegree: list[int]
    unknowns: int
    equations: int
    rank: int
    augmented_rank: int


class AnnihilatorRecord(BaseModel):
    label: str
    annihilator: str
    witness: str
    closed_form: bool = False


class HeightRecordModel(BaseModel):
    elements: list[str]
    dim_ring: int
    dim_cut: int

    @property
    def holds(self) -> bool:
        return self.dim_ring - self.dim_cut == len(self.elements)


class DefectPremises(BaseModel):
    """Hypotheses of the cmdef lower bound, each machine-checked"""
    cocycle: str
    nontrivial: bool
    systems: list[SystemRecord] = Field(default_factory=list)
    annihilators: list[AnnihilatorRecord] = Field(default_factory=list)
    coprime: bool = False
    phsop: Optional[HeightRecordModel] = None

    @property
    def certified(self) -> bool:
        return bool(self.nontrivial and self.annihilators and self.coprime and self.phsop and self.phsop.holds)

    @property
    def cmdef_lower(self) -> int:
        return max(len(self.annihilators) - 2, 0) if self.certified else 0


class DepthCertificate(BaseModel):
    """
    cmdef interval for S(<X^p,Y^p> ⊕ k·<X,Y>)^G

    The computation always runs for G_a on compute_copies natural copies; for
    SL2 the generators are translated back through Roberts' isomorphism.
    """
    p: int
    k: int
    group: GroupKind
    compute_copies: int
    status: CertificateStatus = CertificateStatus.COMPLETE
    aborted_stage: Optional[str] = None
    expected_dim: int
    dim: Optional[int] = None
    tag_ring: Optional[str] = None
    generator_images: dict[str, str] = Field(default_factory=dict)
    reported_generators: list[str] = Field(default_factory=list)
    relations: list[str] = Field(default_factory=list)
    test_sequence: list[str] = Field(default_factory=list)
    accepted_positions: list[int] = Field(default_factory=list)
    regular_sequence: list[str] = Field(default_factory=list)
    premises: Optional[DefectPremises] = None
    notes: list[str] = Field(default_factory=list)

    # ------------------------------------------------------------------ bounds

    @property
    def lower_bound_depth(self) -> int:
        return len(self.regular_sequence)

    @property
    def cmdef_lower(self) -> int:
        return self.premises.cmdef_lower if self.premises else 0

    @property
    def upper_bound_depth(self) -> int:
        dim = self.dim if self.dim is not None else self.expected_dim
        return dim - self.cmdef_lower

    @property
    def cmdef_upper(self) -> Optional[int]:
        if self.dim is None:
            return None
        return self.dim - self.lower_bound_depth

    @property
    def cmdef_interval(self) -> tuple[int, Optional[int]]:
        return self.cmdef_lower, self.cmdef_upper

    @property
    def exact(self) -> bool:
        return self.cmdef_upper is not None and self.cmdef_lower == self.cmdef_upper

    # ------------------------------------------------------------------ report

    def summary_lines(self) -> list[str]:
        lo, hi = self.cmdef_interval
        lines = [
            HEADER,
            f"instance = {self.group.value}({self.p},{self.k})",
            f"computed on = ga({self.p},{self.compute_copies})",
            f"status = {self.status.value}",
        ]
        if self.aborted_stage:
            lines.append(f"aborted in = {self.aborted_stage}")
        lines.append(f"dim = {self.dim if self.dim is not None else 'unknown'} (expected {self.expected_dim})")
        lines.append(f"generators = {len(self.generator_images)}")
        lines.append(f"depth >= {self.lower_bound_depth}")
        lines.append(f"depth <= {self.upper_bound_depth}")
        lines.append(f"cmdef in [{lo}, {hi if hi is not None else '?'}]")
        if self.exact:
            lines.append(f"cmdef = {lo}")
        for note in self.notes:
            lines.append(f"note: {note}")
        return lines

    def payload(self) -> str:
        return self.model_dump_json(indent=2)

    def digest(self) -> str:
        return hashlib.sha256(self.payload().encode("utf-8")).hexdigest()

    def to_report(self) -> str:
        body = self.payload()
        return "\n".join(self.summary_lines() + [SEPARATOR, body, SEPARATOR, f"sha256 {self.digest()}"]) + "\n"

    @classmethod
    def from_report(cls, text: str) -> "DepthCertificate":
        """
        Parse a report; any edit to summary, payload or digest is rejected

        Raises:
            CertificateFormatError: malformed, edited or inconsistent report
        """
        parts = text.split(f"\n{SEPARATOR}\n")
        if len(parts) != 3:
            raise CertificateFormatError("expected summary, payload and digest sections")
        _, body, tail = parts
        tail = tail.strip()
        if not tail.startswith("sha256 "):
            raise CertificateFormatError("missing sha256 line")
        if tail.split()[-1] != hashlib.sha256(body.encode("utf-8")).hexdigest():
            raise CertificateFormatError("payload does not match its sha256 digest")
        try:
            certificate = cls.model_validate_json(body)
        except ValidationError as exc:
            raise CertificateFormatError(f"invalid certificate payload: {exc}") from exc
        if certificate.to_report() != text:
            raise CertificateFormatError("report text differs from the one regenerated from its payload")
        return certificate

    # ------------------------------------------------------------------ rings

    def compute_action(self) -> GroupAction:
        return builtin_actions(self.p, self.compute_copies, GroupKind.GA)

    def presented_ring(self) -> Optional[PresentedRing]:
        if self.tag_ring is None:
            return None
        ring = parse_ring(self.tag_ring)
        target = self.compute_action().target
        images = {name: parse_polynomial(text, target) for name, text in self.generator_images.items()}
        relations = Ideal(ring, [parse_polynomial(r, ring) for r in self.relations])
        return PresentedRing(ring, relations, images)


def _parse_all(texts: list[str], ring: RingContext) -> list[Polynomial]:
    return [parse_polynomial(t, ring) for t in texts]


def verify_certificate(certificate: DepthCertificate) -> list[str]:
    """
    Replay every recorded claim

    Returns:
        Human-readable failures; an empty list means the certificate holds
    """
    failures: list[str] = _verify_instance(certificate)
    try:
        failures += _verify_images(certificate)
        ring = certificate.presented_ring()
        if ring is not None:
            failures += _verify_presentation(certificate, ring)
            regular = _parse_all(certificate.regular_sequence, ring.poly_ring)
            for g in regular:
                if g.constant_term != g.field.zero:
                    failures.append(f"regular element {format_polynomial(g)} has a nonzero constant term")
            if not replay_regular(ring, regular):
                failures.append("regular sequence replay fails")
            tests = _parse_all(certificate.test_sequence, ring.poly_ring)
            positions = certificate.accepted_positions
            if any(a >= b for a, b in zip(positions, positions[1:])):
                failures.append("accepted positions are not strictly increasing")
            if [tests[i] for i in certificate.accepted_positions if i < len(tests)] != regular:
                failures.append("accepted positions do not select the regular sequence")
        elif certificate.regular_sequence:
            failures.append("regular sequence recorded without a presented ring")
        failures += _verify_premises(certificate, ring)
        lo, hi = certificate.cmdef_interval
        if hi is not None and lo > hi:
            failures.append(f"empty cmdef interval [{lo}, {hi}]")
    except (CmdefLabError, ValueError) as exc:
        failures.append(f"replay raised {type(exc).__name__}: {exc}")
    for failure in failures:
        logger.error(f"❌ [VERIFY] {failure}")
    if not failures:
        logger.info("✅ [VERIFY] certificate replayed successfully")
    return failures


def _verify_instance(certificate: DepthCertificate) -> list[str]:
    failures = []
    if certificate.group is GroupKind.SL2:
        copies, expected = certificate.k - 1, twisted_sl2_dimension(certificate.k)
    else:
        copies, expected = certificate.k, twisted_ga_dimension(certificate.k)
    if certificate.compute_copies != copies:
        instance = f"{certificate.group.value}({certificate.p},{certificate.k})"
        failures.append(f"{instance} is computed on {copies} copies, recorded {certificate.compute_copies}")
    if certificate.expected_dim != expected:
        failures.append(f"expected dimension of the instance is {expected}, recorded {certificate.expected_dim}")
    if certificate.dim is not None and certificate.dim != expected:
        failures.append(f"recorded dimension {certificate.dim} is not the invariant ring dimension {expected}")
    return failures


def _verify_images(certificate: DepthCertificate) -> list[str]:
    action = certificate.compute_action()
    return [
        f"generator image {name} is not invariant"
        for name, text in certificate.generator_images.items()
        if not action.is_invariant(parse_polynomial(text, action.target))
    ]


def _verify_presentation(certificate: DepthCertificate, ring: PresentedRing) -> list[str]:
    """Recorded relations must be the whole kernel of T_i -> image_i"""
    failures = []
    if certificate.dim is not None and ring.dim != certificate.dim:
        failures.append(f"dimension replay gives {ring.dim}, recorded {certificate.dim}")
    if ring.presentation is None:
        failures.append("tag ring recorded without generator images")
        return failures
    if not ring.presentation.relation_ideal.equals(ring.relations):
        failures.append("recorded relations do not generate the relation ideal of the generator images")
    return failures


def _verify_premises(certificate: DepthCertificate, ring: Optional[PresentedRing]) -> list[str]:
    premises = certificate.premises
    if premises is None:
        return []
    failures = []
    action = certificate.compute_action()
    cocycle = Cocycle1(action, parse_polynomial(premises.cocycle, action.product))
    if not check_cocycle(cocycle):
        failures.append("recorded cocycle fails the cocycle identity")
    result = solve_coboundary(cocycle)
    if result.is_coboundary == premises.nontrivial:
        failures.append("cocycle nontriviality does not replay")
    replayed = [
        SystemRecord(
            multidegree=list(s.multidegree),
            unknowns=s.unknowns,
            equations=s.equations,
            rank=s.rank,
            augmented_rank=s.augmented_rank,
        )
        for s in result.systems
    ]
    if replayed != premises.systems:
        failures.append("coboundary rank certificate does not replay")

    annihilators = []
    for record in premises.annihilators:
        a = parse_polynomial(record.annihilator, action.target)
        b = parse_polynomial(record.witness, action.target)
        annihilators.append(a)
        if not action.is_invariant(a):
            failures.append(f"annihilator {record.label} is not invariant")
        elif not verify_witness(a, cocycle, b):
            failures.append(f"witness for {record.label} does not verify")

    if len(annihilators) >= 2:
        first = Ideal(action.target, [annihilators[0]])
        coprime = quotient(first, annihilators[1]).equals(first)
        if coprime != premises.coprime:
            failures.append("coprimality of the first two annihilators does not replay")

    if premises.phsop is not None:
        if ring is None:
            failures.append("phsop recorded without a presented ring")
        else:
            elements = _parse_all(premises.phsop.elements, ring.poly_ring)
            if [ring.from_tags(e) for e in elements] != annihilators:
                failures.append("phsop elements do not map to the recorded annihilators")
            record = phsop_record(ring, elements)
            if (record.dim_ring, record.dim_cut) != (premises.phsop.dim_ring, premises.phsop.dim_cut):
                failures.append("phsop dimensions do not replay")
    return failures
