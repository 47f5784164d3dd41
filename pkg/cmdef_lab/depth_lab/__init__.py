"""
Depth Lab - cmdef_lab
Presented rings, regular sequences, phsop heights and cmdef certificates
"""

from .presented import PresentedRing
from .phsop import HeightRecord, phsop_record, is_phsop
from .scan_reg import ScanRegResult, scan_reg, replay_regular
from .certificate import (
    CertificateStatus,
    SystemRecord,
    AnnihilatorRecord,
    HeightRecordModel,
    DefectPremises,
    DepthCertificate,
    verify_certificate,
)
from .pipeline import BUCHSBAUM_NOTE, cmdef_pipeline

__all__ = [
    "PresentedRing",
    "HeightRecord",
    "phsop_record",
    "is_phsop",
    "ScanRegResult",
    "scan_reg",
    "replay_regular",
    "CertificateStatus",
    "SystemRecord",
    "AnnihilatorRecord",
    "HeightRecordModel",
    "DefectPremises",
    "DepthCertificate",
    "verify_certificate",
    "BUCHSBAUM_NOTE",
    "cmdef_pipeline",
]
