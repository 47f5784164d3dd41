"""
Error Types - cmdef_lab
Exception hierarchy shared by the algebra kernel, the pipelines and the CLI
"""


class CmdefLabError(Exception):
    """Base class for every error raised by cmdef_lab"""


class FieldError(CmdefLabError):
    """Invalid coefficient field (non-prime modulus, mixed fields)"""


class RingMismatchError(CmdefLabError):
    """Operands live in different ring contexts"""


class DivisionError(CmdefLabError):
    """A division that must be exact left a remainder"""


class ParseError(CmdefLabError):
    """Malformed ring header, polynomial text or ideal file"""


class NotInvariantError(CmdefLabError):
    """A polynomial expected to be invariant is not"""


class CertificationError(CmdefLabError):
    """A post-condition re-check failed"""


class TimeBudgetExceeded(CmdefLabError):
    """The configured time budget ran out during a computation"""

    def __init__(self, stage: str, elapsed: float):
        super().__init__(f"time budget exceeded in {stage} after {elapsed:.1f}s")
        self.stage = stage
        self.elapsed = elapsed


class CacheCorruptionError(CmdefLabError):
    """A cache file does not match its recorded content hash"""


class CertificateFormatError(CmdefLabError):
    """A certificate report cannot be parsed"""
