"""
Time Budget - cmdef_lab
Cooperative deadline checked inside long Groebner loops
"""

import logging
import time
from contextlib import contextmanager
from contextvars import ContextVar
from typing import Iterator, Optional

from .errors import TimeBudgetExceeded

logger = logging.getLogger(__name__)

_deadline: ContextVar[Optional[tuple[float, float]]] = ContextVar("cmdef_lab_deadline", default=None)


@contextmanager
def time_budget(seconds: Optional[float]) -> Iterator[None]:
    """
    Activate a deadline for the enclosed computation

    Args:
        seconds: Wall-clock budget; None disables the deadline
    """
    if seconds is None:
        yield
        return
    start = time.monotonic()
    token = _deadline.set((start, start + seconds))
    logger.info(f"⏱️ [BUDGET] Time budget of {seconds:.1f}s active")
    try:
        yield
    finally:
        _deadline.reset(token)


def check_budget(stage: str) -> None:
    """Raise TimeBudgetExceeded when the active deadline has passed"""
    active = _deadline.get()
    if active is None:
        return
    start, end = active
    now = time.monotonic()
    if now > end:
        logger.error(f"❌ [BUDGET] Deadline hit during {stage}")
        raise TimeBudgetExceeded(stage, now - start)
