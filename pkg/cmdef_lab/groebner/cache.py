"""
Gröbner Basis Cache - groebner
Reduced bases stored as text files keyed by (content hash of the input, order)

Each file starts with a '# sha256 <digest>' line over the remaining body so a
truncated or edited file is detected instead of silently reused.
"""

import hashlib
import logging
from pathlib import Path
from typing import Optional, Sequence

from ..config import settings
from ..errors import CacheCorruptionError, ParseError
from ..poly_core.polynomial import Polynomial
from ..poly_core.ring import RingContext
from ..poly_core.text_format import format_polynomial, format_ring, parse_polynomial

logger = logging.getLogger(__name__)

Record = list[Polynomial]


def _digest(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


class GroebnerCache:
    """Directory-backed store of Gröbner basis records"""

    def __init__(self, directory: Path):
        self.directory = Path(directory).expanduser()

    def key(self, ring: RingContext, records: Sequence[Record], order_label: str, extra: str = "") -> str:
        lines = sorted(" | ".join(format_polynomial(f) for f in record) for record in records)
        body = "\n".join([format_ring(ring), order_label, extra, *lines])
        return _digest(body)

    def _path(self, key: str) -> Path:
        return self.directory / f"{key}.gb"

    def load(self, ring: RingContext, key: str) -> Optional[list[Record]]:
        path = self._path(key)
        if not path.exists():
            return None
        text = path.read_text(encoding="utf-8")
        head, _, body = text.partition("\n")
        if not head.startswith("# sha256 ") or head.split()[-1] != _digest(body):
            logger.error(f"❌ [GB CACHE] Content hash mismatch in {path}")
            raise CacheCorruptionError(f"cache file {path} does not match its content hash")
        lines = body.splitlines()
        if not lines or lines[0] != format_ring(ring):
            raise CacheCorruptionError(f"cache file {path} was written for a different ring")
        try:
            records = [[parse_polynomial(part, ring) for part in line.split(" | ")] for line in lines[1:] if line]
        except ParseError as exc:
            raise CacheCorruptionError(f"cache file {path} is unreadable: {exc}") from exc
        logger.info(f"📦 [GB CACHE] Hit {key[:12]} ({len(records)} records)")
        return records

    def store(self, ring: RingContext, key: str, records: Sequence[Record]) -> None:
        try:
            self.directory.mkdir(parents=True, exist_ok=True)
            body = "\n".join([format_ring(ring), *(" | ".join(format_polynomial(f) for f in r) for r in records)]) + "\n"
            self._path(key).write_text(f"# sha256 {_digest(body)}\n{body}", encoding="utf-8")
            logger.debug(f"💾 [GB CACHE] Stored {key[:12]} ({len(records)} records)")
        except OSError as e:
            logger.warning(f"⚠️ [GB CACHE] Could not write cache entry: {e}")


_state = {"enabled": settings.use_cache, "directory": settings.cache_dir}


def set_cache_enabled(enabled: bool, directory: Optional[Path] = None) -> None:
    """Switch the process-wide cache on or off (the CLI's --no-cache)"""
    _state["enabled"] = enabled
    if directory is not None:
        _state["directory"] = Path(directory)


def active_cache() -> Optional[GroebnerCache]:
    if not _state["enabled"]:
        return None
    return GroebnerCache(_state["directory"])
