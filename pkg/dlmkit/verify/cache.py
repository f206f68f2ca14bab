import hashlib
import json
import logging
import uuid
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional

from pydantic import ValidationError

from dlmkit.models import GraphRecord

logger = logging.getLogger(__name__)


def corpus_digest(graph6_lines: Iterable[str], *params: int) -> str:
    """
    sha256 over the newline-joined graph6 corpus, followed by ``params``.

    Sweeps pass their interval and comparison bit budgets as ``params``, so records
    computed under other precision settings never match.
    """
    h = hashlib.sha256()
    for line in graph6_lines:
        h.update(line.encode("ascii"))
        h.update(b"\n")
    for p in params:
        h.update(f"#{p}".encode("ascii"))
    return h.hexdigest()


class SweepCache:
    """
    Per-graph sweep records stored as JSON files under ``cache_dir``, keyed by
    ``(n, digest)`` where the digest covers the corpus and the precision settings.
    """

    def __init__(self, cache_dir: Path, enabled: bool = True):
        self.cache_dir = Path(cache_dir).expanduser()
        self.enabled = enabled

    def _path(self, n: int, digest: str) -> Path:
        return self.cache_dir / f"sweep-n{n}-{digest[:16]}.json"

    def load(self, n: int, digest: str) -> Optional[List[GraphRecord]]:
        if not self.enabled:
            return None
        path = self._path(n, digest)
        if not path.exists():
            return None
        try:
            payload = json.loads(path.read_text())
            if payload.get("digest") != digest:
                return None
            return [GraphRecord(**item) for item in payload["records"]]
        except (OSError, ValueError, KeyError, ValidationError) as e:
            logger.warning(f"Ignoring unreadable cache file {path}: {str(e)}")
            return None

    def store(self, n: int, digest: str, records: List[GraphRecord]) -> None:
        if not self.enabled:
            return
        path = self._path(n, digest)
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            payload = {"n": n, "digest": digest, "records": [r.model_dump(mode="json") for r in records]}
            path.write_text(json.dumps(payload))
            logger.debug(f"Cached {len(records)} records at {path}")
        except OSError as e:
            logger.warning(f"Could not write cache file {path}: {str(e)}")


class SweepTracker:
    """
    Tracks sweep runs and cache use within one process.
    """

    def __init__(self):
        self.sweeps: Dict[str, Dict[str, Any]] = {}
        self.MAX_HISTORY = 1000

    def create_tracking_id(self, n: int, digest: str, kind: str = "sweep") -> str:
        tracking_id = str(uuid.uuid4())
        self.sweeps[tracking_id] = {
            "n": n,
            "digest": digest,
            "kind": kind,
            "created_at": datetime.now().isoformat(),
            "status": "queued",
            "finished_at": None,
            "error": None,
        }
        if len(self.sweeps) > self.MAX_HISTORY:
            self._prune_old_entries()
        return tracking_id

    def update_status(self, tracking_id: str, status: str, error: Optional[str] = None) -> bool:
        """
        Args:
            tracking_id: Entry to update
            status: queued, processing, cached, completed or failed
            error: Optional error message
        """
        if tracking_id not in self.sweeps:
            return False
        entry = self.sweeps[tracking_id]
        entry["status"] = status
        if status in ("completed", "cached", "failed"):
            entry["finished_at"] = datetime.now().isoformat()
        if error:
            entry["error"] = error
        return True

    def get_stats(self) -> Dict[str, int]:
        stats = {"total": len(self.sweeps), "queued": 0, "processing": 0, "cached": 0, "completed": 0, "failed": 0}
        for entry in self.sweeps.values():
            if entry["status"] in stats:
                stats[entry["status"]] += 1
        return stats

    def _prune_old_entries(self):
        """Keep the most recent half of the history."""
        ordered = sorted(self.sweeps.items(), key=lambda x: x[1]["created_at"], reverse=True)
        self.sweeps = dict(ordered[: self.MAX_HISTORY // 2])
