"""On-disk cache for dominant weight multiplicities.

Enabled by pointing ``GLNN_CACHE_DIR`` at a directory.  One JSON file per
(type, rank, highest weight).  Records are checked against the Weyl
dimension before use; anything unreadable or inconsistent is ignored and
rewritten.  Writes go through a temporary file and ``os.replace`` so readers
never see partial records.
"""

from __future__ import annotations

import json
import logging
import os
import tempfile
from pathlib import Path
from typing import Optional

log = logging.getLogger(__name__)

ENV_VAR = "GLNN_CACHE_DIR"
FORMAT = "glnn-weight-system"
VERSION = 1


class WeightSystemCache:
    def __init__(self, root: os.PathLike | str) -> None:
        self.root = Path(root)

    def path(self, g, w) -> Path:
        tag = "_".join(str(x) for x in w).replace("-", "m")
        return self.root / f"{g.type}{g.rank}__{tag}.json"

    def load(self, g, w) -> Optional[dict]:
        from .classical import weyl_dimension

        p = self.path(g, w)
        try:
            rec = json.loads(p.read_text())
            if rec.get("format") != FORMAT or rec.get("version") != VERSION:
                raise ValueError("header mismatch")
            if (rec["type"], rec["rank"], tuple(rec["weight"])) != (g.type, g.rank, tuple(w)):
                raise ValueError("key mismatch")
            mults = {tuple(int(x) for x in k): int(m) for k, m in rec["dominant"]}
            total = sum(m * g.orbit_size(k) for k, m in mults.items())
            if total != weyl_dimension(g, w) or tuple(w) not in mults:
                raise ValueError("dimension check failed")
            if not all(g.is_dominant(k) and m > 0 for k, m in mults.items()):
                raise ValueError("bad record")
            return mults
        except FileNotFoundError:
            return None
        except (OSError, ValueError, KeyError, TypeError) as exc:
            log.warning("discarding cache record %s: %s", p, exc)
            return None

    def store(self, g, w, mults: dict) -> None:
        rec = {
            "format": FORMAT,
            "version": VERSION,
            "type": g.type,
            "rank": g.rank,
            "weight": list(w),
            "dominant": [[list(k), m] for k, m in sorted(mults.items())],
        }
        try:
            self.root.mkdir(parents=True, exist_ok=True)
            fd, tmp = tempfile.mkstemp(dir=self.root, suffix=".tmp")
            with os.fdopen(fd, "w") as fh:
                json.dump(rec, fh, sort_keys=True)
            os.replace(tmp, self.path(g, w))
        except OSError as exc:  # cache is advisory
            log.warning("could not write cache record: %s", exc)


def default_cache() -> Optional[WeightSystemCache]:
    root = os.environ.get(ENV_VAR)
    return WeightSystemCache(root) if root else None
