"""On-disk cache of strata catalogs keyed by (family, rank, I)."""

from __future__ import annotations

import json
import logging
import os
from pathlib import Path

from .parabolic import ParabolicSubset
from .strata import catalog, enumerate_strata, hasse
from .weyl import WeylGroup

log = logging.getLogger(__name__)

CACHE_VERSION = 1
ENV_VAR = "STRATA_CACHE_DIR"


def default_cache_dir() -> Path:
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    return Path(os.environ.get("XDG_CACHE_HOME", Path.home() / ".cache")) / "flagstrata"


def cache_path(cache_dir: Path, family: str, rank: int, I: ParabolicSubset) -> Path:
    nodes = "-".join(map(str, I.sorted())) or "none"
    return Path(cache_dir) / f"{family}{rank}_I{nodes}.json"


def load(path: Path) -> dict | None:
    try:
        data = json.loads(path.read_text())
    except (OSError, ValueError):
        return None
    if not isinstance(data, dict) or data.get("version") != CACHE_VERSION:
        log.info("discarding stale cache file %s", path)
        return None
    data.pop("version")
    return data


def store(path: Path, cat: dict) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".tmp")
    tmp.write_text(json.dumps({**cat, "version": CACHE_VERSION}, indent=1) + "\n")
    os.replace(tmp, path)


def load_or_build_catalog(group: WeylGroup, I: ParabolicSubset, cache_dir: Path | None,
                          max_strata: int, max_order: int) -> dict:
    """Catalog for (group, I); raises ``PosetAxiomFailure`` if the relation is not a partial order."""
    datum = group.system.datum
    path = cache_path(cache_dir, datum.family, datum.rank, I) if cache_dir is not None else None
    if path is not None:
        hit = load(path)
        if hit is not None:
            return hit
    poset = enumerate_strata(group, I, max_strata=max_strata, max_order=max_order)
    hasse(poset)
    cat = catalog(poset)
    if path is not None:
        try:
            store(path, cat)
        except OSError as exc:
            log.warning("could not write cache %s: %s", path, exc)
    return cat
