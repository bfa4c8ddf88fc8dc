"""Configured experiment runs used by the scripts in ``scripts/``.

Each run takes a frozen dataclass config and returns plain data, so results
can be dumped to JSON or compared in tests.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .diagrams import enumerate_basic, is_weakly_selfdual, sector_profile, sectors
from .ds import ds, sdim_value
from .tannaka import classify
from .weights import Weight

__all__ = ["TableConfig", "ScanConfig", "selfdual_basic_table", "selfdual_derivative_scan"]


@dataclass(frozen=True)
class TableConfig:
    """Which selfdual basics to list for rank ``n``.

    ``min_sectors``/``exact_sectors`` restrict the sector count; the trivial
    weight is skipped unless ``include_trivial``.
    """

    n: int
    min_sectors: int = 1
    exact_sectors: int | None = None
    include_trivial: bool = False

    @classmethod
    def published_layout(cls, n: int) -> "TableConfig":
        # single-sector basics lift from rank n-1; odd n=7 lists three sectors
        if n <= 5:
            return cls(n)
        return cls(n, exact_sectors=3) if n == 7 else cls(n, min_sectors=2)


@dataclass(frozen=True)
class ScanConfig:
    max_n: int = 6
    max_entry: int = 7
    ranks: tuple[int, ...] = field(default=())

    def rank_range(self) -> tuple[int, ...]:
        return self.ranks or tuple(range(1, self.max_n + 1))


def selfdual_basic_table(cfg: TableConfig) -> list[dict]:
    rows = []
    for b in enumerate_basic(cfg.n):
        k = len(sectors(b))
        if not cfg.include_trivial and not any(b.entries):
            continue
        if not is_weakly_selfdual(b) or k < cfg.min_sectors:
            continue
        if cfg.exact_sectors is not None and k != cfg.exact_sectors:
            continue
        rows.append({"weight": b.entries, "sectors": k,
                     "sdim": abs(sdim_value(b)), "group": str(classify(b))})
    return rows


def selfdual_derivative_scan(cfg: ScanConfig) -> dict[int, list[tuple[Weight, list[Weight]]]]:
    """Weights with two or more weakly selfdual DS summands, outside the
    expected family (selfdual, rank-one sectors, equal gaps)."""
    out: dict[int, list[tuple[Weight, list[Weight]]]] = {}
    for n in cfg.rank_range():
        bad = []
        for c in itertools.combinations_with_replacement(range(cfg.max_entry + 1), n):
            w = Weight(tuple(sorted(c, reverse=True)))
            sd = [p.weight for p in ds(w) if is_weakly_selfdual(p.weight)]
            if len(sd) < 2:
                continue
            prof = sector_profile(w)
            if is_weakly_selfdual(w) and set(prof.ranks) == {1} and len(set(prof.gaps)) <= 1:
                continue
            bad.append((w, sd))
        out[n] = bad
    return out
