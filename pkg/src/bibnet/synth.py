"""Seeded synthetic corpus generator.

Generates corpora whose team-size distribution mixes a majority of
single-author records, a geometric tail of small teams, and a rare
hyperauthorship fraction with very large teams, which is the regime where
full and fractional counting diverge most. References are drawn from a
Zipf-skewed item universe.

Randomness comes from numpy's Philox bit generator keyed by (seed, record
index), so each record has its own counter-based stream: corpora are
reproducible byte for byte and independent of generation order.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import PublicationRecord

_MASK64 = 0xFFFFFFFFFFFFFFFF


@dataclass(frozen=True)
class SynthConfig:
    """Generator parameters.

    Non-hyper records are single-author with probability ``p_single`` and
    otherwise get a team of size 1 + Geometric with mean
    ``geometric_mean_small`` (capped at ``n_units``). A record is a
    hyperauthorship record with probability ``hyper_fraction``, with team
    size uniform over ``hyper_size_range``. ``citation_skew`` is the Zipf
    exponent of cited-item popularity (0 means uniform) over an item
    universe of ``item_universe_size`` (default 5x ``n_records``).
    """

    seed: int
    n_units: int
    n_records: int
    p_single: float = 0.7
    geometric_mean_small: float = 3.0
    hyper_fraction: float = 0.0
    hyper_size_range: tuple[int, int] = (100, 150)
    reference_count_range: tuple[int, int] = (0, 0)
    citation_skew: float = 1.0
    item_universe_size: int | None = None

    def __post_init__(self) -> None:
        if self.n_units < 1:
            raise ValueError("n_units must be positive")
        if self.n_records < 0:
            raise ValueError("n_records must be nonnegative")
        for name in ("p_single", "hyper_fraction"):
            p = getattr(self, name)
            if not 0.0 <= p <= 1.0:
                raise ValueError(f"{name} must be in [0, 1]")
        if self.geometric_mean_small < 2.0:
            raise ValueError("geometric_mean_small must be at least 2")
        lo, hi = self.hyper_size_range
        if not 2 <= lo <= hi:
            raise ValueError("hyper_size_range must satisfy 2 <= min <= max")
        if self.hyper_fraction > 0 and hi > self.n_units:
            raise ValueError("hyperauthorship team size exceeds n_units")
        if self.p_single < 1.0 and self.n_units < 2:
            raise ValueError("multi-author teams need at least 2 units")
        rlo, rhi = self.reference_count_range
        if not 0 <= rlo <= rhi:
            raise ValueError("reference_count_range must satisfy 0 <= min <= max")
        if self.citation_skew < 0:
            raise ValueError("citation_skew must be nonnegative")

    @property
    def universe(self) -> int:
        if self.item_universe_size is not None:
            return self.item_universe_size
        return 5 * self.n_records


def _record_rng(seed: int, index: int) -> np.random.Generator:
    key = np.array([seed & _MASK64, index], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key))


def _item_cdf(cfg: SynthConfig) -> np.ndarray:
    ranks = np.arange(1, cfg.universe + 1, dtype=np.float64)
    weights = ranks ** (-cfg.citation_skew)
    cdf = np.cumsum(weights)
    return cdf / cdf[-1]


def generate(cfg: SynthConfig) -> list[PublicationRecord]:
    """Generate a corpus; a pure function of the config."""
    if cfg.reference_count_range[1] > 0 and cfg.universe == 0:
        raise ValueError("references requested but the item universe is empty")
    unit_width = len(str(cfg.n_units))
    item_width = len(str(cfg.universe))
    record_width = len(str(max(cfg.n_records, 1)))
    cdf = _item_cdf(cfg) if cfg.universe else None
    geom_p = 1.0 / (cfg.geometric_mean_small - 1.0) if cfg.geometric_mean_small > 2.0 else 1.0
    rlo, rhi = cfg.reference_count_range

    records = []
    for r in range(cfg.n_records):
        rng = _record_rng(cfg.seed, r)
        if rng.random() < cfg.hyper_fraction:
            size = int(rng.integers(cfg.hyper_size_range[0], cfg.hyper_size_range[1] + 1))
        elif rng.random() < cfg.p_single:
            size = 1
        else:
            size = min(1 + int(rng.geometric(geom_p)), cfg.n_units)
        members = np.sort(rng.choice(cfg.n_units, size=size, replace=False))
        authors = tuple(f"U{u + 1:0{unit_width}d}" for u in members.tolist())
        n_refs = int(rng.integers(rlo, rhi + 1)) if rhi > 0 else 0
        references: tuple[str, ...] = ()
        if n_refs:
            picks = np.searchsorted(cdf, rng.random(n_refs), side="right")
            references = tuple(
                dict.fromkeys(f"X{p + 1:0{item_width}d}" for p in picks.tolist())
            )
        records.append(
            PublicationRecord(
                id=f"P{r + 1:0{record_width}d}",
                authors=authors,
                references=references,
            )
        )
    return records
