"""Network diagnostics: threshold sweeps, relatedness ranking, link decomposition.

These answer the operational questions about a constructed network: how much
of the full-counting link mass comes from columns with many contributing
units, which units are most strongly related to a focal unit, and which
cited items are responsible for the link between two specific units.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import CITATION_KINDS, CountingScheme, IncidenceKind, IncidenceMatrix, NetworkMatrix
from .project import ProjectionConfig, project


@dataclass(frozen=True)
class SweepRow:
    """One threshold row of a link-count sweep.

    ``publications_kept`` counts all columns whose distinct-unit count does
    not exceed the threshold (single-unit columns are never filtered out).
    ``link_pairs_kept`` counts unordered unit pairs column by column, so two
    units co-occurring in 100 columns contribute 100 pairs.
    ``fractional_weight_kept`` is the total per-unit link weight of the
    fractional network built from the kept columns (the sum of its row
    totals). Percentages are relative to the unbounded row.
    """

    threshold: int | None
    publications_kept: int
    publications_pct: float
    link_pairs_kept: int
    link_pairs_pct: float
    fractional_weight_kept: float
    fractional_weight_pct: float


@dataclass(frozen=True)
class ContributionRow:
    """One cited item's contribution to the link between two units."""

    item_id: str
    citations_from_a: int
    citations_from_b: int
    full_links: int
    fractional_weight: float


@dataclass(frozen=True)
class ContributionReport:
    unit_a: str
    unit_b: str
    rows: tuple[ContributionRow, ...]
    total_full_links: int
    total_fractional_weight: float


def _require_authorship(m: IncidenceMatrix) -> None:
    if m.kind is not IncidenceKind.AUTHORSHIP:
        raise ValueError("link-pair counting requires an authorship matrix")


def count_link_pairs(
    m: IncidenceMatrix, threshold: int | None = None
) -> tuple[int, int]:
    """Linkable publications and unordered co-authorship pairs under a threshold.

    Returns (publications_kept, link_pairs) where publications_kept counts
    columns with distinct-unit count between 2 and the threshold, and
    link_pairs sums n_k * (n_k - 1) / 2 over those columns. The matrix's
    total column count is available as ``m.n_items``.
    """
    _require_authorship(m)
    units = m.units_per_column()
    margins = m.column_margin
    kept = margins >= 2
    if threshold is not None:
        kept &= units <= threshold
    kept_margins = margins[kept]
    pairs = int((kept_margins * (kept_margins - 1) // 2).sum())
    return int(kept.sum()), pairs


def _pct(value: float, total: float) -> float:
    return 100.0 if total == 0 else 100.0 * value / total


def sweep(m: IncidenceMatrix, thresholds: list[int] | tuple[int, ...]) -> list[SweepRow]:
    """One SweepRow per threshold plus an unbounded row.

    Thresholds must be strictly increasing. The fractional weight column is
    computed by actually projecting the kept columns under the fractional
    scheme, not from a closed form.
    """
    _require_authorship(m)
    if any(b <= a for a, b in zip(thresholds, list(thresholds)[1:])):
        raise ValueError("thresholds must be strictly increasing")
    if any(t < 1 for t in thresholds):
        raise ValueError("thresholds must be positive")
    units = m.units_per_column()

    def kept_stats(threshold: int | None) -> tuple[int, int, float]:
        if threshold is None:
            pubs = m.n_items
            cfg = ProjectionConfig(CountingScheme.FRACTIONAL)
        else:
            pubs = int((units <= threshold).sum())
            cfg = ProjectionConfig(
                CountingScheme.FRACTIONAL, max_column_margin=threshold
            )
        _, pairs = count_link_pairs(m, threshold)
        fractional = float(project(m, cfg).row_totals().sum())
        return pubs, pairs, fractional

    pubs_total, pairs_total, frac_total = kept_stats(None)
    rows = []
    for threshold in [*thresholds, None]:
        if threshold is None:
            pubs, pairs, fractional = pubs_total, pairs_total, frac_total
        else:
            pubs, pairs, fractional = kept_stats(threshold)
        rows.append(
            SweepRow(
                threshold=threshold,
                publications_kept=pubs,
                publications_pct=_pct(pubs, pubs_total),
                link_pairs_kept=pairs,
                link_pairs_pct=_pct(pairs, pairs_total),
                fractional_weight_kept=fractional,
                fractional_weight_pct=_pct(fractional, frac_total),
            )
        )
    return rows


def rank_related(
    net: NetworkMatrix, focal: str, top_k: int
) -> list[tuple[str, float, int]]:
    """Units most strongly related to the focal unit.

    Sorted by weight descending, ties broken by ascending unit id; at most
    ``top_k`` entries. Zero-weight units never appear (they are unstored).
    """
    if focal not in net._index:
        raise ValueError(f"unknown focal unit {focal!r}")
    if top_k < 1:
        raise ValueError("top_k must be positive")
    ranked = sorted(net.neighbors(focal), key=lambda pair: (-pair[1], pair[0]))
    return [(uid, w, rank) for rank, (uid, w) in enumerate(ranked[:top_k], start=1)]


def contributions(
    m: IncidenceMatrix, unit_a: str, unit_b: str
) -> ContributionReport:
    """Per-cited-item decomposition of the link between two units.

    One row per column cited by both units, with the full-counting link
    count (the product of the two citation counts) and the fractional weight
    (the product divided by the column margin minus one, the margin being
    the item's citation total over all units in the analysis). Rows are
    sorted by full links descending, ties by item id ascending.
    """
    if m.kind not in CITATION_KINDS:
        raise ValueError("contribution decomposition requires a citation matrix")
    try:
        ia = m.row_ids.index(unit_a)
        ib = m.row_ids.index(unit_b)
    except ValueError as exc:
        raise ValueError(f"unknown unit in {(unit_a, unit_b)!r}") from exc
    cols_a, counts_a = m.row(ia)
    cols_b, counts_b = m.row(ib)
    common, pos_a, pos_b = np.intersect1d(cols_a, cols_b, return_indices=True)
    rows = []
    for k, ka, kb in zip(common.tolist(), pos_a.tolist(), pos_b.tolist()):
        ca = int(counts_a[ka])
        cb = int(counts_b[kb])
        margin = int(m.column_margin[k])
        rows.append(
            ContributionRow(
                item_id=m.col_ids[k],
                citations_from_a=ca,
                citations_from_b=cb,
                full_links=ca * cb,
                fractional_weight=ca * cb / (margin - 1.0),
            )
        )
    rows.sort(key=lambda row: (-row.full_links, row.item_id))
    return ContributionReport(
        unit_a=unit_a,
        unit_b=unit_b,
        rows=tuple(rows),
        total_full_links=sum(row.full_links for row in rows),
        total_fractional_weight=float(sum(row.fractional_weight for row in rows)),
    )
