"""Projection of an incidence matrix onto a weighted unit network.

``project`` is the counting engine: it walks the columns of the incidence
matrix and accumulates, for every pair of units contributing to a column,
the pair's product of counts divided by the scheme's denominator.
``project_matrix_form`` computes the same full and fractional networks by
explicit dense matrix algebra and exists solely as an independent
cross-check of ``project``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import (
    CITATION_KINDS,
    CountingScheme,
    IncidenceKind,
    IncidenceMatrix,
    NETWORK_KIND_FOR,
    NetworkMatrix,
)


@dataclass(frozen=True)
class ProjectionConfig:
    """Counting scheme plus optional column filtering.

    ``max_column_margin`` skips columns whose distinct-unit count exceeds the
    threshold (for authorship matrices the distinct-unit count equals the
    column margin). ``deterministic`` pins the accumulation order contract;
    the current implementation is always sequential in ascending column
    order, so both settings produce identical results.
    """

    scheme: CountingScheme
    max_column_margin: int | None = None
    deterministic: bool = True

    def __post_init__(self) -> None:
        if self.max_column_margin is not None and self.max_column_margin < 2:
            raise ValueError("max_column_margin must be at least 2")


_PAIR_CACHE: dict[int, tuple[np.ndarray, np.ndarray]] = {}


def _pair_indices(t: int) -> tuple[np.ndarray, np.ndarray]:
    cached = _PAIR_CACHE.get(t)
    if cached is None:
        cached = np.triu_indices(t, k=1)
        _PAIR_CACHE[t] = cached
    return cached


def _check_scheme(m: IncidenceMatrix, scheme: CountingScheme) -> None:
    if (
        scheme is CountingScheme.FRACTIONAL_SELF_ADJUSTED
        and m.kind not in CITATION_KINDS
    ):
        raise ValueError(
            "the self-adjusted scheme is only defined for citation matrices"
        )


def _coalesce(
    ii: np.ndarray, jj: np.ndarray, ww: np.ndarray
) -> dict[tuple[int, int], float]:
    # Stable sort keeps contributions to one pair in ascending column order,
    # so per-pair sums are reproducible.
    order = np.lexsort((jj, ii))
    ii, jj, ww = ii[order], jj[order], ww[order]
    changed = (ii[1:] != ii[:-1]) | (jj[1:] != jj[:-1])
    starts = np.concatenate(([0], np.flatnonzero(changed) + 1))
    sums = np.add.reduceat(ww, starts)
    return dict(zip(zip(ii[starts].tolist(), jj[starts].tolist()), sums.tolist()))


def project(m: IncidenceMatrix, cfg: ProjectionConfig) -> NetworkMatrix:
    """Project an incidence matrix into a network under a counting scheme.

    Columns with margin below 2 provide no links and are skipped, as are
    columns whose distinct-unit count exceeds ``cfg.max_column_margin``.
    Symmetric schemes store each linked unordered pair once; the
    self-adjusted scheme stores ordered pairs and flags the network
    asymmetric. The diagonal is never accumulated.
    """
    _check_scheme(m, cfg.scheme)
    scheme = cfg.scheme
    self_adjusted = scheme is CountingScheme.FRACTIONAL_SELF_ADJUSTED
    margins = m.column_margin
    ii_parts: list[np.ndarray] = []
    jj_parts: list[np.ndarray] = []
    ww_parts: list[np.ndarray] = []
    for k in np.flatnonzero(margins >= 2):
        rows, counts = m.column(int(k))
        t = len(rows)
        if t < 2:
            continue
        if cfg.max_column_margin is not None and t > cfg.max_column_margin:
            continue
        n = float(margins[k])
        vals = counts.astype(np.float64)
        a, b = _pair_indices(t)
        products = vals[a] * vals[b]
        if self_adjusted:
            # c_ik = n_k is impossible here: a second contributing unit
            # exists, so every denominator is positive.
            assert np.all(vals < n)
            ii_parts.extend((rows[a], rows[b]))
            jj_parts.extend((rows[b], rows[a]))
            ww_parts.extend((products / (n - vals[a]), products / (n - vals[b])))
            continue
        if scheme is CountingScheme.FULL:
            weights = products
        elif scheme is CountingScheme.FRACTIONAL:
            weights = products / (n - 1.0)
        elif scheme is CountingScheme.FRACTIONAL_PLAIN:
            weights = products / n
        else:
            weights = products / (n * n)
        ii_parts.append(rows[a])
        jj_parts.append(rows[b])
        ww_parts.append(weights)
    if ii_parts:
        weights_map = _coalesce(
            np.concatenate(ii_parts),
            np.concatenate(jj_parts),
            np.concatenate(ww_parts),
        )
    else:
        weights_map = {}
    return NetworkMatrix(
        m.row_ids,
        weights_map,
        symmetric=not self_adjusted,
        scheme=scheme,
        kind=NETWORK_KIND_FOR[m.kind],
    )


def project_matrix_form(
    m: IncidenceMatrix, cfg: ProjectionConfig, dense_cap: int = 1_000_000
) -> NetworkMatrix:
    """Dense matrix-algebra cross-check of ``project``.

    Computes C C^T (full counting) or C diag(C^T 1 - 1)^-1 C^T (fractional
    counting) over the columns with margin at least 2, then zeroes the
    diagonal. Only supports the full and fractional schemes, no column
    threshold, and matrices up to ``dense_cap`` cells.
    """
    if cfg.scheme not in (CountingScheme.FULL, CountingScheme.FRACTIONAL):
        raise ValueError("matrix form supports only the full and fractional schemes")
    if cfg.max_column_margin is not None:
        raise ValueError("matrix form does not support a column threshold")
    if m.n_units * m.n_items > dense_cap:
        raise ValueError(
            f"oracle only: {m.n_units}x{m.n_items} exceeds the dense cap of "
            f"{dense_cap} cells"
        )
    keep = m.column_margin >= 2
    dense = m.toarray().astype(np.float64)[:, keep]
    if cfg.scheme is CountingScheme.FULL:
        net = dense @ dense.T
    else:
        margins = m.column_margin[keep].astype(np.float64)
        net = dense @ np.diag(1.0 / (margins - 1.0)) @ dense.T
    np.fill_diagonal(net, 0.0)
    upper_i, upper_j = np.nonzero(np.triu(net, k=1))
    weights_map = dict(
        zip(
            zip(upper_i.tolist(), upper_j.tolist()),
            net[upper_i, upper_j].tolist(),
        )
    )
    return NetworkMatrix(
        m.row_ids,
        weights_map,
        symmetric=True,
        scheme=cfg.scheme,
        kind=NETWORK_KIND_FOR[m.kind],
    )
