"""Shared corpus builders and reference oracles for the test suite.

The oracles here are deliberately naive (dense arrays, explicit loops over
every column and unit pair) so they stay independent of the sparse
accumulation path they are used to check.
"""

import numpy as np

from bibnet import IncidenceMatrix, PublicationRecord
from bibnet.core import CountingScheme, IncidenceKind

# Four researchers, three publications: P1 by R1+R2+R3, P2 by R1+R3,
# P3 by R2+R4. Authorship margins (3, 2, 2).
WORKED_AUTHORSHIP_CORPUS = [
    PublicationRecord("P1", ("R1", "R2", "R3")),
    PublicationRecord("P2", ("R1", "R3")),
    PublicationRecord("P3", ("R2", "R4")),
]

# Five researchers citing four publications; entry (i, k) is the number of
# records by researcher i citing item k. Margins (6, 4, 3, 2).
WORKED_CITATION_DENSE = np.array(
    [
        [3, 1, 2, 0],
        [2, 0, 1, 0],
        [1, 2, 0, 0],
        [0, 0, 0, 1],
        [0, 1, 0, 1],
    ],
    dtype=np.int64,
)

WORKED_CITATION_UNITS = ["R1", "R2", "R3", "R4", "R5"]
WORKED_CITATION_ITEMS = ["P1", "P2", "P3", "P4"]


def worked_citation_matrix() -> IncidenceMatrix:
    return IncidenceMatrix(
        WORKED_CITATION_DENSE,
        WORKED_CITATION_UNITS,
        WORKED_CITATION_ITEMS,
        IncidenceKind.CITATIONS_GIVEN,
    )


def worked_citation_corpus() -> list[PublicationRecord]:
    """Single-author records whose citations-given matrix is the worked one.

    Researcher i gets one record per citation, each citing one item, so the
    derived matrix reproduces WORKED_CITATION_DENSE exactly.
    """
    records = []
    serial = 0
    for i, unit in enumerate(WORKED_CITATION_UNITS):
        for k, item in enumerate(WORKED_CITATION_ITEMS):
            for _ in range(int(WORKED_CITATION_DENSE[i, k])):
                serial += 1
                records.append(
                    PublicationRecord(f"c{serial:03d}", (unit,), references=(item,))
                )
    return records


def scheme_denominator(scheme: CountingScheme, margin: float, c_source: float) -> float:
    if scheme is CountingScheme.FULL:
        return 1.0
    if scheme is CountingScheme.FRACTIONAL:
        return margin - 1.0
    if scheme is CountingScheme.FRACTIONAL_PLAIN:
        return margin
    if scheme is CountingScheme.FRACTIONAL_SQUARED:
        return margin * margin
    return margin - c_source


def dense_pair_oracle(
    dense: np.ndarray, scheme: CountingScheme, max_units: int | None = None
) -> np.ndarray:
    """Ordered-pair projection by brute force over (column, i, j) triples."""
    n_units, n_items = dense.shape
    out = np.zeros((n_units, n_units))
    for k in range(n_items):
        col = dense[:, k].astype(np.float64)
        margin = col.sum()
        if margin < 2:
            continue
        if max_units is not None and np.count_nonzero(col) > max_units:
            continue
        for i in range(n_units):
            if col[i] == 0:
                continue
            for j in range(n_units):
                if j == i or col[j] == 0:
                    continue
                out[i, j] += col[i] * col[j] / scheme_denominator(scheme, margin, col[i])
    return out


def random_authorship_dense(rng: np.random.Generator, n: int, m: int) -> np.ndarray:
    dense = (rng.random((n, m)) < 0.35).astype(np.int64)
    return dense


def random_citation_dense(rng: np.random.Generator, n: int, m: int) -> np.ndarray:
    dense = rng.integers(0, 5, size=(n, m))
    dense[rng.random((n, m)) < 0.5] = 0
    return dense.astype(np.int64)


def random_corpus(rng: np.random.Generator, n_records: int = 20) -> list[PublicationRecord]:
    units = [f"A{i:02d}" for i in range(12)]
    items = [f"X{i:02d}" for i in range(15)]
    records = []
    for r in range(n_records):
        n_auth = int(rng.integers(1, 5))
        authors = tuple(
            units[i] for i in sorted(rng.choice(len(units), n_auth, replace=False))
        )
        n_ref = int(rng.integers(0, 6))
        refs = tuple(
            items[i] for i in sorted(rng.choice(len(items), n_ref, replace=False))
        )
        records.append(PublicationRecord(f"P{r:03d}", authors, references=refs))
    return records
