"""Shared domain types: corpus records, unit registries, incidence and network matrices.

A bibliometric network is built in two steps. First a corpus is turned into a
sparse unit-by-item incidence matrix (who authored what, or who cited what).
Second the incidence matrix is projected onto a weighted unit-by-unit network
under a counting scheme. The types here are shared by both steps and are
immutable after construction, so they can be handed around freely.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence

import numpy as np
from scipy import sparse


class UnitKind(enum.Enum):
    """The entity whose network is being built (network nodes)."""

    AUTHOR = "author"
    AFFILIATION = "affiliation"
    VENUE = "venue"


class IncidenceKind(enum.Enum):
    """What the entries of an incidence matrix count."""

    AUTHORSHIP = "authorship"
    CITATIONS_GIVEN = "citations_given_by_unit"
    CITATIONS_RECEIVED = "citations_received_by_unit"


#: Incidence kinds whose entries are citation counts (may exceed 1).
CITATION_KINDS = frozenset(
    {IncidenceKind.CITATIONS_GIVEN, IncidenceKind.CITATIONS_RECEIVED}
)


class CountingScheme(enum.Enum):
    """Denominator applied to each unit pair contributed by a column.

    For a column with margin ``n`` and entries ``c_i``, the contribution of
    the column to the (i, j) link weight is ``c_i * c_j / d`` with

    * ``FULL``: d = 1
    * ``FRACTIONAL``: d = n - 1 (each action has total link weight 1)
    * ``FRACTIONAL_PLAIN``: d = n
    * ``FRACTIONAL_SQUARED``: d = n**2
    * ``FRACTIONAL_SELF_ADJUSTED``: d = n - c_i, which depends on the source
      unit, so the resulting network is in general asymmetric. Only defined
      for citation incidence matrices.
    """

    FULL = "full"
    FRACTIONAL = "fractional"
    FRACTIONAL_PLAIN = "frac-nk"
    FRACTIONAL_SQUARED = "frac-nk2"
    FRACTIONAL_SELF_ADJUSTED = "frac-self"


class NetworkKind(enum.Enum):
    COAUTHORSHIP = "coauthorship"
    COUPLING = "coupling"
    COCITATION = "cocitation"


#: Network kind produced by projecting each incidence kind.
NETWORK_KIND_FOR = {
    IncidenceKind.AUTHORSHIP: NetworkKind.COAUTHORSHIP,
    IncidenceKind.CITATIONS_GIVEN: NetworkKind.COUPLING,
    IncidenceKind.CITATIONS_RECEIVED: NetworkKind.COCITATION,
}


@dataclass(frozen=True)
class PublicationRecord:
    """One corpus entry.

    ``references`` hold cited-item identifiers, which need not themselves be
    corpus record ids. Sequences are stored as tuples; callers are expected
    to pass deduplicated lists (the corpus parser deduplicates on ingest).
    """

    id: str
    authors: tuple[str, ...]
    affiliations: tuple[str, ...] | None = None
    venue: str | None = None
    references: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if not self.id:
            raise ValueError("publication id must be nonempty")
        object.__setattr__(self, "authors", tuple(self.authors))
        if self.affiliations is not None:
            object.__setattr__(self, "affiliations", tuple(self.affiliations))
        object.__setattr__(self, "references", tuple(self.references))


@dataclass(frozen=True)
class UnitRegistry:
    """Bijection between unit ids and dense indices 0..N-1.

    Indices follow ascending lexicographic id order, which makes every
    downstream matrix and network invariant under corpus permutation.
    """

    kind: UnitKind
    ids: tuple[str, ...]
    index: Mapping[str, int] = field(repr=False)

    @classmethod
    def from_ids(cls, kind: UnitKind, ids: Iterable[str]) -> "UnitRegistry":
        ordered = tuple(sorted(set(ids)))
        return cls(kind=kind, ids=ordered, index={u: i for i, u in enumerate(ordered)})

    def __len__(self) -> int:
        return len(self.ids)

    def __contains__(self, unit_id: str) -> bool:
        return unit_id in self.index

    def __iter__(self) -> Iterator[str]:
        return iter(self.ids)


def record_units(record: PublicationRecord, kind: UnitKind) -> tuple[str, ...]:
    """The unit ids a record carries for the given kind (may be empty)."""
    if kind is UnitKind.AUTHOR:
        return record.authors
    if kind is UnitKind.AFFILIATION:
        return record.affiliations if record.affiliations is not None else ()
    return (record.venue,) if record.venue is not None else ()


def registry_from_corpus(
    corpus: Sequence[PublicationRecord], kind: UnitKind
) -> UnitRegistry:
    """Registry of all distinct unit ids of the requested kind, sorted ascending.

    Raises ValueError for affiliation or venue kinds when no record in the
    corpus carries that field at all.
    """
    if kind is not UnitKind.AUTHOR:
        carried = any(
            (record.affiliations is not None)
            if kind is UnitKind.AFFILIATION
            else (record.venue is not None)
            for record in corpus
        )
        if not carried:
            raise ValueError(f"unit kind {kind.value!r} absent from corpus")
    ids: set[str] = set()
    for record in corpus:
        ids.update(record_units(record, kind))
    return UnitRegistry.from_ids(kind, ids)


class IncidenceMatrix:
    """Sparse nonnegative-integer unit-by-item matrix with column margins.

    Rows are units (indexed per a registry), columns are items. The column
    margin ``n_k`` is the entry sum of column k: the number of authors of,
    citations received by, or citations given by item k, depending on
    ``kind``. Authorship matrices are 0/1. No explicit zeros are stored, so
    the number of stored entries in a column equals its distinct-unit count.
    """

    def __init__(
        self,
        entries,
        row_ids: Sequence[str],
        col_ids: Sequence[str],
        kind: IncidenceKind,
    ) -> None:
        csc = sparse.csc_array(entries, shape=(len(row_ids), len(col_ids)))
        if csc.dtype.kind == "f":
            if csc.data.size and not np.all(csc.data == np.trunc(csc.data)):
                raise ValueError("incidence entries must be integers")
        csc = csc.astype(np.int64)
        csc.sum_duplicates()
        csc.sort_indices()
        csc.eliminate_zeros()
        if csc.data.size and csc.data.min() < 0:
            raise ValueError("incidence entries must be nonnegative")
        if kind is IncidenceKind.AUTHORSHIP and csc.data.size and csc.data.max() > 1:
            raise ValueError("authorship entries must be 0 or 1")
        self._csc = csc
        self._csr = None
        self.row_ids = tuple(row_ids)
        self.col_ids = tuple(col_ids)
        self.kind = kind
        self.column_margin = np.asarray(csc.sum(axis=0)).ravel().astype(np.int64)

    @property
    def n_units(self) -> int:
        return len(self.row_ids)

    @property
    def n_items(self) -> int:
        return len(self.col_ids)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.n_units, self.n_items)

    def column(self, k: int) -> tuple[np.ndarray, np.ndarray]:
        """Row indices (ascending) and counts of the stored entries of column k."""
        lo, hi = self._csc.indptr[k], self._csc.indptr[k + 1]
        return self._csc.indices[lo:hi], self._csc.data[lo:hi]

    def row(self, i: int) -> tuple[np.ndarray, np.ndarray]:
        """Column indices (ascending) and counts of the stored entries of row i."""
        if self._csr is None:
            self._csr = self._csc.tocsr()
        lo, hi = self._csr.indptr[i], self._csr.indptr[i + 1]
        return self._csr.indices[lo:hi], self._csr.data[lo:hi]

    def units_per_column(self) -> np.ndarray:
        """Distinct contributing units per column (stored-entry counts)."""
        return np.diff(self._csc.indptr)

    def toarray(self) -> np.ndarray:
        return self._csc.toarray()


class NetworkMatrix:
    """Weighted unit-by-unit network with a zero diagonal.

    Symmetric networks store each linked unordered pair once under the index
    key ``(i, j)`` with i < j; the asymmetric self-adjusted scheme stores
    ordered pairs. Zero-weight pairs are never stored, and no diagonal entry
    is ever stored.
    """

    def __init__(
        self,
        unit_ids: Sequence[str],
        weights: Mapping[tuple[int, int], float],
        *,
        symmetric: bool,
        scheme: CountingScheme,
        kind: NetworkKind,
    ) -> None:
        self.unit_ids = tuple(unit_ids)
        self.symmetric = symmetric
        self.scheme = scheme
        self.kind = kind
        self._index = {u: i for i, u in enumerate(self.unit_ids)}
        checked: dict[tuple[int, int], float] = {}
        for (i, j), w in weights.items():
            if i == j:
                raise ValueError("diagonal entries are not allowed")
            if symmetric and i > j:
                raise ValueError("symmetric weights must be keyed with i < j")
            if w <= 0:
                raise ValueError("stored weights must be positive")
            checked[(int(i), int(j))] = float(w)
        self.weights = checked

    @property
    def n_units(self) -> int:
        return len(self.unit_ids)

    def __len__(self) -> int:
        return len(self.weights)

    def weight(self, a: str, b: str) -> float:
        """Link weight between two unit ids (0.0 if absent or a == b)."""
        i, j = self._index[a], self._index[b]
        if i == j:
            return 0.0
        if self.symmetric and i > j:
            i, j = j, i
        return self.weights.get((i, j), 0.0)

    def pairs(self) -> Iterator[tuple[str, str, float]]:
        """Stored pairs as (id_a, id_b, weight) in ascending index order."""
        for (i, j) in sorted(self.weights):
            yield self.unit_ids[i], self.unit_ids[j], self.weights[(i, j)]

    def neighbors(self, focal: str) -> list[tuple[str, float]]:
        """Units linked to the focal unit; for asymmetric networks, the
        weights of the focal unit's outgoing links."""
        f = self._index[focal]
        out: list[tuple[str, float]] = []
        for (i, j), w in self.weights.items():
            if i == f:
                out.append((self.unit_ids[j], w))
            elif j == f and self.symmetric:
                out.append((self.unit_ids[i], w))
        return out

    def row_totals(self) -> np.ndarray:
        """Per-unit total link weight, aligned with ``unit_ids``.

        For symmetric networks each stored pair contributes to both
        endpoints, so the sum over units counts every ordered pair, matching
        the row totals of the full N-by-N matrix.
        """
        totals = np.zeros(self.n_units)
        for (i, j), w in self.weights.items():
            totals[i] += w
            if self.symmetric:
                totals[j] += w
        return totals

    def total_weight(self) -> float:
        """Sum of stored link weights (unordered pairs when symmetric)."""
        return float(sum(self.weights.values()))

    def to_dense(self) -> np.ndarray:
        """Dense N-by-N weight matrix (mirrored when symmetric)."""
        dense = np.zeros((self.n_units, self.n_units))
        for (i, j), w in self.weights.items():
            dense[i, j] = w
            if self.symmetric:
                dense[j, i] = w
        return dense
