"""Corpus file parsing and derivation of the three incidence-matrix flavors.

The corpus format is JSON Lines: one object per nonempty line with fields
``id`` (string, required), ``authors`` (array of strings, required, may be
empty), ``affiliations`` (array of strings, optional), ``venue`` (string,
optional) and ``references`` (array of strings, optional). Unknown fields
are ignored. A co-citation credit sidecar holds ``item-id<TAB>unit-id``
lines mapping cited items to the units credited for them.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Mapping, Sequence

import numpy as np
from scipy import sparse

from .core import (
    IncidenceKind,
    IncidenceMatrix,
    PublicationRecord,
    UnitRegistry,
    record_units,
)


class CorpusFormatError(ValueError):
    """A corpus or credit file could not be parsed."""


def _dedup(seq: Sequence[str]) -> tuple[str, ...]:
    # preserves first occurrence
    return tuple(dict.fromkeys(seq))


def _string_list(value, name: str, lineno: int) -> list[str]:
    if not isinstance(value, list) or any(
        not isinstance(x, str) or not x for x in value
    ):
        raise CorpusFormatError(
            f"line {lineno}: field {name!r} must be an array of nonempty strings"
        )
    return value


def _parse_line(line: str, lineno: int) -> PublicationRecord:
    try:
        obj = json.loads(line)
    except json.JSONDecodeError as exc:
        raise CorpusFormatError(f"line {lineno}: invalid JSON ({exc.msg})") from exc
    if not isinstance(obj, dict):
        raise CorpusFormatError(f"line {lineno}: record must be an object")
    rec_id = obj.get("id")
    if not isinstance(rec_id, str) or not rec_id:
        raise CorpusFormatError(f"line {lineno}: field 'id' must be a nonempty string")
    if "authors" not in obj:
        raise CorpusFormatError(f"line {lineno}: field 'authors' is required")
    authors = _dedup(_string_list(obj["authors"], "authors", lineno))
    affiliations = None
    if obj.get("affiliations") is not None:
        affiliations = _dedup(_string_list(obj["affiliations"], "affiliations", lineno))
    venue = obj.get("venue")
    if venue is not None and (not isinstance(venue, str) or not venue):
        raise CorpusFormatError(f"line {lineno}: field 'venue' must be a nonempty string")
    references: tuple[str, ...] = ()
    if obj.get("references") is not None:
        references = _dedup(_string_list(obj["references"], "references", lineno))
    return PublicationRecord(
        id=rec_id,
        authors=authors,
        affiliations=affiliations,
        venue=venue,
        references=references,
    )


def parse_corpus(path: str | Path) -> list[PublicationRecord]:
    """Parse a corpus file into records, in file order.

    Author, affiliation and reference lists are deduplicated preserving
    first occurrence. Raises CorpusFormatError with a 1-based line number on
    malformed lines and on duplicate publication ids.
    """
    records: list[PublicationRecord] = []
    seen: dict[str, int] = {}
    with open(path, encoding="utf-8") as handle:
        for lineno, line in enumerate(handle, start=1):
            if not line.strip():
                continue
            record = _parse_line(line, lineno)
            if record.id in seen:
                raise CorpusFormatError(
                    f"line {lineno}: duplicate publication id {record.id!r} "
                    f"(first seen on line {seen[record.id]})"
                )
            seen[record.id] = lineno
            records.append(record)
    return records


def record_to_json(record: PublicationRecord) -> str:
    """One corpus line for a record (no trailing newline)."""
    obj: dict = {"id": record.id, "authors": list(record.authors)}
    if record.affiliations is not None:
        obj["affiliations"] = list(record.affiliations)
    if record.venue is not None:
        obj["venue"] = record.venue
    obj["references"] = list(record.references)
    return json.dumps(obj, separators=(",", ":"))


def corpus_to_jsonl(records: Sequence[PublicationRecord]) -> str:
    """Serialize records to the corpus file format."""
    return "".join(record_to_json(r) + "\n" for r in records)


def parse_credit_file(path: str | Path) -> dict[str, tuple[str, ...]]:
    """Parse a credit sidecar of ``item-id<TAB>unit-id`` lines.

    Returns item id -> credited unit ids (deduplicated, file order).
    """
    credits: dict[str, list[str]] = {}
    with open(path, encoding="utf-8") as handle:
        for lineno, line in enumerate(handle, start=1):
            stripped = line.rstrip("\n")
            if not stripped.strip():
                continue
            parts = stripped.split("\t")
            if len(parts) != 2 or not parts[0] or not parts[1]:
                raise CorpusFormatError(
                    f"line {lineno}: expected 'item-id<TAB>unit-id'"
                )
            credits.setdefault(parts[0], []).append(parts[1])
    return {item: _dedup(units) for item, units in credits.items()}


def _build(
    rows: list[int],
    cols: list[int],
    data: list[int],
    row_ids: Sequence[str],
    col_ids: Sequence[str],
    kind: IncidenceKind,
) -> IncidenceMatrix:
    coo = sparse.coo_array(
        (np.asarray(data, dtype=np.int64), (rows, cols)),
        shape=(len(row_ids), len(col_ids)),
    )
    return IncidenceMatrix(coo, row_ids=row_ids, col_ids=col_ids, kind=kind)


def derive_authorship(
    corpus: Sequence[PublicationRecord], registry: UnitRegistry
) -> IncidenceMatrix:
    """0/1 unit-by-record matrix: entry (i, k) is 1 iff unit i is on record k.

    Columns follow record order; the column margin is the record's
    deduplicated unit count.
    """
    rows: list[int] = []
    cols: list[int] = []
    for k, record in enumerate(corpus):
        for unit in _dedup(record_units(record, registry.kind)):
            rows.append(registry.index[unit])
            cols.append(k)
    return _build(
        rows,
        cols,
        [1] * len(rows),
        registry.ids,
        [r.id for r in corpus],
        IncidenceKind.AUTHORSHIP,
    )


def derive_citations_given(
    corpus: Sequence[PublicationRecord], registry: UnitRegistry
) -> IncidenceMatrix:
    """Unit-by-cited-item matrix of citations given.

    Entry (i, k) counts the corpus records carrying unit i that cite item k;
    every unit of a multi-unit citing record counts the citation once. The
    column margin is the number of citations the item received from all
    units in the registry. Columns are the distinct cited item ids, sorted
    ascending; cited items need not be corpus records.
    """
    items = sorted({ref for record in corpus for ref in record.references})
    item_index = {item: k for k, item in enumerate(items)}
    rows: list[int] = []
    cols: list[int] = []
    for record in corpus:
        units = _dedup(record_units(record, registry.kind))
        for ref in record.references:
            k = item_index[ref]
            for unit in units:
                rows.append(registry.index[unit])
                cols.append(k)
    return _build(
        rows,
        cols,
        [1] * len(rows),
        registry.ids,
        items,
        IncidenceKind.CITATIONS_GIVEN,
    )


def derive_citations_received(
    corpus: Sequence[PublicationRecord],
    registry: UnitRegistry,
    credits: Mapping[str, Sequence[str]] | None = None,
) -> IncidenceMatrix:
    """Unit-by-citing-record matrix of citations received.

    Entry (i, k) counts the references of record k credited to unit i.
    Cited items that are corpus records are credited to their own unit list
    by default; ``credits`` overrides the credit list per item and supplies
    credits for external items. Credited units not in the registry are not
    part of the analysis and contribute nothing, as do cited items with no
    credit mapping at all. Columns follow record order.
    """
    effective: dict[str, tuple[str, ...]] = {
        record.id: _dedup(record_units(record, registry.kind)) for record in corpus
    }
    if credits:
        for item, units in credits.items():
            effective[item] = _dedup(units)
    rows: list[int] = []
    cols: list[int] = []
    for k, record in enumerate(corpus):
        for ref in record.references:
            for unit in effective.get(ref, ()):
                idx = registry.index.get(unit)
                if idx is not None:
                    rows.append(idx)
                    cols.append(k)
    return _build(
        rows,
        cols,
        [1] * len(rows),
        registry.ids,
        [r.id for r in corpus],
        IncidenceKind.CITATIONS_RECEIVED,
    )
