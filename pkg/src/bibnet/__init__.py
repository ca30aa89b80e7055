"""Weighted bibliometric networks under full and fractional counting.

Builds co-authorship, bibliographic coupling and co-citation networks from a
publication corpus by projecting sparse unit-by-item incidence matrices, and
provides the diagnostics that show how the choice of counting scheme changes
the result (threshold sweeps, relatedness rankings, per-item link
decompositions).
"""

from .analyze import (
    ContributionReport,
    ContributionRow,
    SweepRow,
    contributions,
    count_link_pairs,
    rank_related,
    sweep,
)
from .core import (
    CountingScheme,
    IncidenceKind,
    IncidenceMatrix,
    NetworkKind,
    NetworkMatrix,
    PublicationRecord,
    UnitKind,
    UnitRegistry,
    record_units,
    registry_from_corpus,
)
from .export import (
    format_edgelist,
    format_pajek,
    format_records,
    format_weight,
    parse_edgelist,
    parse_records,
)
from .ingest import (
    CorpusFormatError,
    corpus_to_jsonl,
    derive_authorship,
    derive_citations_given,
    derive_citations_received,
    parse_corpus,
    parse_credit_file,
)
from .project import ProjectionConfig, project, project_matrix_form
from .synth import SynthConfig, generate

__version__ = "0.1.0"

__all__ = [
    "ContributionReport",
    "ContributionRow",
    "CorpusFormatError",
    "CountingScheme",
    "IncidenceKind",
    "IncidenceMatrix",
    "NetworkKind",
    "NetworkMatrix",
    "ProjectionConfig",
    "PublicationRecord",
    "SweepRow",
    "SynthConfig",
    "UnitKind",
    "UnitRegistry",
    "contributions",
    "corpus_to_jsonl",
    "count_link_pairs",
    "derive_authorship",
    "derive_citations_given",
    "derive_citations_received",
    "format_edgelist",
    "format_pajek",
    "format_records",
    "format_weight",
    "generate",
    "parse_corpus",
    "parse_credit_file",
    "parse_edgelist",
    "parse_records",
    "project",
    "project_matrix_form",
    "rank_related",
    "record_units",
    "registry_from_corpus",
    "sweep",
]
