"""Command-line driver tying ingest, projection, analysis and export together.

Exit codes: 0 on success, 1 on usage errors (bad flags, incompatible
options), 2 on data errors (unreadable or malformed input, unknown ids).
All behavior is flag-driven; no environment variables are consulted.
"""

from __future__ import annotations

import argparse
import sys

from .analyze import contributions, rank_related, sweep
from .core import (
    CountingScheme,
    NetworkKind,
    UnitKind,
    registry_from_corpus,
)
from .export import FORMATTERS, format_weight
from .ingest import (
    CorpusFormatError,
    corpus_to_jsonl,
    derive_authorship,
    derive_citations_given,
    derive_citations_received,
    parse_corpus,
    parse_credit_file,
)
from .project import ProjectionConfig, project
from .synth import SynthConfig, generate

USAGE_ERROR = 1
DATA_ERROR = 2


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on usage errors; this CLI reserves 2 for
    # data errors.
    def error(self, message):
        self.exit(USAGE_ERROR, f"{self.prog}: error: {message}\n")


def _int_pair(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError("expected MIN,MAX")
    return int(parts[0]), int(parts[1])


def _int_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part]
    except ValueError as exc:
        raise argparse.ArgumentTypeError("expected a comma-separated integer list") from exc


def _add_corpus_flags(sub: argparse.ArgumentParser, with_network: bool = True) -> None:
    sub.add_argument("--input", required=True, help="corpus file (JSON lines)")
    sub.add_argument(
        "--unit",
        choices=[k.value for k in UnitKind],
        default=UnitKind.AUTHOR.value,
        help="unit of analysis (default: author)",
    )
    if with_network:
        sub.add_argument(
            "--network",
            choices=[k.value for k in NetworkKind],
            default=NetworkKind.COAUTHORSHIP.value,
            help="network type (default: coauthorship)",
        )
        sub.add_argument(
            "--counting",
            choices=[s.value for s in CountingScheme],
            default=CountingScheme.FULL.value,
            help="counting scheme (default: full)",
        )
        sub.add_argument(
            "--credits",
            help="co-citation credit sidecar (item-id<TAB>unit-id lines)",
        )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bibnet", description=__doc__)
    subs = parser.add_subparsers(dest="command", required=True)

    build = subs.add_parser("build", parents=[], help="construct and export a network")
    _add_corpus_flags(build)
    build.add_argument("--max-coauthors", type=int, help="skip columns with more contributing units")
    build.add_argument("--output", required=True, help="output file path")
    build.add_argument(
        "--format", choices=sorted(FORMATTERS), default="edgelist", help="output format"
    )

    rank = subs.add_parser("rank", help="units most related to a focal unit")
    _add_corpus_flags(rank)
    rank.add_argument("--focal", required=True, help="focal unit id")
    rank.add_argument("--top", type=int, default=10, help="number of entries (default: 10)")

    sweep_cmd = subs.add_parser("sweep", help="threshold sweep of link counts")
    _add_corpus_flags(sweep_cmd, with_network=False)
    sweep_cmd.add_argument(
        "--thresholds", required=True, type=_int_list, help="comma-separated thresholds"
    )

    contrib = subs.add_parser(
        "contributions", help="per-item decomposition of one unit pair's link"
    )
    _add_corpus_flags(contrib)
    contrib.add_argument("--focal", required=True, help="first unit id")
    contrib.add_argument("--other", required=True, help="second unit id")

    synth = subs.add_parser("synth", help="generate a synthetic corpus")
    synth.add_argument("--seed", type=int, required=True)
    synth.add_argument("--units", type=int, required=True)
    synth.add_argument("--records", type=int, required=True)
    synth.add_argument("--p-single", type=float, default=0.7)
    synth.add_argument("--team-mean", type=float, default=3.0)
    synth.add_argument("--hyper-fraction", type=float, default=0.0)
    synth.add_argument("--hyper-range", type=_int_pair, default=(100, 150))
    synth.add_argument("--refs-range", type=_int_pair, default=(0, 0))
    synth.add_argument("--zipf", type=float, default=1.0)
    synth.add_argument("--output", required=True)

    return parser


def _incidence(args):
    corpus = parse_corpus(args.input)
    unit_kind = UnitKind(args.unit)
    registry = registry_from_corpus(corpus, unit_kind)
    network_kind = NetworkKind(getattr(args, "network", "coauthorship"))
    if network_kind is NetworkKind.COAUTHORSHIP:
        matrix = derive_authorship(corpus, registry)
    elif network_kind is NetworkKind.COUPLING:
        matrix = derive_citations_given(corpus, registry)
    else:
        credits = parse_credit_file(args.credits) if getattr(args, "credits", None) else None
        matrix = derive_citations_received(corpus, registry, credits)
    return registry, matrix


def _scheme(args) -> CountingScheme:
    return CountingScheme(args.counting)


def cmd_build(args) -> int:
    scheme = _scheme(args)
    if (
        scheme is CountingScheme.FRACTIONAL_SELF_ADJUSTED
        and NetworkKind(args.network) is NetworkKind.COAUTHORSHIP
    ):
        print("bibnet: error: frac-self requires a citation network", file=sys.stderr)
        return USAGE_ERROR
    registry, matrix = _incidence(args)
    cfg = ProjectionConfig(scheme, max_column_margin=args.max_coauthors)
    net = project(matrix, cfg)
    with open(args.output, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(FORMATTERS[args.format](net))
    print(
        f"units={net.n_units} columns={matrix.n_items} links={len(net)} "
        f"total_weight={format_weight(net.total_weight(), scheme)}"
    )
    return 0


def cmd_rank(args) -> int:
    scheme = _scheme(args)
    if (
        scheme is CountingScheme.FRACTIONAL_SELF_ADJUSTED
        and NetworkKind(args.network) is NetworkKind.COAUTHORSHIP
    ):
        print("bibnet: error: frac-self requires a citation network", file=sys.stderr)
        return USAGE_ERROR
    if args.top < 1:
        print("bibnet: error: --top must be positive", file=sys.stderr)
        return USAGE_ERROR
    _, matrix = _incidence(args)
    net = project(matrix, ProjectionConfig(scheme))
    for unit_id, weight, rank in rank_related(net, args.focal, args.top):
        print(f"{rank}\t{unit_id}\t{format_weight(weight, scheme)}")
    return 0


def cmd_sweep(args) -> int:
    thresholds = args.thresholds
    if not thresholds or any(
        b <= a for a, b in zip(thresholds, thresholds[1:])
    ) or thresholds[0] < 1:
        print("bibnet: error: thresholds must be strictly increasing and positive",
              file=sys.stderr)
        return USAGE_ERROR
    _, matrix = _incidence(args)
    print("threshold\tpubs\tpubs%\tpairs\tpairs%\tfrac_weight\tfrac_weight%")
    for row in sweep(matrix, thresholds):
        label = "none" if row.threshold is None else str(row.threshold)
        print(
            f"{label}\t{row.publications_kept}\t{row.publications_pct:.2f}\t"
            f"{row.link_pairs_kept}\t{row.link_pairs_pct:.2f}\t"
            f"{row.fractional_weight_kept:.6f}\t{row.fractional_weight_pct:.2f}"
        )
    return 0


def cmd_contributions(args) -> int:
    if NetworkKind(args.network) is NetworkKind.COAUTHORSHIP:
        print("bibnet: error: contributions requires a citation network",
              file=sys.stderr)
        return USAGE_ERROR
    _, matrix = _incidence(args)
    report = contributions(matrix, args.focal, args.other)
    print("item\tcitations_a\tcitations_b\tfull_links\tfractional_weight")
    for row in report.rows:
        print(
            f"{row.item_id}\t{row.citations_from_a}\t{row.citations_from_b}\t"
            f"{row.full_links}\t{row.fractional_weight:.1f}"
        )
    print(
        f"total\t\t\t{report.total_full_links}\t"
        f"{report.total_fractional_weight:.1f}"
    )
    return 0


def cmd_synth(args) -> int:
    cfg = SynthConfig(
        seed=args.seed,
        n_units=args.units,
        n_records=args.records,
        p_single=args.p_single,
        geometric_mean_small=args.team_mean,
        hyper_fraction=args.hyper_fraction,
        hyper_size_range=args.hyper_range,
        reference_count_range=args.refs_range,
        citation_skew=args.zipf,
    )
    records = generate(cfg)
    with open(args.output, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(corpus_to_jsonl(records))
    print(f"records={len(records)}")
    return 0


_COMMANDS = {
    "build": cmd_build,
    "rank": cmd_rank,
    "sweep": cmd_sweep,
    "contributions": cmd_contributions,
    "synth": cmd_synth,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (CorpusFormatError, ValueError, OSError) as exc:
        print(f"bibnet: error: {exc}", file=sys.stderr)
        return DATA_ERROR


if __name__ == "__main__":
    sys.exit(main())
