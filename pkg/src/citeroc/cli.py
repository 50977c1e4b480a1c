"""``citeroc`` command line.

Exit status: 0 on success, 1 on usage errors, 2 on data errors (unreadable
or invalid corpus, unknown entity, undefined metric).  Reports go to stdout,
diagnostics to stderr.
"""
from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
from contextlib import nullcontext
from typing import IO

from .baselines import compare, h_index, if2y
from .corpus import Corpus, EntityRef, Scope, ingest, read_records, write_records
from .engine import DEFAULT_BENCHMARK, MetricOptions, RocResult, roc, scope_rocs
from .errors import CiterocError, DataError, UndefinedMetricError, UsageError
from .portfolio import portfolio, roc_series
from .testkit import RefCounts, SynthParams, generate_records

log = logging.getLogger("citeroc")

EXIT_OK, EXIT_USAGE, EXIT_DATA = 0, 1, 2
FORMATS = ("table", "csv", "json-lines")
RANK_METRICS = ("roc", "citation_count", "h_index", "if2y")


class _Usage(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _Usage(f"{self.prog}: {message}")


def _year_range(text: str) -> tuple[int, int]:
    try:
        a, b = (int(x) for x in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected START:END years, got {text!r}") from None
    if a > b:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return a, b


def _entity(text: str) -> EntityRef:
    try:
        return EntityRef.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _int_range(text: str) -> tuple[int, int]:
    return _year_range(text)


# -- output --------------------------------------------------------------------

def _flatten(row: dict, prefix: str = "") -> dict:
    out = {}
    for key, value in row.items():
        if key == "paper_rocs":
            continue
        if isinstance(value, dict):
            out.update(_flatten(value, f"{prefix}{key}_"))
        else:
            out[f"{prefix}{key}"] = value
    return out


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _columns(rows: list[dict]) -> list[str]:
    cols: dict[str, None] = {}
    for row in rows:
        cols.update(dict.fromkeys(row))
    return list(cols)


def emit(rows: list[dict], fmt: str, out: IO[str]) -> None:
    if fmt == "json-lines":
        for row in rows:
            out.write(json.dumps(row, ensure_ascii=False) + "\n")
        return
    flat = [_flatten(r) for r in rows]
    cols = _columns(flat)
    if fmt == "csv":
        writer = csv.writer(out, lineterminator="\r\n")
        writer.writerow(cols)
        for row in flat:
            writer.writerow([_cell(row.get(c)) for c in cols])
        return
    cells = [[_table_cell(row.get(c)) for c in cols] for row in flat]
    widths = [max([len(c)] + [len(r[i]) for r in cells]) for i, c in enumerate(cols)]
    out.write("  ".join(c.ljust(w) for c, w in zip(cols, widths)).rstrip() + "\n")
    for r in cells:
        out.write("  ".join(v.ljust(w) for v, w in zip(r, widths)).rstrip() + "\n")


def _table_cell(value) -> str:
    if isinstance(value, float):
        return f"{value:.6g}"
    return _cell(value) if value is not None else "-"


def _roc_row(entity, result: RocResult, **extra) -> dict:
    return {"entity": str(entity), **extra, **result.to_dict()}


# -- commands ------------------------------------------------------------------

def _load(path: str) -> Corpus:
    try:
        return ingest(read_records(path))
    except OSError as exc:
        raise DataError(f"cannot read corpus {path!r}: {exc.strerror or exc}") from None


def _options(args) -> MetricOptions:
    weights = None
    if getattr(args, "weights", None):
        try:
            with open(args.weights, encoding="utf-8") as fh:
                weights = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise DataError(f"cannot read weight table {args.weights!r}: {exc}") from None
        if not isinstance(weights, dict):
            raise DataError("weight table must be a JSON object mapping journal id to weight")
    return MetricOptions(
        exclude_self_citations=args.exclude_self,
        weight_table=weights,
        period=args.period,
        as_of_year=args.as_of,
        benchmark=args.benchmark,
    )


def cmd_ingest(args) -> list[dict]:
    corpus = _load(args.corpus)
    return [corpus.validation_report.to_dict()]


def cmd_roc(args) -> list[dict]:
    corpus = _load(args.corpus)
    opts = _options(args)
    view = corpus.view()
    return [_roc_row(e, roc(view, e, opts)) for e in args.entity]


def cmd_rank(args) -> list[dict]:
    corpus = _load(args.corpus)
    opts = _options(args)
    scope = Scope(args.scope)
    view = corpus.view(opts.as_of_year)
    scored: list[tuple[str, float, dict]] = []
    if args.metric == "roc":
        for ident, result in scope_rocs(view, scope, opts).items():
            scored.append((ident, result.value, result.to_dict()))
    elif args.metric == "citation_count":
        counts = scope_rocs(view, scope, MetricOptions())
        scored = [(ident, int(r.numerator), {}) for ident, r in counts.items()]
    elif args.metric == "h_index":
        if scope not in (Scope.RESEARCHER, Scope.JOURNAL):
            raise UsageError("h_index ranking needs --scope researcher or journal")
        for ident in corpus.entity_ids(scope):
            entity = EntityRef(scope, ident)
            if view.contains(entity):
                scored.append((ident, h_index(view, entity), {}))
    else:
        if scope is not Scope.JOURNAL or args.census_year is None:
            raise UsageError("if2y ranking needs --scope journal and --census-year")
        for ident in corpus.entity_ids(scope):
            try:
                scored.append((ident, if2y(view, EntityRef(scope, ident), args.census_year), {}))
            except UndefinedMetricError:
                continue
    scored.sort(key=lambda item: (-item[1], item[0]))
    if args.top is not None:
        scored = scored[: args.top]
    return [
        {"rank": i, "entity": f"{scope.value}:{ident}", "metric": args.metric, "score": score, **extra}
        for i, (ident, score, extra) in enumerate(scored, 1)
    ]


def cmd_series(args) -> list[dict]:
    corpus = _load(args.corpus)
    opts = _options(args)
    series = roc_series(corpus, args.entity, args.years, opts)
    return [_roc_row(series.entity, r, mode=series.mode.value, year=y) for y, r in series.points]


def cmd_stats(args) -> list[dict]:
    corpus = _load(args.corpus)
    opts = _options(args)
    rows = []
    for entity in args.entity:
        stats = portfolio(corpus.view(), entity, opts)
        rows.append({
            "entity": str(entity),
            "roc_max": stats.roc_max,
            "high_roc_count": stats.high_roc_count,
            "high_roc_ratio_percent": stats.high_roc_ratio_percent,
            "total_papers": stats.total_papers,
            "paper_rocs": dict(sorted(stats.paper_rocs.items())),
        })
    return rows


def cmd_compare(args) -> list[dict]:
    corpus = _load(args.corpus)
    opts = _options(args)
    return [row.to_dict() for row in compare(corpus.view(), args.entity, opts, args.census_year)]


def cmd_synth(args) -> list[dict]:
    params = SynthParams(
        n_papers=args.papers,
        year_range=args.years,
        n_authors=args.authors,
        n_journals=args.journals,
        n_publishers=args.publishers,
        refs_per_paper=RefCounts(args.refs[0], args.refs[1]),
        review_fraction=args.review_fraction,
        external_ref_rate=args.external_rate,
        seed=args.seed,
    )
    records = generate_records(params)
    target = open(args.out, "w", encoding="utf-8", newline="\n") if args.out else nullcontext(args.stdout)
    with target as fh:
        n = write_records(records, fh)
    log.info("wrote %d papers", n)
    return []


# -- parser --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="citeroc", description="Return-on-citation metrics for citation corpora.")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, entity: str | None = "append"):
        p.add_argument("--corpus", required=True, help="line-delimited JSON corpus file")
        p.add_argument("--format", choices=FORMATS, default="table")
        if entity == "append":
            p.add_argument("--entity", type=_entity, action="append", required=True,
                           help="scope:id, e.g. researcher:A1 (repeatable)")
        elif entity == "one":
            p.add_argument("--entity", type=_entity, required=True, help="scope:id")

    def metric_flags(p):
        p.add_argument("--exclude-self", action="store_true", help="drop self-citations from citations received")
        p.add_argument("--weights", metavar="FILE", help="JSON object mapping citing journal id to weight")
        p.add_argument("--period", type=_year_range, metavar="A:B", help="only papers published in A..B")
        p.add_argument("--as-of", type=int, metavar="YEAR", help="evaluate the corpus as of YEAR")
        p.add_argument("--benchmark", type=float, default=DEFAULT_BENCHMARK,
                       help="ROC above this value is outstanding (default 1.0)")

    p = sub.add_parser("ingest", help="validate a corpus and print its validation report")
    common(p, entity=None)
    p.set_defaults(func=cmd_ingest)

    p = sub.add_parser("roc", help="ROC of one or more entities")
    common(p)
    metric_flags(p)
    p.set_defaults(func=cmd_roc)

    p = sub.add_parser("rank", help="rank every entity of a scope")
    common(p, entity=None)
    metric_flags(p)
    p.add_argument("--scope", choices=[s.value for s in Scope], required=True)
    p.add_argument("--metric", choices=RANK_METRICS, default="roc")
    p.add_argument("--top", type=int, metavar="N")
    p.add_argument("--census-year", type=int, metavar="YEAR", help="census year for if2y")
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("series", help="ROC of an entity at the end of each year")
    common(p, entity="one")
    metric_flags(p)
    p.add_argument("--years", type=_year_range, required=True, metavar="A:B")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("stats", help="ROC_max and High-ROC count/ratio of an entity's papers")
    common(p)
    metric_flags(p)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("compare", help="ROC next to citation count, h-index and impact factor")
    common(p)
    metric_flags(p)
    p.add_argument("--census-year", type=int, metavar="YEAR", help="census year for the journal impact factor")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("synth", help="write a seeded synthetic corpus")
    p.add_argument("--out", metavar="FILE", help="output file (default stdout)")
    p.add_argument("--papers", type=int, default=100)
    p.add_argument("--years", type=_year_range, default=(2000, 2020), metavar="A:B")
    p.add_argument("--authors", type=int, default=40)
    p.add_argument("--journals", type=int, default=8)
    p.add_argument("--publishers", type=int, default=3)
    p.add_argument("--refs", type=_int_range, default=(0, 10), metavar="MIN:MAX")
    p.add_argument("--review-fraction", type=float, default=0.1)
    p.add_argument("--external-rate", type=float, default=0.1)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_synth)
    return parser


def run(argv: list[str] | None = None, out: IO[str] | None = None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _Usage as exc:
        parser.print_usage(sys.stderr)
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    args.stdout = out
    try:
        rows = args.func(args)
    except UsageError as exc:
        print(f"citeroc {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DataError as exc:
        print(f"citeroc {args.command}: {exc}", file=sys.stderr)
        return EXIT_DATA
    except CiterocError as exc:
        print(f"citeroc {args.command}: {exc}", file=sys.stderr)
        return EXIT_DATA
    if rows:
        emit(rows, getattr(args, "format", "table"), out)
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
