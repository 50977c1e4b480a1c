"""Seeded synthetic corpora and a brute-force oracle for equivalence testing.

The oracle deliberately works on plain lists of :class:`PaperRecord` and
recomputes every metric by scanning all papers and all references.  It never
touches the numpy indexes of :class:`~citeroc.corpus.Corpus`, so agreement
between the two is meaningful.
"""
from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field

import numpy as np

from .corpus import EXTERNAL, EXTERNAL_CLASSES, INTERNAL, Corpus, EntityRef, PaperRecord, Reference, Scope, ingest
from .engine import MetricOptions, RocResult
from .errors import EmptyPortfolioError, EntityLookupError, GenerationError, UndefinedMetricError, UsageError
from .portfolio import PortfolioStats

_NON_REVIEW_TYPES = ("research", "letter", "commentary", "other")
_NON_REVIEW_PROBS = (0.85, 0.05, 0.05, 0.05)


@dataclass(frozen=True)
class RefCounts:
    """How many references each paper makes.

    Non-review papers draw uniformly from ``[min, split]`` and reviews from
    ``[split, max]``; ``split`` defaults to the midpoint, so reviews cite more.
    """

    min: int = 0
    max: int = 10
    split: int | None = None

    @property
    def midpoint(self) -> int:
        return (self.min + self.max + 1) // 2 if self.split is None else self.split


@dataclass(frozen=True)
class SynthParams:
    n_papers: int = 100
    year_range: tuple[int, int] = (2000, 2020)
    n_authors: int = 40
    n_journals: int = 8
    n_publishers: int = 3
    refs_per_paper: RefCounts = field(default_factory=RefCounts)
    review_fraction: float = 0.1
    external_ref_rate: float = 0.1
    max_authors_per_paper: int = 4
    seed: int = 0

    def validate(self) -> None:
        lo, hi = self.year_range
        rc = self.refs_per_paper
        problems = []
        if self.n_papers < 1:
            problems.append("n_papers must be positive")
        if lo > hi:
            problems.append(f"year_range {lo}:{hi} is empty")
        if min(self.n_authors, self.n_journals, self.n_publishers, self.max_authors_per_paper) < 1:
            problems.append("author/journal/publisher counts must be positive")
        if not (0 <= rc.min <= rc.midpoint <= rc.max):
            problems.append(f"need 0 <= min <= split <= max for refs_per_paper, got {rc}")
        for name in ("review_fraction", "external_ref_rate"):
            if not 0.0 <= getattr(self, name) <= 1.0:
                problems.append(f"{name} must lie in [0, 1]")
        if not 0 <= self.seed < 2**64:
            problems.append("seed must be a 64-bit unsigned integer")
        if problems:
            raise GenerationError("; ".join(problems))


def generate_records(params: SynthParams) -> Iterator[PaperRecord]:
    """Yield a deterministic, temporally acyclic corpus in publication-year order.

    Papers only cite papers from strictly earlier years.  When a paper wants
    more internal references than there are earlier papers, the shortfall
    becomes external references, unless ``external_ref_rate`` is 0 (a closed
    corpus was asked for) in which case the paper simply cites fewer works;
    a ``refs_per_paper.min`` that cannot be met that way is an error.
    """
    params.validate()
    n = params.n_papers
    rng = np.random.default_rng(params.seed)
    years = np.sort(rng.integers(params.year_range[0], params.year_range[1] + 1, size=n))
    available = np.searchsorted(years, years, side="left")
    rc = params.refs_per_paper
    if params.external_ref_rate == 0 and rc.min > int(available.min()):
        first = int(np.argmin(available))
        raise GenerationError(
            f"refs_per_paper.min={rc.min} exceeds the {int(available[first])} earlier papers "
            f"available to a {int(years[first])} paper and external references are disabled")

    is_review = rng.random(n) < params.review_fraction
    other_type = rng.choice(len(_NON_REVIEW_TYPES), size=n, p=_NON_REVIEW_PROBS)
    journal = rng.integers(0, params.n_journals, size=n)
    n_auth = rng.integers(1, params.max_authors_per_paper + 1, size=n)
    mid = rc.midpoint
    counts = np.where(is_review, rng.integers(mid, rc.max + 1, size=n), rng.integers(rc.min, mid + 1, size=n))
    n_ext = rng.binomial(counts, params.external_ref_rate)
    n_int = counts - n_ext
    if params.external_ref_rate > 0:
        n_ext = n_ext + np.maximum(n_int - available, 0)
    n_int = np.minimum(n_int, available)

    width = len(str(n - 1))
    ids = [f"P{i:0{width}d}" for i in range(n)]
    aw, jw = len(str(params.n_authors - 1)), len(str(params.n_journals - 1))
    author_names = [f"A{i:0{aw}d}" for i in range(params.n_authors)]
    journal_names = [f"J{i:0{jw}d}" for i in range(params.n_journals)]
    publisher_names = [f"U{i}" for i in range(params.n_publishers)]

    author_lo = np.concatenate(([0], np.cumsum(n_auth)))
    author_draws = rng.integers(0, params.n_authors, size=int(author_lo[-1])).tolist()
    target_lo = np.concatenate(([0], np.cumsum(n_int)))
    target_draws = (rng.random(int(target_lo[-1])) * np.repeat(available, n_int)).astype(np.int64).tolist()
    ext_lo = np.concatenate(([0], np.cumsum(n_ext)))
    ext_draws = rng.integers(0, len(EXTERNAL_CLASSES), size=int(ext_lo[-1])).tolist()

    for i in range(n):
        # repeated draws collapse, so a paper may end up with fewer authors than drawn
        authors = tuple(dict.fromkeys(author_names[a] for a in author_draws[author_lo[i]:author_lo[i + 1]]))
        k = int(n_int[i])
        picked = dict.fromkeys(target_draws[target_lo[i]:target_lo[i + 1]])
        if len(picked) < k:
            _top_up(rng, picked, int(available[i]), k)
        refs = [Reference(INTERNAL, ids[t]) for t in picked]
        for slot, c in enumerate(ext_draws[ext_lo[i]:ext_lo[i + 1]]):
            cls = EXTERNAL_CLASSES[c]
            refs.append(Reference(EXTERNAL, f"{cls}-{ids[i]}-{slot}", cls))
        j = int(journal[i])
        yield PaperRecord(
            id=ids[i],
            year=int(years[i]),
            pub_type="review" if is_review[i] else _NON_REVIEW_TYPES[other_type[i]],
            authors=authors,
            journal=journal_names[j],
            publisher=publisher_names[j % params.n_publishers],
            refs=tuple(refs),
        )


def _top_up(rng: np.random.Generator, picked: dict[int, None], population: int, k: int) -> None:
    """Add distinct draws from ``range(population)`` until ``picked`` holds ``k``."""
    while len(picked) < k:
        for t in rng.integers(0, population, size=k - len(picked)).tolist():
            picked[t] = None


def generate(params: SynthParams) -> Corpus:
    return ingest(generate_records(params))


def close_references(records: Sequence[PaperRecord], seed: int = 0) -> list[PaperRecord]:
    """Give every paper without references one internal reference to another paper.

    Used to build closed corpora in which every paper cites something; the
    added references may point forward in time, as real data sometimes does.
    """
    if len(records) < 2:
        raise GenerationError("closing a corpus needs at least two papers")
    rng = np.random.default_rng(seed)
    out = []
    for i, rec in enumerate(records):
        if rec.refs:
            out.append(rec)
            continue
        j = int(rng.integers(len(records) - 1))
        j += j >= i
        out.append(PaperRecord(rec.id, rec.year, rec.pub_type, rec.authors, rec.journal, rec.publisher,
                               (Reference.paper(records[j].id),)))
    return out


# -- oracle --------------------------------------------------------------------

def _owned_by(rec: PaperRecord, entity: EntityRef) -> bool:
    if entity.scope is Scope.PAPER:
        return rec.id == entity.id
    if entity.scope is Scope.RESEARCHER:
        return entity.id in rec.authors
    if entity.scope is Scope.JOURNAL:
        return rec.journal == entity.id
    return rec.publisher == entity.id


def _oracle_self(citing: PaperRecord, cited: PaperRecord, scope: Scope) -> bool:
    if scope is Scope.JOURNAL:
        return citing.journal == cited.journal
    if scope is Scope.PUBLISHER:
        return citing.publisher == cited.publisher
    return any(a in cited.authors for a in citing.authors)


def _as_of(opts: MetricOptions, as_of_year: int | None) -> int | None:
    years = [y for y in (opts.as_of_year, as_of_year) if y is not None]
    return min(years) if years else None


def _scope_records(records, entity, opts, as_of):
    owned = [r for r in records if _owned_by(r, entity)]
    if not owned:
        raise EntityLookupError(f"unknown {entity}")
    visible = [r for r in owned if as_of is None or r.year <= as_of]
    if not visible:
        raise EntityLookupError(f"{entity} not in view")
    if opts.period is not None:
        if entity.scope is Scope.PAPER:
            raise UsageError("period on a paper")
        start, end = opts.period
        visible = [r for r in visible if start <= r.year <= end]
    return visible


def _received(records, targets, opts, as_of, scope) -> float:
    table = opts.weight_table or {}
    total = 0.0
    for citing in records:
        if as_of is not None and citing.year > as_of:
            continue
        for ref in citing.refs:
            if ref.kind != "internal":
                continue
            for cited in targets:
                if cited.id != ref.target:
                    continue
                if opts.exclude_self_citations and _oracle_self(citing, cited, scope):
                    continue
                total += table.get(citing.journal, 1.0)
    return total


def oracle_counts(records: Sequence[PaperRecord], entity: EntityRef, opts: MetricOptions = MetricOptions(),
                  as_of_year: int | None = None) -> tuple[float, int, int]:
    """``(received, made, n_papers)`` for ``entity`` by brute force."""
    as_of = _as_of(opts, as_of_year)
    scoped = _scope_records(records, entity, opts, as_of)
    made = sum(len(r.refs) for r in scoped)
    return _received(records, scoped, opts, as_of, entity.scope), made, len(scoped)


def oracle_roc(records: Sequence[PaperRecord], entity: EntityRef, opts: MetricOptions = MetricOptions(),
               as_of_year: int | None = None) -> RocResult:
    received, made, n = oracle_counts(records, entity, opts, as_of_year)
    return RocResult.from_counts(received, made, opts.benchmark, empty=n == 0)


def oracle_self_citation_events(records: Sequence[PaperRecord], entity: EntityRef,
                                opts: MetricOptions = MetricOptions(), as_of_year: int | None = None) -> int:
    """How many counted citation events to ``entity`` are self-citations at its scope."""
    as_of = _as_of(opts, as_of_year)
    scoped = _scope_records(records, entity, opts, as_of)
    hits = 0
    for citing in records:
        if as_of is not None and citing.year > as_of:
            continue
        for ref in citing.refs:
            for cited in scoped:
                if ref.kind == "internal" and cited.id == ref.target and _oracle_self(citing, cited, entity.scope):
                    hits += 1
    return hits


def oracle_citation_count(records: Sequence[PaperRecord], entity: EntityRef, as_of_year: int | None = None) -> int:
    return int(oracle_counts(records, entity, MetricOptions(), as_of_year)[0])


def oracle_portfolio(records: Sequence[PaperRecord], entity: EntityRef, opts: MetricOptions = MetricOptions(),
                     as_of_year: int | None = None) -> PortfolioStats:
    as_of = _as_of(opts, as_of_year)
    try:
        scoped = _scope_records(records, entity, opts, as_of)
    except EntityLookupError:
        if any(_owned_by(r, entity) for r in records):
            raise EmptyPortfolioError("no publications in scope") from None
        raise
    paper_opts = MetricOptions(opts.exclude_self_citations, opts.weight_table, None, None, opts.benchmark)
    values = {}
    for rec in scoped:
        received = _received(records, [rec], paper_opts, as_of, Scope.PAPER)
        values[rec.id] = RocResult.from_counts(received, len(rec.refs)).value
    if not values:
        raise EmptyPortfolioError("no publications in scope")
    high = len([v for v in values.values() if v > 1])
    return PortfolioStats(values, max(values.values()), high, high * 100.0 / len(values), len(values))


def oracle_h_index(records: Sequence[PaperRecord], entity: EntityRef, as_of_year: int | None = None) -> int:
    """Largest h with at least h papers cited at least h times, by trying every h."""
    if entity.scope not in (Scope.RESEARCHER, Scope.JOURNAL):
        raise UsageError("h-index scope")
    scoped = _scope_records(records, entity, MetricOptions(), as_of_year)
    counts = [int(_received(records, [r], MetricOptions(), as_of_year, entity.scope)) for r in scoped]
    best = 0
    for h in range(len(counts) + 1):
        if len([c for c in counts if c >= h]) >= h:
            best = h
    return best


def _oracle_if_parts(records, journal_id, census_year):
    items = [r for r in records if r.journal == journal_id and r.year in (census_year - 1, census_year - 2)]
    cites = 0
    for citing in records:
        if citing.year != census_year:
            continue
        for ref in citing.refs:
            if ref.kind == "internal" and any(item.id == ref.target for item in items):
                cites += 1
    return items, cites


def oracle_if2y(records: Sequence[PaperRecord], journal_id: str, census_year: int) -> float:
    items, cites = _oracle_if_parts(records, journal_id, census_year)
    citable = len([r for r in items if r.pub_type in ("research", "review")])
    if citable == 0:
        raise UndefinedMetricError("no citable items")
    return cites / citable


def oracle_if2y_all_items(records: Sequence[PaperRecord], journal_id: str, census_year: int) -> float:
    items, cites = _oracle_if_parts(records, journal_id, census_year)
    if not items:
        raise UndefinedMetricError("no items")
    return cites / len(items)
