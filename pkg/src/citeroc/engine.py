"""Return-on-citation computation for papers, researchers, journals and publishers.

ROC is citations received divided by citations made.  When nothing was cited
the denominator is taken as 0.5 so the ratio stays finite.  For an entity
owning several papers both sides are totals over its papers (a ratio of sums,
not a mean of per-paper ratios).
"""
from __future__ import annotations

import math
from collections.abc import Mapping
from dataclasses import asdict, dataclass, replace

import numpy as np

from .corpus import Corpus, CorpusView, EntityRef, Scope, gather_rows
from .errors import EntityLookupError, OptionsError, UsageError

DENOMINATOR_FLOOR = 0.5
DEFAULT_BENCHMARK = 1.0


@dataclass(frozen=True)
class MetricOptions:
    """Knobs shared by every metric query.

    ``weight_table`` maps a *citing* paper's journal id to the weight of its
    citation events; journals missing from the table weigh 1.0.  ``period`` is
    an inclusive publication-year range selecting which of the entity's
    papers take part.  ``as_of_year`` narrows the view further when set.
    """

    exclude_self_citations: bool = False
    weight_table: Mapping[str, float] | None = None
    period: tuple[int, int] | None = None
    as_of_year: int | None = None
    benchmark: float = DEFAULT_BENCHMARK

    def __post_init__(self):
        if self.weight_table is not None:
            for journal, w in self.weight_table.items():
                if isinstance(w, bool) or not isinstance(w, (int, float)) or not math.isfinite(w) or w <= 0:
                    raise OptionsError(f"weight for journal {journal!r} must be a positive number, got {w!r}")
        if self.period is not None:
            start, end = self.period
            if start > end:
                raise OptionsError(f"period start {start} is after end {end}")
            object.__setattr__(self, "period", (int(start), int(end)))
        if not math.isfinite(self.benchmark):
            raise OptionsError("benchmark must be finite")


@dataclass(frozen=True)
class RocResult:
    numerator: float
    raw_denominator: int
    effective_denominator: float
    value: float
    floor_applied: bool
    outstanding: bool
    empty: bool = False

    @classmethod
    def from_counts(cls, received: float, made: int, benchmark: float = DEFAULT_BENCHMARK,
                    empty: bool = False) -> "RocResult":
        made = int(made)
        floor = made == 0
        denominator = DENOMINATOR_FLOOR if floor else float(made)
        value = float(received) / denominator
        return cls(
            numerator=float(received),
            raw_denominator=made,
            effective_denominator=denominator,
            value=value,
            floor_applied=floor,
            outstanding=value > benchmark,
            empty=empty,
        )

    def to_dict(self) -> dict:
        return asdict(self)


# -- internals ---------------------------------------------------------------

def _effective_view(view: CorpusView, opts: MetricOptions) -> CorpusView:
    if opts.as_of_year is None:
        return view
    if view.as_of_year is None or opts.as_of_year < view.as_of_year:
        return CorpusView(view.corpus, opts.as_of_year)
    return view


def _journal_weights(corpus: Corpus, table: Mapping[str, float] | None) -> np.ndarray | None:
    if table is None:
        return None
    w = np.ones(len(corpus.journal_ids), dtype=np.float64)
    for pos, jid in enumerate(corpus.journal_ids):
        if jid in table:
            w[pos] = float(table[jid])
    return w


def author_overlap(corpus: Corpus, src: np.ndarray, dst: np.ndarray) -> np.ndarray:
    """Vectorized: does ``src[k]`` share at least one author with ``dst[k]``?"""
    out = np.zeros(len(src), dtype=bool)
    if len(src) == 0:
        return out
    n_authors = max(len(corpus.author_ids), 1)
    own_s, auth_s = gather_rows(corpus.author_ptr, corpus.author_data, src)
    own_d, auth_d = gather_rows(corpus.author_ptr, corpus.author_data, dst)
    keys_s = own_s * n_authors + auth_s
    keys_d = own_d * n_authors + auth_d
    out[own_s[np.isin(keys_s, keys_d)]] = True
    return out


def self_citation_mask(corpus: Corpus, src: np.ndarray, dst: np.ndarray, scope: Scope) -> np.ndarray:
    if scope is Scope.JOURNAL:
        return corpus.journal[src] == corpus.journal[dst]
    if scope is Scope.PUBLISHER:
        return corpus.publisher[src] == corpus.publisher[dst]
    return author_overlap(corpus, src, dst)


def received_per_paper(view: CorpusView, papers: np.ndarray, opts: MetricOptions,
                       scope: Scope) -> np.ndarray:
    """Weighted citations received by each of ``papers`` inside ``view``.

    Self-citations (judged at ``scope``) are skipped when the options ask for
    it.  Returns float64 when weighting is on, int64 otherwise.
    """
    corpus = view.corpus
    owner, src = gather_rows(corpus.recv_ptr, corpus.recv_src, papers)
    keep = None
    if view.as_of_year is not None:
        keep = corpus.year[src] <= view.as_of_year
    if opts.exclude_self_citations:
        dst = np.asarray(papers)[owner]
        not_self = ~self_citation_mask(corpus, src, dst, scope)
        keep = not_self if keep is None else keep & not_self
    if keep is not None:
        owner, src = owner[keep], src[keep]
    weights = _journal_weights(corpus, opts.weight_table)
    if weights is None:
        return np.bincount(owner, minlength=len(papers)).astype(np.int64)
    return np.bincount(owner, weights=weights[corpus.journal[src]], minlength=len(papers))


def _select(view: CorpusView, entity: EntityRef, opts: MetricOptions) -> np.ndarray:
    papers = view.entity_papers(entity)
    if opts.period is not None:
        if entity.scope is Scope.PAPER:
            raise UsageError("a period cannot be applied to a single paper")
        start, end = opts.period
        years = view.corpus.year[papers]
        papers = papers[(years >= start) & (years <= end)]
    return papers


# -- public operations -------------------------------------------------------

def citations_made(view: CorpusView, entity: EntityRef, opts: MetricOptions = MetricOptions()) -> int:
    """Internal (resolved or not) plus external references of the entity's papers."""
    view = _effective_view(view, opts)
    papers = _select(view, entity, opts)
    return int(view.corpus.made_total[papers].sum())


def citations_received(view: CorpusView, entity: EntityRef, opts: MetricOptions = MetricOptions()) -> float:
    view = _effective_view(view, opts)
    papers = _select(view, entity, opts)
    return float(received_per_paper(view, papers, opts, entity.scope).sum())


def roc(view: CorpusView, entity: EntityRef, opts: MetricOptions = MetricOptions()) -> RocResult:
    """Return on citation of ``entity`` in ``view``."""
    view = _effective_view(view, opts)
    papers = _select(view, entity, opts)
    received = received_per_paper(view, papers, opts, entity.scope).sum()
    made = view.corpus.made_total[papers].sum()
    return RocResult.from_counts(received, made, opts.benchmark, empty=len(papers) == 0)


def roc_period(view: CorpusView, entity: EntityRef, period: tuple[int, int],
               opts: MetricOptions = MetricOptions()) -> RocResult:
    """ROC over the entity's papers published within ``period`` (inclusive).

    Citations to those papers are counted whenever they happened (up to the
    view); the denominator is what those same papers cite.
    """
    if entity.scope is Scope.PAPER:
        raise UsageError("period-scoped ROC applies to researchers, journals and publishers")
    return roc(view, entity, replace(opts, period=tuple(period)))


def paper_results(view: CorpusView, papers: np.ndarray, opts: MetricOptions) -> list[RocResult]:
    """Per-paper ROC for each position in ``papers`` (paper-scope self-citation rule)."""
    view = _effective_view(view, opts)
    received = received_per_paper(view, papers, opts, Scope.PAPER)
    made = view.corpus.made_total[papers]
    return [RocResult.from_counts(r, m, opts.benchmark) for r, m in zip(received.tolist(), made.tolist())]


@dataclass(frozen=True)
class PaperRocTable:
    """Per-paper ROC for many papers at once, as parallel numpy columns."""

    positions: np.ndarray
    numerator: np.ndarray
    raw_denominator: np.ndarray
    value: np.ndarray

    @property
    def floor_applied(self) -> np.ndarray:
        return self.raw_denominator == 0

    def __len__(self) -> int:
        return len(self.positions)


def paper_roc_table(view: CorpusView, opts: MetricOptions = MetricOptions()) -> PaperRocTable:
    """ROC of every visible paper in one vectorized pass."""
    if opts.period is not None:
        raise UsageError("a period cannot be applied to a single paper")
    view = _effective_view(view, opts)
    papers = view.visible_positions()
    received = received_per_paper(view, papers, opts, Scope.PAPER).astype(np.float64)
    made = view.corpus.made_total[papers]
    value = received / np.where(made == 0, DENOMINATOR_FLOOR, made)
    return PaperRocTable(papers, received, made, value)


def scope_rocs(view: CorpusView, scope: Scope | str, opts: MetricOptions = MetricOptions()) -> dict[str, RocResult]:
    """ROC of every entity of ``scope`` present in the view, computed in one pass.

    Equivalent to calling :func:`roc` per entity but linear in the corpus size.
    """
    scope = Scope(scope)
    view = _effective_view(view, opts)
    corpus = view.corpus
    if scope is Scope.PAPER and opts.period is not None:
        raise UsageError("a period cannot be applied to a single paper")
    visible = view.visible_positions()
    selected = visible
    if opts.period is not None:
        start, end = opts.period
        years = corpus.year[selected]
        selected = selected[(years >= start) & (years <= end)]
    received = received_per_paper(view, selected, opts, scope)
    made = corpus.made_total[selected]

    if scope is Scope.PAPER:
        ids = corpus.ids
        return {ids[p]: RocResult.from_counts(r, m, opts.benchmark)
                for p, r, m in zip(selected.tolist(), received.tolist(), made.tolist())}

    if scope is Scope.RESEARCHER:
        n_groups = len(corpus.author_ids)
        owner, group = gather_rows(corpus.author_ptr, corpus.author_data, selected)
        _, present_group = gather_rows(corpus.author_ptr, corpus.author_data, visible)
        labels = corpus.author_ids
    else:
        keys = corpus.journal if scope is Scope.JOURNAL else corpus.publisher
        n_groups = len(corpus.journal_ids if scope is Scope.JOURNAL else corpus.publisher_ids)
        owner, group = np.arange(len(selected)), keys[selected]
        present_group = keys[visible]
        labels = corpus.journal_ids if scope is Scope.JOURNAL else corpus.publisher_ids

    present = np.bincount(present_group, minlength=n_groups) > 0
    n_selected = np.bincount(group, minlength=n_groups)
    num = np.bincount(group, weights=received[owner].astype(np.float64), minlength=n_groups)
    den = np.bincount(group, weights=made[owner].astype(np.float64), minlength=n_groups)
    out = {}
    for g in np.flatnonzero(present).tolist():
        out[labels[g]] = RocResult.from_counts(num[g], int(den[g]), opts.benchmark, empty=bool(n_selected[g] == 0))
    return out


def corpus_roc(view: CorpusView, opts: MetricOptions = MetricOptions()) -> RocResult:
    """Every visible paper taken together as one entity."""
    view = _effective_view(view, opts)
    papers = view.visible_positions()
    if opts.exclude_self_citations:
        raise UsageError("corpus-wide ROC has no self-citation scope")
    received = received_per_paper(view, papers, opts, Scope.PAPER).sum()
    if len(papers) == 0:
        raise EntityLookupError("view contains no papers")
    return RocResult.from_counts(received, view.corpus.made_total[papers].sum(), opts.benchmark)
