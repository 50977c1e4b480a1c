"""Per-paper ROC statistics for an entity and ROC time series over snapshots."""
from __future__ import annotations

import enum
from dataclasses import dataclass, replace

from .corpus import Corpus, CorpusView, EntityRef, Scope, snapshot
from .engine import MetricOptions, RocResult, _effective_view, _select, paper_results, roc
from .errors import EmptyPortfolioError, EntityLookupError, UsageError

HIGH_ROC_THRESHOLD = 1.0


@dataclass(frozen=True)
class PortfolioStats:
    paper_rocs: dict[str, float]
    roc_max: float
    high_roc_count: int
    high_roc_ratio_percent: float
    total_papers: int

    @classmethod
    def from_values(cls, paper_rocs: dict[str, float]) -> "PortfolioStats":
        if not paper_rocs:
            raise EmptyPortfolioError("no publications in scope")
        values = list(paper_rocs.values())
        high = sum(1 for v in values if v > HIGH_ROC_THRESHOLD)
        return cls(
            paper_rocs=dict(paper_rocs),
            roc_max=max(values),
            high_roc_count=high,
            high_roc_ratio_percent=100.0 * high / len(values),
            total_papers=len(values),
        )


def portfolio(view: CorpusView, entity: EntityRef, opts: MetricOptions = MetricOptions()) -> PortfolioStats:
    """ROC_max, the count of papers with ROC above 1 and its percentage share.

    Per-paper values use the caller's options; a period only selects which
    papers make up the portfolio.
    """
    view = _effective_view(view, opts)
    try:
        papers = _select(view, entity, opts)
    except EntityLookupError:
        if view.corpus.has_entity(entity):
            raise EmptyPortfolioError("no publications in scope") from None
        raise
    results = paper_results(view, papers, replace(opts, period=None))
    ids = view.corpus.ids
    return PortfolioStats.from_values({ids[p]: r.value for p, r in zip(papers.tolist(), results)})


class SeriesMode(str, enum.Enum):
    WHOLE_LIFE = "whole_life"
    FIXED_PERIOD = "fixed_period"


@dataclass(frozen=True)
class RocSeries:
    entity: EntityRef
    points: tuple[tuple[int, RocResult], ...]
    mode: SeriesMode

    @property
    def years(self) -> list[int]:
        return [y for y, _ in self.points]

    @property
    def values(self) -> list[float]:
        return [r.value for _, r in self.points]


def roc_series(corpus: Corpus, entity: EntityRef, years: tuple[int, int],
               opts: MetricOptions = MetricOptions()) -> RocSeries:
    """ROC of ``entity`` at the end of every year in ``years`` (inclusive).

    Years in which the entity has no visible publication yet are skipped.
    """
    start, end = years
    if start > end:
        raise UsageError(f"empty year range {start}:{end}")
    if not corpus.has_entity(entity):
        raise EntityLookupError(f"unknown {entity.scope.value} id {entity.id!r}")
    if opts.period is not None and entity.scope is Scope.PAPER:
        raise UsageError("a period cannot be applied to a single paper")
    points = []
    for year in range(start, end + 1):
        view = snapshot(corpus, year)
        if not view.contains(entity):
            continue
        points.append((year, roc(view, entity, replace(opts, as_of_year=None))))
    if not points:
        raise EntityLookupError(f"{entity} has no publications in any snapshot {start}..{end}")
    mode = SeriesMode.WHOLE_LIFE if opts.period is None else SeriesMode.FIXED_PERIOD
    return RocSeries(entity, tuple(points), mode)
