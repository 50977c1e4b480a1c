"""Classic citation metrics for side-by-side comparison with ROC."""
from __future__ import annotations

from dataclasses import asdict, dataclass

import numpy as np

from .corpus import PUB_TYPES, CorpusView, EntityRef, Scope
from .engine import MetricOptions, RocResult, _effective_view, received_per_paper, roc
from .errors import CiterocError, UndefinedMetricError, UsageError

CITABLE_TYPES = ("research", "review")
_CITABLE_CODES = np.array([PUB_TYPES.index(t) for t in CITABLE_TYPES], dtype=np.int8)


def _per_paper_counts(view: CorpusView, entity: EntityRef) -> np.ndarray:
    papers = view.entity_papers(entity)
    return received_per_paper(view, papers, MetricOptions(), entity.scope)


def citation_count(view: CorpusView, entity: EntityRef) -> int:
    """Total citations received, self-citations included, unweighted."""
    return int(_per_paper_counts(view, entity).sum())


def h_index(view: CorpusView, entity: EntityRef) -> int:
    if entity.scope not in (Scope.RESEARCHER, Scope.JOURNAL):
        raise UsageError(f"h-index is defined for researchers and journals, not {entity.scope.value}")
    counts = np.sort(_per_paper_counts(view, entity))[::-1]
    ranks = np.arange(1, len(counts) + 1)
    return int(np.count_nonzero(counts >= ranks))


def _if_window(view: CorpusView, journal: EntityRef, census_year: int):
    if journal.scope is not Scope.JOURNAL:
        raise UsageError("the impact factor is a journal metric")
    if view.as_of_year is not None and view.as_of_year < census_year:
        raise UsageError(f"view as of {view.as_of_year} does not cover census year {census_year}")
    corpus = view.corpus
    papers = corpus.entity_papers(journal)
    years = corpus.year[papers]
    items = papers[(years == census_year - 1) | (years == census_year - 2)]
    owner_counts = received_per_paper(CorpusView(corpus, census_year), items, MetricOptions(), Scope.JOURNAL)
    prior = received_per_paper(CorpusView(corpus, census_year - 1), items, MetricOptions(), Scope.JOURNAL)
    cites_in_census_year = int(owner_counts.sum() - prior.sum())
    return items, cites_in_census_year


def if2y(view: CorpusView, journal: EntityRef, census_year: int) -> float:
    """Two-year impact factor for ``census_year``.

    The numerator counts citations made in the census year to *every* item
    the journal published in the two preceding years; the denominator counts
    only research and review items among them.
    """
    items, cites = _if_window(view, journal, census_year)
    citable = int(np.isin(view.corpus.pub_type[items], _CITABLE_CODES).sum())
    if citable == 0:
        raise UndefinedMetricError(
            f"{journal} has no research/review items in {census_year - 2}-{census_year - 1}")
    return cites / citable


def if2y_all_items(view: CorpusView, journal: EntityRef, census_year: int) -> float:
    """Same numerator as :func:`if2y` but every published item in the denominator."""
    items, cites = _if_window(view, journal, census_year)
    if len(items) == 0:
        raise UndefinedMetricError(f"{journal} published nothing in {census_year - 2}-{census_year - 1}")
    return cites / len(items)


@dataclass(frozen=True)
class ComparisonRow:
    entity: EntityRef
    roc: RocResult | None = None
    citation_count: int | None = None
    h_index: int | None = None
    if2y: float | None = None
    error: str | None = None

    def to_dict(self) -> dict:
        out = asdict(self)
        out["entity"] = str(self.entity)
        return out


def compare(view: CorpusView, entities: list[EntityRef], opts: MetricOptions = MetricOptions(),
            census_year: int | None = None) -> list[ComparisonRow]:
    """One row per entity; metrics that do not apply to a scope stay ``None``.

    An error on one entity is recorded in its row instead of aborting the batch.
    """
    if not entities:
        raise UsageError("compare needs at least one entity")
    view = _effective_view(view, opts)
    rows = []
    for entity in entities:
        try:
            r = roc(view, entity, opts)
            count = citation_count(view, entity)
            h = h_index(view, entity) if entity.scope in (Scope.RESEARCHER, Scope.JOURNAL) else None
            impact = None
            if entity.scope is Scope.JOURNAL and census_year is not None:
                try:
                    impact = if2y(view, entity, census_year)
                except UndefinedMetricError:
                    impact = None
            rows.append(ComparisonRow(entity, r, count, h, impact))
        except CiterocError as exc:
            rows.append(ComparisonRow(entity, error=str(exc)))
    return rows
