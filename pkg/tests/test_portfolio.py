import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from citeroc import (
    EmptyPortfolioError,
    EntityLookupError,
    EntityRef,
    MetricOptions,
    PortfolioStats,
    Scope,
    SeriesMode,
    UsageError,
    ingest,
    portfolio,
    roc,
    roc_series,
    snapshot,
)
from citeroc.testkit import RefCounts, SynthParams, generate_records, oracle_portfolio, oracle_roc

from .strategies import AUTHORS, JOURNALS, record_lists


def test_three_paper_stats():
    stats = PortfolioStats.from_values({"a": 2.0, "b": 0.5, "c": 1.5})
    assert stats.roc_max == 2.0
    assert stats.high_roc_count == 2
    assert stats.high_roc_ratio_percent == pytest.approx(66.667, abs=1e-3)
    assert stats.total_papers == 3


def test_exactly_one_is_not_high():
    stats = PortfolioStats.from_values({"a": 1.0})
    assert stats.high_roc_count == 0 and stats.high_roc_ratio_percent == 0.0


def test_empty_portfolio():
    with pytest.raises(EmptyPortfolioError, match="no publications in scope"):
        PortfolioStats.from_values({})


def test_fixture_portfolio(fixture_corpus, fixture_records):
    entity = EntityRef(Scope.RESEARCHER, "A1")
    stats = portfolio(fixture_corpus("demo").view(), entity)
    assert stats == oracle_portfolio(fixture_records("demo"), entity)
    assert stats.paper_rocs == {"P01": 2.0, "P02": 7 / 3, "P04": 0.0, "P05": 0.0}


def test_period_leaving_nothing(fixture_corpus):
    with pytest.raises(EmptyPortfolioError):
        portfolio(fixture_corpus("demo").view(), EntityRef(Scope.JOURNAL, "J1"), MetricOptions(period=(1990, 1991)))


def test_unknown_entity(fixture_corpus):
    with pytest.raises(EntityLookupError):
        portfolio(fixture_corpus("demo").view(), EntityRef(Scope.JOURNAL, "nope"))


def test_fifty_paper_researcher_against_oracle():
    params = SynthParams(n_papers=400, n_authors=8, max_authors_per_paper=1, year_range=(2000, 2010),
                         refs_per_paper=RefCounts(0, 8), seed=5)
    records = list(generate_records(params))
    c = ingest(records)
    author, papers = max(c.author_index.items(), key=lambda kv: len(kv[1]))
    assert len(papers) >= 50
    entity = EntityRef(Scope.RESEARCHER, author)
    for opts in (MetricOptions(), MetricOptions(exclude_self_citations=True, weight_table={"J1": 2.5})):
        got, want = portfolio(c.view(), entity, opts), oracle_portfolio(records, entity, opts)
        assert got.paper_rocs.keys() == want.paper_rocs.keys()
        for pid, value in want.paper_rocs.items():
            assert math.isclose(got.paper_rocs[pid], value, rel_tol=1e-12)
        assert (got.high_roc_count, got.total_papers) == (want.high_roc_count, want.total_papers)
        assert math.isclose(got.roc_max, want.roc_max, rel_tol=1e-12)
        assert got.high_roc_ratio_percent == want.high_roc_ratio_percent


@settings(max_examples=80, deadline=None)
@given(record_lists(), st.sampled_from([EntityRef(Scope.RESEARCHER, a) for a in AUTHORS]
                                       + [EntityRef(Scope.JOURNAL, j) for j in JOURNALS]))
def test_stats_invariants(records, entity):
    c = ingest(records)
    if not c.view().contains(entity):
        return
    stats = portfolio(c.view(), entity)
    values = list(stats.paper_rocs.values())
    assert stats.high_roc_count <= stats.total_papers == len(values)
    assert all(stats.roc_max >= v for v in values)
    assert stats.high_roc_ratio_percent == 100 * stats.high_roc_count / stats.total_papers
    assert 0 <= stats.high_roc_ratio_percent <= 100


class TestSeries:
    def test_paper_series_nondecreasing(self, fixture_corpus):
        series = roc_series(fixture_corpus("demo"), EntityRef(Scope.PAPER, "P02"), (2010, 2015))
        assert series.years == list(range(2010, 2016))
        assert series.values == sorted(series.values)
        assert series.mode is SeriesMode.WHOLE_LIFE

    def test_remark2_fixture_decreases(self, fixture_corpus, fixture_records):
        entity = EntityRef(Scope.JOURNAL, "J1")
        series = roc_series(fixture_corpus("remark2"), entity, (2010, 2013))
        oracle = [oracle_roc(fixture_records("remark2"), entity, as_of_year=y).value for y in series.years]
        assert series.values == oracle == [0.0, 2.0, 2 / 11, 2 / 11]
        assert any(b < a for a, b in zip(series.values, series.values[1:]))

    def test_fixed_period_series(self, fixture_corpus, fixture_records):
        entity = EntityRef(Scope.RESEARCHER, "A1")
        opts = MetricOptions(period=(2010, 2010))
        series = roc_series(fixture_corpus("demo"), entity, (2011, 2015), opts)
        assert series.mode is SeriesMode.FIXED_PERIOD
        assert series.values == sorted(series.values)
        oracle = [oracle_roc(fixture_records("demo"), entity, opts, as_of_year=y).value for y in series.years]
        assert series.values == oracle

    def test_skips_years_before_first_paper(self, fixture_corpus):
        series = roc_series(fixture_corpus("demo"), EntityRef(Scope.RESEARCHER, "A4"), (2008, 2014))
        assert series.years == [2012, 2013, 2014]

    def test_points_match_snapshots(self, fixture_corpus):
        c = fixture_corpus("demo")
        entity = EntityRef(Scope.PUBLISHER, "U1")
        opts = MetricOptions(exclude_self_citations=True, as_of_year=2011)
        series = roc_series(c, entity, (2009, 2014), opts)
        for year, point in series.points:
            assert point == roc(snapshot(c, year), entity, MetricOptions(exclude_self_citations=True))

    def test_deterministic(self, fixture_corpus):
        c = fixture_corpus("demo")
        entity = EntityRef(Scope.JOURNAL, "J2")
        assert roc_series(c, entity, (2009, 2014)) == roc_series(c, entity, (2009, 2014))

    def test_absent_everywhere(self, fixture_corpus):
        with pytest.raises(EntityLookupError):
            roc_series(fixture_corpus("demo"), EntityRef(Scope.RESEARCHER, "A4"), (2000, 2005))
        with pytest.raises(EntityLookupError):
            roc_series(fixture_corpus("demo"), EntityRef(Scope.RESEARCHER, "ghost"), (2000, 2005))

    def test_bad_range(self, fixture_corpus):
        with pytest.raises(UsageError):
            roc_series(fixture_corpus("demo"), EntityRef(Scope.JOURNAL, "J1"), (2012, 2010))
