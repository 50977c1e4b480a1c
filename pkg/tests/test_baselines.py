import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from citeroc import (
    EntityLookupError,
    EntityRef,
    MetricOptions,
    PaperRecord,
    Reference,
    Scope,
    UndefinedMetricError,
    UsageError,
    citation_count,
    compare,
    h_index,
    if2y,
    if2y_all_items,
    ingest,
    roc,
    snapshot,
)
from citeroc.testkit import oracle_citation_count, oracle_h_index, oracle_if2y, oracle_if2y_all_items, oracle_roc

from .strategies import AUTHORS, JOURNALS, record_lists


def cited_papers(counts, author="R", journal="J1"):
    """Papers of ``author`` cited ``counts[i]`` times each."""
    records, k = [], 0
    for i, n in enumerate(counts):
        records.append(PaperRecord(f"P{i}", 2010, "research", (author,), journal, "U1"))
        for _ in range(n):
            records.append(PaperRecord(f"C{k}", 2011, "research", (f"X{k}",), "J9", "U9",
                                       (Reference.paper(f"P{i}"),)))
            k += 1
    return records


class TestCitationCount:
    def test_paper(self):
        c = ingest(cited_papers([3]))
        assert citation_count(c.view(), EntityRef(Scope.PAPER, "P0")) == 3

    def test_researcher_sum(self):
        c = ingest(cited_papers([4, 0]))
        assert citation_count(c.view(), EntityRef(Scope.RESEARCHER, "R")) == 4

    def test_matches_default_numerator(self, fixture_corpus):
        c = fixture_corpus("demo")
        for spec in ["paper:P02", "researcher:A1", "journal:J1", "publisher:U2"]:
            entity = EntityRef.parse(spec)
            assert citation_count(c.view(), entity) == roc(c.view(), entity).numerator


class TestHIndex:
    def test_example(self):
        counts = [3, 0, 6, 1, 5]
        # brute force over every h in 0..n
        expected = max(h for h in range(len(counts) + 1) if sum(c >= h for c in counts) >= h)
        assert expected == 3
        c = ingest(cited_papers(counts))
        assert h_index(c.view(), EntityRef(Scope.RESEARCHER, "R")) == expected

    def test_uncited(self):
        c = ingest(cited_papers([0, 0, 0]))
        assert h_index(c.view(), EntityRef(Scope.RESEARCHER, "R")) == 0

    def test_saturation(self):
        c = ingest(cited_papers([4, 5, 4, 9]))
        assert h_index(c.view(), EntityRef(Scope.JOURNAL, "J1")) == 4

    @pytest.mark.parametrize("spec", ["paper:P0", "publisher:U1"])
    def test_scope_rejected(self, spec):
        c = ingest(cited_papers([1]))
        with pytest.raises(UsageError):
            h_index(c.view(), EntityRef.parse(spec))


class TestImpactFactor:
    def test_ratio(self):
        records = [PaperRecord(f"I{i}", 2010 + i % 2, "research", ("A",), "J1", "U1") for i in range(5)]
        records += [PaperRecord(f"C{i}", 2012, "research", ("B",), "J2", "U1", (Reference.paper(f"I{i % 5}"),))
                    for i in range(10)]
        c = ingest(records)
        assert if2y(c.view(), EntityRef(Scope.JOURNAL, "J1"), 2012) == 2.0

    def test_cited_letter_fixture(self, fixture_corpus, fixture_records):
        view = fixture_corpus("cited_letter").view()
        journal = EntityRef(Scope.JOURNAL, "J1")
        assert if2y(view, journal, 2012) == oracle_if2y(fixture_records("cited_letter"), "J1", 2012) == 6.0
        assert if2y_all_items(view, journal, 2012) == 3.0
        assert if2y(view, journal, 2012) > if2y_all_items(view, journal, 2012)

    def test_no_items(self, fixture_corpus):
        with pytest.raises(UndefinedMetricError):
            if2y(fixture_corpus("cited_letter").view(), EntityRef(Scope.JOURNAL, "J1"), 2020)

    def test_only_letters(self):
        c = ingest([PaperRecord("L", 2010, "letter", ("A",), "J1", "U1")])
        with pytest.raises(UndefinedMetricError):
            if2y(c.view(), EntityRef(Scope.JOURNAL, "J1"), 2011)
        assert if2y_all_items(c.view(), EntityRef(Scope.JOURNAL, "J1"), 2011) == 0.0

    def test_ignores_later_citations(self, fixture_corpus):
        c = fixture_corpus("cited_letter")
        journal = EntityRef(Scope.JOURNAL, "J1")
        assert if2y(c.view(), journal, 2012) == if2y(snapshot(c, 2012), journal, 2012)

    def test_view_must_cover_census(self, fixture_corpus):
        with pytest.raises(UsageError):
            if2y(snapshot(fixture_corpus("cited_letter"), 2011), EntityRef(Scope.JOURNAL, "J1"), 2012)

    def test_journal_only(self, fixture_corpus):
        with pytest.raises(UsageError):
            if2y(fixture_corpus("cited_letter").view(), EntityRef(Scope.PUBLISHER, "U1"), 2012)


class TestCompare:
    def test_paper_row(self, fixture_corpus):
        (row,) = compare(fixture_corpus("demo").view(), [EntityRef(Scope.PAPER, "P02")])
        assert row.roc.value == 7 / 3 and row.citation_count == 7
        assert row.h_index is None and row.if2y is None and row.error is None

    def test_researcher_and_journal(self, fixture_corpus):
        rows = compare(fixture_corpus("demo").view(),
                       [EntityRef(Scope.RESEARCHER, "A1"), EntityRef(Scope.JOURNAL, "J1")], census_year=2012)
        assert [str(r.entity) for r in rows] == ["researcher:A1", "journal:J1"]
        assert rows[0].if2y is None and rows[0].h_index is not None
        assert rows[1].if2y is not None

    def test_errors_stay_in_their_row(self, fixture_corpus):
        rows = compare(fixture_corpus("demo").view(),
                       [EntityRef(Scope.JOURNAL, "nope"), EntityRef(Scope.JOURNAL, "J2")])
        assert rows[0].error and rows[0].roc is None
        assert rows[1].error is None and rows[1].roc is not None

    def test_empty_batch(self, fixture_corpus):
        with pytest.raises(UsageError):
            compare(fixture_corpus("demo").view(), [])

    def test_review_vs_research(self, fixture_corpus, fixture_records):
        rev, res = EntityRef(Scope.PAPER, "REV"), EntityRef(Scope.PAPER, "RES")
        rows = compare(fixture_corpus("review_vs_research").view(), [rev, res])
        records = fixture_records("review_vs_research")
        assert rows[0].citation_count == oracle_citation_count(records, rev) == 10
        assert rows[1].citation_count == oracle_citation_count(records, res) == 4
        assert rows[0].roc == oracle_roc(records, rev) and rows[0].roc.value == 0.2
        assert rows[1].roc == oracle_roc(records, res) and rows[1].roc.value == 0.8


@settings(max_examples=100, deadline=None)
@given(record_lists(), st.sampled_from([EntityRef(Scope.RESEARCHER, a) for a in AUTHORS]
                                       + [EntityRef(Scope.JOURNAL, j) for j in JOURNALS]),
       st.one_of(st.none(), st.integers(2000, 2006)))
def test_h_index_against_oracle(records, entity, as_of):
    c = ingest(records)
    view = c.view(as_of)
    if not view.contains(entity):
        return
    h = h_index(view, entity)
    assert h == oracle_h_index(records, entity, as_of)
    assert h <= len(view.entity_papers(entity))
    assert citation_count(view, entity) == oracle_citation_count(records, entity, as_of)


@settings(max_examples=100, deadline=None)
@given(record_lists(), st.sampled_from(JOURNALS), st.integers(2001, 2007))
def test_if2y_against_oracle(records, journal, census):
    corpus = ingest(records)
    view = corpus.view()
    entity = EntityRef(Scope.JOURNAL, journal)
    for ours, theirs in ((if2y, oracle_if2y), (if2y_all_items, oracle_if2y_all_items)):
        if not corpus.has_entity(entity):
            with pytest.raises(EntityLookupError):
                ours(view, entity, census)
            continue
        try:
            expected = theirs(records, journal, census)
        except UndefinedMetricError:
            with pytest.raises(UndefinedMetricError):
                ours(view, entity, census)
            continue
        assert ours(view, entity, census) == expected


def test_compare_respects_options(fixture_corpus):
    c = fixture_corpus("demo")
    entity = EntityRef(Scope.JOURNAL, "J1")
    (row,) = compare(c.view(), [entity], MetricOptions(as_of_year=2011))
    assert row.citation_count == citation_count(snapshot(c, 2011), entity)
