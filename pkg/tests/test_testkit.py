import io

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from citeroc import EntityRef, MetricOptions, Scope, ingest, write_records
from citeroc.errors import GenerationError
from citeroc.testkit import (
    RefCounts,
    SynthParams,
    close_references,
    generate,
    generate_records,
    oracle_roc,
    oracle_self_citation_events,
)


def dump(params):
    buf = io.StringIO()
    write_records(generate_records(params), buf)
    return buf.getvalue()


def test_same_seed_same_bytes():
    params = SynthParams(n_papers=300, seed=42)
    assert dump(params) == dump(params)


def test_different_seed_differs():
    assert dump(SynthParams(seed=1)) != dump(SynthParams(seed=2))


def test_no_reviews_when_fraction_zero():
    records = list(generate_records(SynthParams(n_papers=500, review_fraction=0.0, seed=3)))
    assert not any(r.pub_type == "review" for r in records)


def test_reviews_cite_more():
    records = list(generate_records(SynthParams(n_papers=2000, review_fraction=0.5,
                                                refs_per_paper=RefCounts(0, 40), seed=4)))
    reviews = [len(r.refs) for r in records if r.pub_type == "review"]
    others = [len(r.refs) for r in records if r.pub_type != "review"]
    assert np.mean(reviews) > np.mean(others)


def test_single_paper_cites_only_outside():
    (rec,) = generate_records(SynthParams(n_papers=1, refs_per_paper=RefCounts(3, 5), seed=9))
    assert rec.refs and all(ref.kind == "external" for ref in rec.refs)


def test_single_paper_closed_corpus_is_infeasible():
    with pytest.raises(GenerationError, match="refs_per_paper.min"):
        list(generate_records(SynthParams(n_papers=1, refs_per_paper=RefCounts(1, 2), external_ref_rate=0.0)))


def test_closed_generation_caps_reference_count():
    records = list(generate_records(SynthParams(n_papers=200, external_ref_rate=0.0, seed=5)))
    c = ingest(records)
    assert c.validation_report.total_external_refs == 0
    assert c.validation_report.unresolved_refs == 0


@pytest.mark.parametrize("bad", [
    dict(n_papers=0),
    dict(year_range=(2010, 2000)),
    dict(n_authors=0),
    dict(refs_per_paper=RefCounts(5, 2)),
    dict(review_fraction=1.5),
    dict(external_ref_rate=-0.1),
    dict(seed=-1),
])
def test_invalid_params(bad):
    with pytest.raises(GenerationError):
        SynthParams(**bad).validate()


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 150), st.integers(0, 2**32), st.floats(0, 1), st.integers(0, 6))
def test_generated_corpora_are_well_formed(n, seed, ext_rate, max_refs):
    params = SynthParams(n_papers=n, seed=seed, external_ref_rate=ext_rate,
                         refs_per_paper=RefCounts(0, max_refs), year_range=(2000, 2004))
    records = list(generate_records(params))
    assert len(records) == n
    years = [r.year for r in records]
    assert years == sorted(years)
    by_id = {r.id: r for r in records}
    assert len(by_id) == n
    for rec in records:
        assert rec.authors and len(rec.refs) <= max_refs
        for ref in rec.refs:
            if ref.kind == "paper":
                assert by_id[ref.target].year < rec.year
    report = generate(params).validation_report
    assert report.unresolved_refs == report.deduplicated_refs == report.dropped_self_loops == 0


def test_close_references():
    records = list(generate_records(SynthParams(n_papers=100, external_ref_rate=0.0, seed=6)))
    assert any(not r.refs for r in records)
    closed = close_references(records, seed=1)
    assert all(r.refs for r in closed)
    assert [r.id for r in closed] == [r.id for r in records]
    assert ingest(closed).validation_report.unresolved_refs == 0


def test_close_references_needs_two():
    with pytest.raises(GenerationError):
        close_references(list(generate_records(SynthParams(n_papers=1))))


def test_oracle_weight_neutrality_and_vacuous_exclusion():
    records = list(generate_records(SynthParams(n_papers=120, n_authors=400, max_authors_per_paper=1,
                                                n_journals=60, n_publishers=60, seed=8)))
    ones = MetricOptions(weight_table={f"J{i:02d}": 1.0 for i in range(60)})
    for rec in records[:40]:
        entity = EntityRef(Scope.PAPER, rec.id)
        assert oracle_roc(records, entity, ones) == oracle_roc(records, entity)
        if oracle_self_citation_events(records, entity) == 0:
            assert oracle_roc(records, entity, MetricOptions(exclude_self_citations=True)) == oracle_roc(records, entity)
