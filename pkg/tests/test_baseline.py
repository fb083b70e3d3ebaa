from __future__ import annotations

import fuzzwrap as fw
from fuzzwrap.corpus import assemble_page
from fuzzwrap.evaluator import evaluate_pages


def test_baseline_learns_listing_delimiters(fitted_baseline):
    assert fitted_baseline.record_prefix.endswith("<LI>")
    assert fitted_baseline.record_suffix.startswith("\n")
    assert fitted_baseline.attr_order == ("country", "code")
    assert fitted_baseline.gaps == ("", " ")


def test_baseline_perfect_on_regular_corpus(regular_corpus):
    pages = {p.page_id: p.html for p in regular_corpus.pages[:3]}
    labels = [p.labels for p in regular_corpus.pages[:3]]
    baseline = fw.DelimiterBaseline.fit(pages, labels)
    report = evaluate_pages(
        regular_corpus.pages, lambda p: baseline.extract(p.html, p.page_id), name="regular"
    )
    assert report.recall == 1.0
    assert report.precision == 1.0


def test_baseline_drops_records_missing_a_delimiter(fitted_baseline):
    page = assemble_page(
        "b0",
        0,
        [
            ([("country", "Adola"), ("code", "12")], " "),
            ([("country", "Bedo")], " "),  # nothing to split on
            ([("country", "Cezu"), ("code", "345")], " "),
        ],
    )
    result = fitted_baseline.extract(page.html, "b0")
    assert len(result.records) == 2
    spans = {r.span for r in result.records}
    assert page.labels.records[1] not in spans


def test_baseline_extracts_permuted_records_with_wrong_values(fitted_baseline):
    page = assemble_page("b1", 0, [([("code", "90"), ("country", "Dilo")], " ")])
    result = fitted_baseline.extract(page.html, "b1")
    assert len(result.records) == 1
    values = result.records[0].values()
    # the rigid walk grabs whatever sits between the learned delimiters
    assert values["country"][0].text == "90"
    assert values["code"][0].text == "Dilo"


def test_baseline_recall_degrades_on_anomalies(anomaly_corpus, fitted_baseline):
    report = evaluate_pages(
        anomaly_corpus.pages,
        lambda p: fitted_baseline.extract(p.html, p.page_id),
        name="anomaly",
    )
    assert report.extracted < report.total
    assert report.recall < 1.0
