from __future__ import annotations

import pytest

import fuzzwrap as fw
from fuzzwrap.corpus import assemble_page
from fuzzwrap.errors import ZeroTotal
from fuzzwrap.evaluator import (
    evaluate_pages,
    match_tuples,
    precision,
    recall,
    standard_precision,
)
from fuzzwrap.extractor import AttributeValue, ExtractedRecord, ExtractionResult

# (total, extracted, pertinent) per reference set, with the ratios they imply
REFERENCE_SETS = [
    ("set_1", 20, 12, 10, 0.600, 0.500),
    ("set_2", 35, 34, 23, 0.971, 0.657),
    ("set_3", 55, 20, 11, 0.364, 0.200),
    ("set_4", 73, 30, 18, 0.411, 0.247),
    ("set_5", 108, 33, 26, 0.306, 0.241),
]


@pytest.mark.parametrize("name,total,extracted,pertinent,want_r,want_p", REFERENCE_SETS)
def test_reference_ratios_to_three_decimals(name, total, extracted, pertinent, want_r, want_p):
    assert round(recall(extracted, total), 3) == want_r
    assert round(precision(pertinent, total), 3) == want_p


def test_zero_extracted_recall():
    assert recall(0, 10) == 0.0


def test_zero_total_rejected():
    with pytest.raises(ZeroTotal):
        recall(1, 0)
    with pytest.raises(ZeroTotal):
        precision(1, 0)


def test_standard_precision_guard():
    assert standard_precision(0, 0) == 0.0
    assert standard_precision(3, 4) == 0.75


def _result_from_gold(page, shift=0, drop=0, extra=0):
    records = []
    for span, attrs in zip(page.labels.records, page.labels.attributes):
        records.append(
            ExtractedRecord(
                (span[0] + shift, span[1] + shift),
                0.0,
                0.0,
                tuple(
                    AttributeValue(
                        a.name,
                        page.html[a.span[0] + shift:a.span[1] + shift],
                        (a.span[0] + shift, a.span[1] + shift),
                        0.0,
                        0.0,
                    )
                    for a in attrs
                ),
            )
        )
    if drop:
        records = records[:-drop]
    for _ in range(extra):
        last = records[-1]
        records.append(ExtractedRecord((last.span[1], last.span[1] + 2), 0.0, 0.0, ()))
    return ExtractionResult(page.page_id, page.labels.global_span, (0.0, 0.0), tuple(records))


@pytest.fixture()
def gold_page():
    return assemble_page(
        "g0",
        0,
        [
            ([("country", "Adola"), ("code", "12")], " "),
            ([("country", "Bedo"), ("code", "345")], " "),
            ([("country", "Cezu"), ("code", "678")], " "),
        ],
    )


def test_match_tuples_exact(gold_page):
    result = _result_from_gold(gold_page)
    assert match_tuples(result, gold_page.labels) == (3, 3, 3)


def test_match_tuples_shifted_span_not_pertinent(gold_page):
    result = _result_from_gold(gold_page, shift=1)
    extracted, pertinent, total = match_tuples(result, gold_page.labels)
    assert (extracted, total) == (3, 3)
    assert pertinent == 0


def test_match_tuples_over_extraction(gold_page):
    result = _result_from_gold(gold_page, extra=1)
    extracted, pertinent, total = match_tuples(result, gold_page.labels)
    assert extracted == 4
    assert pertinent <= total == 3


def test_empty_tuple_never_pertinent(gold_page):
    gold = gold_page.labels
    bare = ExtractionResult(
        "g0",
        gold.global_span,
        (0.0, 0.0),
        tuple(ExtractedRecord(span, 0.0, 0.0, ()) for span in gold.records),
    )
    extracted, pertinent, _ = match_tuples(bare, gold)
    assert extracted == 3
    assert pertinent == 0


def test_partial_tuple_with_exact_spans_is_pertinent(gold_page):
    gold = gold_page.labels
    one_attr = ExtractionResult(
        "g0",
        gold.global_span,
        (0.0, 0.0),
        (
            ExtractedRecord(
                gold.records[0],
                0.0,
                0.0,
                (
                    AttributeValue(
                        "country",
                        gold_page.html[slice(*gold.attributes[0][0].span)],
                        tuple(gold.attributes[0][0].span),
                        0.0,
                        0.0,
                    ),
                ),
            ),
        ),
    )
    assert match_tuples(one_attr, gold) == (1, 1, 3)


def test_counting_sanity_on_anomaly_eval(anomaly_corpus, tolerant_model):
    report = fw.evaluate(anomaly_corpus.pages, tolerant_model, name="anomaly")
    assert report.pertinent <= report.extracted
    assert report.pertinent <= report.total
    assert report.failures == 0


def test_evaluate_regular_corpus_is_perfect(regular_corpus, regular_model):
    report = fw.evaluate(regular_corpus.pages, regular_model, name="regular")
    assert report.recall == 1.0
    assert report.precision == 1.0
    assert report.extracted == report.pertinent == report.total


def test_fuzzy_beats_rigid_baseline_on_missing_attributes():
    corpus = fw.generate_corpus(fw.AnomalyProfile(missing=0.2), n_pages=10, seed=21)
    pages = {p.page_id: p.html for p in corpus.pages[:3]}
    labels = [p.labels for p in corpus.pages[:3]]
    model = fw.train(pages, labels, fw.WrapperConfig.tolerant())
    baseline = fw.DelimiterBaseline.fit(pages, labels)
    fuzzy_report = fw.evaluate(corpus.pages, model, name="missing")
    base_report = evaluate_pages(
        corpus.pages, lambda p: baseline.extract(p.html, p.page_id), name="missing"
    )
    assert fuzzy_report.recall >= base_report.recall


def test_evaluate_empty_corpus_rejected(regular_model):
    with pytest.raises(ZeroTotal):
        fw.evaluate([], regular_model)


def test_failed_pages_counted(regular_model, regular_corpus):
    pages = [
        fw.CorpusPage("empty", "§§§", regular_corpus.pages[0].labels),
        regular_corpus.pages[0],
    ]
    report = fw.evaluate(pages, regular_model, name="mixed")
    assert report.failures == 1
    assert report.pages == 2
