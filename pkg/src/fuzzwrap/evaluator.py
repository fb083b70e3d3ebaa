"""Recall/precision accounting over gold-labelled corpora.

Both ratios share the total gold tuple count as denominator, so recall
can exceed 1.0 under over-extraction; reports keep it unclamped and a
conventional precision (pertinent over extracted) is carried alongside.
A tuple is pertinent when every attribute it extracted matches a gold
attribute span of the same record and name exactly; empty tuples are
counted extracted but never pertinent.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from .corpus import CorpusPage
from .errors import FuzzwrapError, ZeroTotal
from .extractor import ExtractionResult, extract
from .induction import WrapperModel
from .page_model import ZoneLabels


def recall(extracted: int, total: int) -> float:
    if total < 1:
        raise ZeroTotal("recall needs at least one gold tuple")
    return extracted / total


def precision(pertinent: int, total: int) -> float:
    if total < 1:
        raise ZeroTotal("precision needs at least one gold tuple")
    return pertinent / total


def standard_precision(pertinent: int, extracted: int) -> float:
    return pertinent / extracted if extracted else 0.0


def _overlap(a: tuple[int, int], b: tuple[int, int]) -> int:
    return max(0, min(a[1], b[1]) - max(a[0], b[0]))


def match_tuples(result: ExtractionResult, gold: ZoneLabels) -> tuple[int, int, int]:
    """(extracted, pertinent, total) for one page.

    Extracted tuples claim gold records greedily by span overlap; a
    claimed tuple is pertinent when it has at least one attribute and
    every one of them appears verbatim among that record's gold spans.
    """
    total = len(gold.records)
    extracted = len(result.records)
    gold_attrs = [
        {(a.name, tuple(a.span)) for a in attrs} for attrs in gold.attributes
    ]
    claimed: set[int] = set()
    pertinent = 0
    for record in result.records:
        best: tuple[int, int] | None = None
        for gi, gspan in enumerate(gold.records):
            if gi in claimed:
                continue
            ov = _overlap(record.span, gspan)
            if ov > 0 and (best is None or ov > best[0]):
                best = (ov, gi)
        if best is None:
            continue
        gi = best[1]
        claimed.add(gi)
        if record.attributes and all(
            (a.name, a.span) in gold_attrs[gi] for a in record.attributes
        ):
            pertinent += 1
    return extracted, pertinent, total


@dataclass(frozen=True)
class SetReport:
    name: str
    pages: int
    failures: int  # pages where extraction aborted
    total: int
    extracted: int
    pertinent: int
    recall: float
    precision: float  # shared-total denominator
    precision_standard: float  # pertinent over extracted

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "pages": self.pages,
            "failures": self.failures,
            "total": self.total,
            "extracted": self.extracted,
            "pertinent": self.pertinent,
            "recall": self.recall,
            "precision": self.precision,
            "precision_standard": self.precision_standard,
        }


def evaluate_pages(
    pages: Iterable[CorpusPage],
    extract_fn: Callable[[CorpusPage], ExtractionResult],
    name: str = "set",
) -> SetReport:
    """Aggregate per-page counts; failed pages contribute zero extracted."""
    total = extracted = pertinent = failures = page_count = 0
    for page in pages:
        page_count += 1
        total += len(page.labels.records)
        try:
            result = extract_fn(page)
        except FuzzwrapError:
            failures += 1
            continue
        e, p, _ = match_tuples(result, page.labels)
        extracted += e
        pertinent += p
    if total < 1:
        raise ZeroTotal(f"corpus {name!r} holds no gold tuples")
    return SetReport(
        name=name,
        pages=page_count,
        failures=failures,
        total=total,
        extracted=extracted,
        pertinent=pertinent,
        recall=recall(extracted, total),
        precision=precision(pertinent, total),
        precision_standard=standard_precision(pertinent, extracted),
    )


def evaluate(
    pages: Iterable[CorpusPage], model: WrapperModel, name: str = "set"
) -> SetReport:
    return evaluate_pages(
        pages, lambda p: extract(p.html, model, p.page_id), name=name
    )
