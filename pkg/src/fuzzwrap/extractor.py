"""Hierarchical tuple extraction driven by separator scanning.

Extraction proceeds in three steps: the global zone is located first,
then record zones inside it, then named attribute zones inside each
record.  A separator hit is any token boundary whose combined left and
right detector error stays within the configured threshold.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .errors import GlobalZoneNotFound
from .fuzzy import detector_error, infer_error_tot
from .induction import SeparatorModel, WrapperConfig, WrapperModel, detector_cost
from .page_model import (
    GLOBAL_ZONE,
    RECORD_ZONE,
    DetectorWindow,
    Edge,
    Side,
    ZoneKind,
    attribute_zone,
    left_classes,
    right_classes,
)
from .tokens import Token, TokenClass, tokenize


@dataclass(frozen=True)
class SeparatorHit:
    position: int  # token boundary index
    offset: int  # character offset of that boundary
    error: float  # crisp combined error
    zone: ZoneKind
    edge: Edge


@dataclass(frozen=True)
class AttributeValue:
    name: str
    text: str
    span: tuple[int, int]
    begin_error: float
    end_error: float


@dataclass(frozen=True)
class ExtractedRecord:
    span: tuple[int, int]
    begin_error: float
    end_error: float
    attributes: tuple[AttributeValue, ...]

    def values(self) -> dict[str, list[AttributeValue]]:
        out: dict[str, list[AttributeValue]] = {}
        for a in self.attributes:
            out.setdefault(a.name, []).append(a)
        return out


@dataclass(frozen=True)
class ExtractionResult:
    page_id: str
    global_span: tuple[int, int]
    global_errors: tuple[float, float]
    records: tuple[ExtractedRecord, ...]


def _scan(
    classes: Sequence[TokenClass],
    offsets: Sequence[int],
    sep: SeparatorModel,
    lo: int,
    hi: int,
    config: WrapperConfig,
) -> list[SeparatorHit]:
    k = sep.left.matrix.window_len
    hits: list[SeparatorHit] = []
    for b in range(lo, hi + 1):
        lw = DetectorWindow(Side.LEFT, sep.zone, sep.edge, left_classes(classes, b, k))
        rw = DetectorWindow(Side.RIGHT, sep.zone, sep.edge, right_classes(classes, b, k))
        left_err = detector_error(detector_cost(sep.left.matrix, lw, sep.left.decay_width), sep.left)
        right_err = detector_error(detector_cost(sep.right.matrix, rw, sep.right.decay_width), sep.right)
        total = infer_error_tot(left_err, right_err, config.partition, config.combiner)
        if abs(total) <= config.threshold:
            hits.append(SeparatorHit(b, offsets[b], total, sep.zone, sep.edge))
    return hits


def scan_separator(
    tokens: Sequence[Token],
    sep: SeparatorModel,
    lo: int,
    hi: int,
    config: WrapperConfig,
) -> list[SeparatorHit]:
    """All accepted hits for one separator over boundary indices [lo, hi]."""
    classes = [t.cls for t in tokens]
    offsets = [t.span[0] for t in tokens] + [tokens[-1].span[1] if tokens else 0]
    return _scan(classes, offsets, sep, lo, hi, config)


def _best(hits: list[SeparatorHit]) -> SeparatorHit:
    return min(hits, key=lambda h: (abs(h.error), h.position))


def _pair_records(
    begins: list[SeparatorHit], ends: list[SeparatorHit]
) -> list[tuple[SeparatorHit, SeparatorHit]]:
    """Greedy left-to-right pairing.

    A begin pairs with the nearest following end at or before the next
    begin; begins inside an already paired record are skipped, and
    unpaired begins are dropped.
    """
    pairs: list[tuple[SeparatorHit, SeparatorHit]] = []
    cursor = None
    for i, b in enumerate(begins):
        if cursor is not None and b.position < cursor:
            continue
        limit = begins[i + 1].position if i + 1 < len(begins) else None
        for e in ends:
            if e.position <= b.position:
                continue
            if cursor is not None and e.position <= cursor:
                continue
            if limit is not None and e.position > limit:
                break
            pairs.append((b, e))
            cursor = e.position
            break
    return pairs


def _select_attributes(
    model: WrapperModel,
    scan: Callable[[ZoneKind, Edge, int, int], list[SeparatorHit]],
    page: str,
    lo: int,
    hi: int,
) -> tuple[AttributeValue, ...]:
    """Best-first non-overlapping begin/end pairs across attribute names.

    Candidates are ranked by combined absolute error; several surviving
    pairs under one name yield a multi-valued attribute.
    """
    candidates: list[tuple[float, int, int, str, SeparatorHit, SeparatorHit]] = []
    for name in model.attribute_names:
        zone = attribute_zone(name)
        begin_hits = scan(zone, Edge.BEGIN, lo, hi)
        end_hits = scan(zone, Edge.END, lo, hi)
        for b in begin_hits:
            for e in end_hits:
                if e.position > b.position:
                    candidates.append(
                        (abs(b.error) + abs(e.error), b.position, e.position, name, b, e)
                    )
    candidates.sort(key=lambda c: (c[0], c[1], c[2], c[3]))

    chosen: list[tuple[float, int, int, str, SeparatorHit, SeparatorHit]] = []
    for cand in candidates:
        _, bp, ep, _, _, _ = cand
        if all(ep <= obp or bp >= oep for _, obp, oep, _, _, _ in chosen):
            chosen.append(cand)
    chosen.sort(key=lambda c: c[1])
    return tuple(
        AttributeValue(name, page[b.offset:e.offset], (b.offset, e.offset), b.error, e.error)
        for _, _, _, name, b, e in chosen
    )


def extract(page: str, model: WrapperModel, page_id: str = "") -> ExtractionResult:
    """Extract all tuples from a page with a trained wrapper.

    Raises GlobalZoneNotFound when no acceptable global begin/end pair
    exists; missing attributes yield partial tuples, and a record whose
    separators fired but whose attributes did not is kept as an empty
    tuple.
    """
    tokens = tokenize(page)
    classes = [t.cls for t in tokens]
    offsets = [t.span[0] for t in tokens] + [len(page)]
    n = len(tokens)
    config = model.config

    def scan(zone: ZoneKind, edge: Edge, lo: int, hi: int) -> list[SeparatorHit]:
        return _scan(classes, offsets, model.separator(zone, edge), lo, hi, config)

    begin_hits = scan(GLOBAL_ZONE, Edge.BEGIN, 0, n)
    if not begin_hits:
        raise GlobalZoneNotFound(f"page {page_id or '<anonymous>'}: no global begin hit")
    g_begin = _best(begin_hits)
    end_hits = [h for h in scan(GLOBAL_ZONE, Edge.END, 0, n) if h.position > g_begin.position]
    if not end_hits:
        raise GlobalZoneNotFound(f"page {page_id or '<anonymous>'}: no global end hit")
    g_end = _best(end_hits)

    record_begins = scan(RECORD_ZONE, Edge.BEGIN, g_begin.position, g_end.position)
    record_ends = scan(RECORD_ZONE, Edge.END, g_begin.position, g_end.position)

    records = []
    for b, e in _pair_records(record_begins, record_ends):
        attrs = _select_attributes(model, scan, page, b.position, e.position)
        records.append(
            ExtractedRecord((b.offset, e.offset), b.error, e.error, attrs)
        )
    return ExtractionResult(
        page_id=page_id,
        global_span=(g_begin.offset, g_end.offset),
        global_errors=(g_begin.error, g_end.error),
        records=tuple(records),
    )


def result_to_dict(result: ExtractionResult) -> dict:
    return {
        "page_id": result.page_id,
        "global": {
            "span": list(result.global_span),
            "begin_error": result.global_errors[0],
            "end_error": result.global_errors[1],
        },
        "tuples": [
            {
                "span": list(r.span),
                "begin_error": r.begin_error,
                "end_error": r.end_error,
                "attributes": {
                    name: [
                        {
                            "text": v.text,
                            "span": list(v.span),
                            "begin_error": v.begin_error,
                            "end_error": v.end_error,
                        }
                        for v in values
                    ]
                    for name, values in r.values().items()
                },
            }
            for r in result.records
        ],
    }
