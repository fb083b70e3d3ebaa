"""Rigid exact-string-delimiter wrapper, used as a comparison yardstick.

This is the classic delimiter-pair approach: learn literal strings
around records and between attributes, then extract a tuple only where
the full delimiter walk succeeds with every attribute present in the
learned order.  It has no tolerance for missing attributes or changed
delimiters by design; it exists so the fuzzy wrapper has an honest
rigid baseline to be measured against.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import EmptyTrainingSet
from .extractor import AttributeValue, ExtractedRecord, ExtractionResult
from .page_model import ZoneLabels


def _common_suffix(strings: list[str]) -> str:
    if not strings:
        return ""
    shortest = min(strings, key=len)
    for k in range(len(shortest), 0, -1):
        tail = shortest[-k:]
        if all(s.endswith(tail) for s in strings):
            return tail
    return ""


def _common_prefix(strings: list[str]) -> str:
    if not strings:
        return ""
    shortest = min(strings, key=len)
    for k in range(len(shortest), 0, -1):
        head = shortest[:k]
        if all(s.startswith(head) for s in strings):
            return head
    return ""


@dataclass(frozen=True)
class DelimiterBaseline:
    record_prefix: str
    record_suffix: str
    attr_order: tuple[str, ...]
    gaps: tuple[str, ...]  # gaps[i] precedes attribute i; len == len(attr_order)

    @classmethod
    def fit(
        cls, pages: Mapping[str, str], labels: Iterable[ZoneLabels]
    ) -> "DelimiterBaseline":
        pre: list[str] = []
        post: list[str] = []
        shapes: Counter[tuple[tuple[str, ...], tuple[str, ...]]] = Counter()
        for lab in labels:
            page = pages[lab.page_id]
            last = lab.global_span[0]
            for i, ((rs, re), attrs) in enumerate(zip(lab.records, lab.attributes)):
                pre.append(page[last:rs])
                last = re
                next_start = (
                    lab.records[i + 1][0] if i + 1 < len(lab.records) else lab.global_span[1]
                )
                post.append(page[re:next_start])
                names = tuple(a.name for a in attrs)
                gaps = []
                cursor = rs
                for a in attrs:
                    gaps.append(page[cursor:a.span[0]])
                    cursor = a.span[1]
                shapes[(names, tuple(gaps))] += 1
        if not shapes:
            raise EmptyTrainingSet("no labelled records to learn delimiters from")
        # the most common attribute layout wins; ties break deterministically
        (names, gaps), _ = sorted(shapes.items(), key=lambda kv: (-kv[1], kv[0]))[0]
        return cls(
            record_prefix=_common_suffix(pre),
            record_suffix=_common_prefix(post),
            attr_order=names,
            gaps=gaps,
        )

    def extract(self, page: str, page_id: str = "") -> ExtractionResult:
        records: list[ExtractedRecord] = []
        pos = 0
        first_start = None
        last_end = 0
        while True:
            i = page.find(self.record_prefix, pos)
            if i < 0:
                break
            r_start = i + len(self.record_prefix)
            j = page.find(self.record_suffix, r_start)
            if j < 0:
                break
            record_text = page[r_start:j]
            attrs = self._walk(record_text, r_start)
            if attrs is not None:
                if first_start is None:
                    first_start = r_start
                last_end = j
                records.append(
                    ExtractedRecord((r_start, j), 0.0, 0.0, attrs)
                )
            pos = j
        return ExtractionResult(
            page_id=page_id,
            global_span=(first_start or 0, last_end),
            global_errors=(0.0, 0.0),
            records=tuple(records),
        )

    def _walk(self, record_text: str, base: int) -> tuple[AttributeValue, ...] | None:
        """All attributes, in order, or nothing at all."""
        values: list[AttributeValue] = []
        cursor = 0
        for k, name in enumerate(self.attr_order):
            lead = self.gaps[k]
            s = record_text.find(lead, cursor)
            if s < 0:
                return None
            v_start = s + len(lead)
            if k + 1 < len(self.attr_order) and self.gaps[k + 1]:
                v_end = record_text.find(self.gaps[k + 1], v_start)
                if v_end < 0:
                    return None
            else:
                v_end = len(record_text)
            if v_end <= v_start:
                return None
            values.append(
                AttributeValue(
                    name,
                    record_text[v_start:v_end],
                    (base + v_start, base + v_end),
                    0.0,
                    0.0,
                )
            )
            cursor = v_end
        return tuple(values)
