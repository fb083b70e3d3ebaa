"""Page zone architecture: user labels, validation, detector windows.

A page is organized as a global zone containing record zones, each of
which contains named attribute zones.  Every zone is delimited by a
begin separator and an end separator, and each separator is observed
through two fixed-length token-class windows, one on each side of the
boundary.
"""

from __future__ import annotations

import json
import math
from bisect import bisect_left
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Iterable, Sequence

from .errors import (
    BoundaryInsideToken,
    InvalidSpan,
    NoRecords,
    OverlappingSpans,
    SpanOutsideParent,
)
from .tokens import Token, TokenClass, tokenize

Span = tuple[int, int]

LABEL_FILE_VERSION = 1


class Edge(str, Enum):
    BEGIN = "begin"
    END = "end"


class Side(str, Enum):
    LEFT = "left"
    RIGHT = "right"


@dataclass(frozen=True)
class ZoneKind:
    level: str  # "global" | "record" | "attribute"
    name: str | None = None

    def __post_init__(self) -> None:
        if self.level not in ("global", "record", "attribute"):
            raise ValueError(f"unknown zone level {self.level!r}")
        if self.level == "attribute" and not self.name:
            raise ValueError("attribute zones need a non-empty name")
        if self.level != "attribute" and self.name is not None:
            raise ValueError(f"{self.level} zones carry no name")

    @property
    def key(self) -> str:
        return self.level if self.name is None else f"attribute:{self.name}"

    @classmethod
    def from_key(cls, key: str) -> "ZoneKind":
        if key.startswith("attribute:"):
            return cls("attribute", key.split(":", 1)[1])
        return cls(key)


GLOBAL_ZONE = ZoneKind("global")
RECORD_ZONE = ZoneKind("record")


def attribute_zone(name: str) -> ZoneKind:
    return ZoneKind("attribute", name)


@dataclass(frozen=True)
class AttributeSpan:
    name: str
    span: Span


@dataclass(frozen=True)
class ZoneLabels:
    """Character-offset annotations for one page.

    ``attributes`` holds one sequence per record, aligned with
    ``records``; a name may repeat inside a record (multi-valued
    attribute).  All spans are half-open.
    """

    page_id: str
    global_span: Span
    records: tuple[Span, ...]
    attributes: tuple[tuple[AttributeSpan, ...], ...]

    def attribute_names(self) -> tuple[str, ...]:
        seen: list[str] = []
        for attrs in self.attributes:
            for a in attrs:
                if a.name not in seen:
                    seen.append(a.name)
        return tuple(seen)


@dataclass(frozen=True)
class DetectorWindow:
    """Token classes flanking one zone boundary.

    ``classes`` is in document order.  For a LEFT window that means
    distances len..1 reading toward the boundary; for a RIGHT window
    distances 1..len reading away from it.  Pad filling keeps the length
    fixed at page edges.
    """

    side: Side
    zone: ZoneKind
    edge: Edge
    classes: tuple[TokenClass, ...]

    def by_distance(self) -> tuple[tuple[int, TokenClass], ...]:
        k = len(self.classes)
        if self.side is Side.LEFT:
            return tuple((k - i, c) for i, c in enumerate(self.classes))
        return tuple((i + 1, c) for i, c in enumerate(self.classes))


def _check_span(span: Span, parent: Span, boundaries: set[int], what: str) -> None:
    s, e = span
    if s >= e:
        raise InvalidSpan(f"{what} span [{s}, {e}) is empty or reversed", offset=s)
    if s < parent[0] or e > parent[1]:
        off = s if s < parent[0] else e
        raise SpanOutsideParent(
            f"{what} span [{s}, {e}) escapes parent [{parent[0]}, {parent[1]})", offset=off
        )
    for off in (s, e):
        if off not in boundaries:
            raise BoundaryInsideToken(f"{what} boundary at offset {off} splits a token", offset=off)


def validate_labels(page: str, labels: ZoneLabels, tokens: Sequence[Token] | None = None) -> ZoneLabels:
    """Check nesting, ordering, and token alignment; never move a span."""
    toks = tokenize(page) if tokens is None else tokens
    boundaries = {t.span[0] for t in toks}
    boundaries.add(len(page))

    _check_span(labels.global_span, (0, len(page)), boundaries, "global")
    if len(labels.attributes) != len(labels.records):
        raise InvalidSpan(
            f"{len(labels.records)} records but {len(labels.attributes)} attribute groups"
        )
    prev_end: int | None = None
    for r in labels.records:
        _check_span(r, labels.global_span, boundaries, "record")
        if prev_end is not None and r[0] < prev_end:
            raise OverlappingSpans(f"record span [{r[0]}, {r[1]}) overlaps its predecessor", offset=r[0])
        prev_end = r[1]
    for r, attrs in zip(labels.records, labels.attributes):
        prev_end = None
        for a in attrs:
            if not a.name:
                raise InvalidSpan("attribute name must be non-empty", offset=a.span[0])
            _check_span(a.span, r, boundaries, f"attribute {a.name!r}")
            if prev_end is not None and a.span[0] < prev_end:
                raise OverlappingSpans(
                    f"attribute span [{a.span[0]}, {a.span[1]}) overlaps its predecessor",
                    offset=a.span[0],
                )
            prev_end = a.span[1]
    return labels


def count_record_tokens(tokens: Sequence[Token], span: Span) -> int:
    s, e = span
    return sum(1 for t in tokens if t.span[0] >= s and t.span[1] <= e)


def compute_window_len(labelled: Iterable[tuple[Sequence[Token], ZoneLabels]]) -> int:
    """Mean record length in tokens, rounded half up, at least 1."""
    lengths = [
        count_record_tokens(toks, r) for toks, labels in labelled for r in labels.records
    ]
    if not lengths:
        raise NoRecords("no labelled records to average")
    mean = sum(lengths) / len(lengths)
    return max(1, int(math.floor(mean + 0.5)))


def boundary_index(starts: Sequence[int], offset: int) -> int:
    """Token-boundary index for a character offset on a token boundary."""
    return bisect_left(starts, offset)


def left_classes(classes: Sequence[TokenClass], b: int, k: int) -> tuple[TokenClass, ...]:
    seg = tuple(classes[max(0, b - k):b])
    return (TokenClass.PAD,) * (k - len(seg)) + seg


def right_classes(classes: Sequence[TokenClass], b: int, k: int) -> tuple[TokenClass, ...]:
    seg = tuple(classes[b:b + k])
    return seg + (TokenClass.PAD,) * (k - len(seg))


def extract_windows(
    tokens: Sequence[Token], labels: ZoneLabels, window_len: int
) -> list[DetectorWindow]:
    """Both windows for every labelled zone edge, in label order."""
    classes = [t.cls for t in tokens]
    starts = [t.span[0] for t in tokens]
    out: list[DetectorWindow] = []

    def emit(zone: ZoneKind, edge: Edge, offset: int) -> None:
        b = boundary_index(starts, offset)
        out.append(DetectorWindow(Side.LEFT, zone, edge, left_classes(classes, b, window_len)))
        out.append(DetectorWindow(Side.RIGHT, zone, edge, right_classes(classes, b, window_len)))

    emit(GLOBAL_ZONE, Edge.BEGIN, labels.global_span[0])
    emit(GLOBAL_ZONE, Edge.END, labels.global_span[1])
    for r, attrs in zip(labels.records, labels.attributes):
        emit(RECORD_ZONE, Edge.BEGIN, r[0])
        emit(RECORD_ZONE, Edge.END, r[1])
        for a in attrs:
            emit(attribute_zone(a.name), Edge.BEGIN, a.span[0])
            emit(attribute_zone(a.name), Edge.END, a.span[1])
    return out


# ---------------------------------------------------------------------------
# Label file format (schema documented in docs/schemas.md)

def labels_to_dict(labels: ZoneLabels, html_path: str | None = None) -> dict:
    d: dict = {"page_id": labels.page_id}
    if html_path is not None:
        d["html_path"] = html_path
    d["global"] = list(labels.global_span)
    d["records"] = [list(r) for r in labels.records]
    d["attributes"] = [
        [{"name": a.name, "span": list(a.span)} for a in attrs] for attrs in labels.attributes
    ]
    return d


def labels_from_dict(d: dict, page_id: str | None = None) -> ZoneLabels:
    return ZoneLabels(
        page_id=page_id or d.get("page_id", ""),
        global_span=tuple(d["global"]),
        records=tuple(tuple(r) for r in d["records"]),
        attributes=tuple(
            tuple(AttributeSpan(a["name"], tuple(a["span"])) for a in attrs)
            for attrs in d["attributes"]
        ),
    )


def save_label_file(path: str | Path, entries: Iterable[tuple[str | None, ZoneLabels]]) -> None:
    doc = {
        "version": LABEL_FILE_VERSION,
        "pages": [labels_to_dict(labels, html_path) for html_path, labels in entries],
    }
    Path(path).write_text(json.dumps(doc, indent=2) + "\n", encoding="utf-8")


def load_label_file(path: str | Path) -> list[tuple[str | None, ZoneLabels]]:
    doc = json.loads(Path(path).read_text(encoding="utf-8"))
    if doc.get("version") != LABEL_FILE_VERSION:
        raise InvalidSpan(f"unsupported label file version {doc.get('version')!r}")
    return [(p.get("html_path"), labels_from_dict(p)) for p in doc["pages"]]


def load_labelled_pages(label_path: str | Path) -> tuple[dict[str, str], list[ZoneLabels]]:
    """Read a label file plus the page files it references.

    Relative html paths resolve against the label file's directory.
    """
    label_path = Path(label_path)
    pages: dict[str, str] = {}
    labels: list[ZoneLabels] = []
    for html_path, lab in load_label_file(label_path):
        if html_path is None:
            raise InvalidSpan(f"page {lab.page_id!r} has no html_path")
        p = Path(html_path)
        if not p.is_absolute():
            p = label_path.parent / p
        pages[lab.page_id] = p.read_text(encoding="utf-8")
        labels.append(lab)
    return pages, labels
