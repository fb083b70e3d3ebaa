"""Deterministic synthetic listing corpora with controllable anomalies.

Pages imitate a directory of names and numeric codes rendered as an HTML
list.  Every record sits on its own ``<LI>`` line, separated from its
neighbours by a ``<BR>`` spacer line, so separator contexts are stable;
anomalies are injected per record at configurable rates:

* ``missing``      drop one attribute value
* ``permutation``  reverse the attribute order
* ``multivalue``   append a second code value
* ``typo``         substitute the single-character delimiter between values

Gold labels are emitted alongside each page and always validate.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from pathlib import Path

from .page_model import (
    AttributeSpan,
    ZoneLabels,
    load_label_file,
    save_label_file,
)

_SYLLABLES = (
    "ba", "do", "ka", "mi", "ru", "ta", "ve", "zo", "li", "na",
    "po", "se", "gu", "fe", "wa", "ny", "cho", "dra", "lum", "tor",
)
_TYPO_DELIMS = "-;:,"

COUNTRY = "country"
CODE = "code"


@dataclass(frozen=True)
class AnomalyProfile:
    missing: float = 0.0
    permutation: float = 0.0
    multivalue: float = 0.0
    typo: float = 0.0

    def __post_init__(self) -> None:
        for field_name, rate in self.rates().items():
            if not 0.0 <= rate <= 1.0:
                raise ValueError(f"{field_name} rate {rate} outside [0, 1]")

    def rates(self) -> dict[str, float]:
        return {
            "missing": self.missing,
            "permutation": self.permutation,
            "multivalue": self.multivalue,
            "typo": self.typo,
        }


@dataclass(frozen=True)
class AnomalyCounts:
    records: int = 0
    missing: int = 0
    permutation: int = 0
    multivalue: int = 0
    typo: int = 0


@dataclass(frozen=True)
class CorpusPage:
    page_id: str
    html: str
    labels: ZoneLabels


@dataclass(frozen=True)
class GoldCorpus:
    pages: tuple[CorpusPage, ...]
    profile: AnomalyProfile
    seed: int
    counts: AnomalyCounts


def _name(rng: random.Random) -> str:
    word = "".join(rng.choice(_SYLLABLES) for _ in range(rng.randint(2, 3)))
    return word.capitalize()


def _code(rng: random.Random) -> str:
    return str(rng.randint(1, 999))


def _render_record(
    rng: random.Random, profile: AnomalyProfile
) -> tuple[list[tuple[str, str]], str, set[str]]:
    """Value list, delimiter, and the anomaly kinds realized."""
    values: list[tuple[str, str]] = [(COUNTRY, _name(rng)), (CODE, _code(rng))]
    flags: set[str] = set()
    # applied before any value can be dropped so every draw is unconditional
    if rng.random() < profile.multivalue:
        values.append((CODE, _code(rng)))
        flags.add("multivalue")
    if rng.random() < profile.permutation:
        values.reverse()
        flags.add("permutation")
    if rng.random() < profile.missing:
        values.pop(rng.randrange(len(values)))
        flags.add("missing")
    delim = " "
    if rng.random() < profile.typo:
        delim = rng.choice(_TYPO_DELIMS)
        flags.add("typo")
    return values, delim, flags


def assemble_page(
    page_id: str,
    page_index: int,
    record_specs: list[tuple[list[tuple[str, str]], str]],
) -> CorpusPage:
    """Render explicit records, each a (values, delimiter) pair, into a page."""
    parts: list[str] = []
    pos = 0

    def push(s: str) -> int:
        nonlocal pos
        parts.append(s)
        start = pos
        pos += len(s)
        return start

    push(f"<HTML><UL>List{page_index}\n")
    global_start = pos
    records: list[tuple[int, int]] = []
    attributes: list[tuple[AttributeSpan, ...]] = []
    for values, delim in record_specs:
        push("<BR>\n<LI>")
        record_start = pos
        spans: list[AttributeSpan] = []
        for i, (attr_name, text) in enumerate(values):
            if i:
                push(delim)
            start = push(text)
            spans.append(AttributeSpan(attr_name, (start, pos)))
        records.append((record_start, pos))
        attributes.append(tuple(spans))
        push("\n")
    push("<BR>\n")
    push("</UL>")
    global_end = pos
    push("</HTML>")

    labels = ZoneLabels(
        page_id=page_id,
        global_span=(global_start, global_end),
        records=tuple(records),
        attributes=tuple(attributes),
    )
    return CorpusPage(page_id, "".join(parts), labels)


def generate_page(
    rng: random.Random,
    profile: AnomalyProfile,
    page_id: str,
    page_index: int,
    n_records: int,
) -> tuple[CorpusPage, AnomalyCounts]:
    specs: list[tuple[list[tuple[str, str]], str]] = []
    tallies = {"missing": 0, "permutation": 0, "multivalue": 0, "typo": 0}
    for _ in range(n_records):
        values, delim, flags = _render_record(rng, profile)
        specs.append((values, delim))
        for f in flags:
            tallies[f] += 1
    page = assemble_page(page_id, page_index, specs)
    return page, AnomalyCounts(records=n_records, **tallies)


def generate_corpus(
    profile: AnomalyProfile,
    n_pages: int,
    seed: int,
    min_records: int = 5,
    max_records: int = 9,
) -> GoldCorpus:
    """Same profile and seed always produce the identical corpus."""
    rng = random.Random(seed)
    pages: list[CorpusPage] = []
    total = {"records": 0, "missing": 0, "permutation": 0, "multivalue": 0, "typo": 0}
    for k in range(n_pages):
        n_records = rng.randint(min_records, max_records)
        page, counts = generate_page(rng, profile, f"p{k:03d}", k, n_records)
        pages.append(page)
        total["records"] += counts.records
        total["missing"] += counts.missing
        total["permutation"] += counts.permutation
        total["multivalue"] += counts.multivalue
        total["typo"] += counts.typo
    return GoldCorpus(tuple(pages), profile, seed, AnomalyCounts(**total))


def save_corpus(corpus: GoldCorpus, directory: str | Path) -> None:
    """One page file per page plus a single label file."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    entries = []
    for page in corpus.pages:
        (directory / f"{page.page_id}.html").write_text(page.html, encoding="utf-8")
        entries.append((f"{page.page_id}.html", page.labels))
    save_label_file(directory / "labels.json", entries)


def load_corpus(directory: str | Path) -> list[CorpusPage]:
    directory = Path(directory)
    pages = []
    for html_path, labels in load_label_file(directory / "labels.json"):
        html = (directory / html_path).read_text(encoding="utf-8")
        pages.append(CorpusPage(labels.page_id, html, labels))
    return pages


def corpus_fingerprint(corpus: GoldCorpus) -> str:
    """Stable digest for determinism checks."""
    import hashlib

    h = hashlib.sha256()
    for page in corpus.pages:
        h.update(page.page_id.encode())
        h.update(page.html.encode())
        h.update(json.dumps(
            [list(r) for r in page.labels.records], separators=(",", ":")
        ).encode())
    return h.hexdigest()
