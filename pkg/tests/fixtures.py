"""Hand-built country-code listing fixtures shared across the suite."""

from __future__ import annotations

import re

from fuzzwrap import AttributeSpan, ZoneLabels

# Three tiny training pages.  Each page carries two records of the form
# "<LI>Name 123" and a distinct four-token preamble in front of the
# global zone, chosen so the pooled begin-side frequency matrix hits a
# known set of counts.
CC_PAGES: dict[str, str] = {
    "cc1": "Phone<UL>CountryCodes<LI>Congo 242<LI>Egypt 20</UL>",
    "cc2": "Fax<UL>Codes<I><LI>Benin 229<LI>Mali 223</UL>",
    "cc3": "Tel§,Codes<LI>Chad 235<LI>Togo 228</UL>",
}

# A fourth page whose global zone is preceded by the four-token context
# capitalized, capitalized, list-open, html-open; used as a scan query
# against the model trained on the three pages above.
QUERY_PAGE = "PhoneCodes<UL><B><LI>Niger 227<LI>Kenya 254</UL>"

# Expected counts for the pooled global-begin left detector after
# training on the three pages (rows are distances 0..4, columns are the
# twelve token classes in id order).
EXPECTED_GLOBAL_BEGIN_LEFT = (
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0),
    (2, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 1),
    (3, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
)

_RECORD_RE = re.compile(r"([A-Z][a-z]+) (\d+)")


def listing_labels(page_id: str, html: str) -> ZoneLabels:
    """Labels for the fixture layout: global from first <LI> to </UL>."""
    global_start = html.index("<LI>")
    global_end = html.index("</UL>")
    starts = [m.start() for m in re.finditer(r"<LI>", html)]
    records = []
    attributes = []
    for i, s in enumerate(starts):
        e = starts[i + 1] if i + 1 < len(starts) else global_end
        records.append((s, e))
        m = _RECORD_RE.search(html, s, e)
        attributes.append(
            (
                AttributeSpan("country", (m.start(1), m.end(1))),
                AttributeSpan("code", (m.start(2), m.end(2))),
            )
        )
    return ZoneLabels(page_id, (global_start, global_end), tuple(records), tuple(attributes))


def cc_labels() -> list[ZoneLabels]:
    return [listing_labels(pid, html) for pid, html in CC_PAGES.items()]
