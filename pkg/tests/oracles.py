"""Independent reference implementations used to compute expected values.

These deliberately avoid the package's code paths: the segmenter is a
straight character walk, window enumeration slices lexeme lists, and
costs are computed with exact rationals.
"""

from __future__ import annotations

from fractions import Fraction

_PUNCT = set("!\"#$%&'()*+,-./:;<=>?@[\\]^_`{|}~")
_SPACE = {" ", "\t"}
_NL = {"\r", "\n", "\x0b", "\x0c"}
_DIGITS = set("0123456789")


def reference_segments(text: str) -> list[str]:
    """Split text into lexemes by walking characters one at a time."""
    out: list[str] = []
    i = 0
    n = len(text)
    while i < n:
        c = text[i]
        if c == "<":
            j = i + 1
            while j < n and text[j] not in "<>":
                j += 1
            if j < n and text[j] == ">":
                out.append(text[i:j + 1])
                i = j + 1
                continue
            out.append(c)
            i += 1
            continue
        if c in _SPACE or c in _NL:
            kind = _SPACE if c in _SPACE else _NL
            j = i
            while j < n and text[j] in kind:
                j += 1
            out.append(text[i:j])
            i = j
            continue
        if c in _DIGITS:
            j = i
            while j < n and text[j] in _DIGITS:
                j += 1
            out.append(text[i:j])
            i = j
            continue
        if c.isalpha():
            if c.isupper():
                j = i
                while j < n and text[j].isalpha() and text[j].isupper():
                    j += 1
                if j < n and text[j].isalpha() and text[j].islower():
                    if j - i > 1:
                        out.append(text[i:j - 1])
                        i = j - 1
                        continue
                    k = j
                    while k < n and text[k].isalpha() and text[k].islower():
                        k += 1
                    out.append(text[i:k])
                    i = k
                    continue
                out.append(text[i:j])
                i = j
                continue
            if c.islower():
                j = i
                while j < n and text[j].isalpha() and text[j].islower():
                    j += 1
                out.append(text[i:j])
                i = j
                continue
            j = i
            while (
                j < n
                and text[j].isalpha()
                and not text[j].isupper()
                and not text[j].islower()
            ):
                j += 1
            out.append(text[i:j])
            i = j
            continue
        out.append(c)
        i += 1
    return out


def enumerate_boundary_offsets(labels) -> list[tuple[str, str, int]]:
    """(zone key, edge, char offset) for every labelled zone edge."""
    out = [("global", "begin", labels.global_span[0]), ("global", "end", labels.global_span[1])]
    for r, attrs in zip(labels.records, labels.attributes):
        out.append(("record", "begin", r[0]))
        out.append(("record", "end", r[1]))
        for a in attrs:
            out.append((f"attribute:{a.name}", "begin", a.span[0]))
            out.append((f"attribute:{a.name}", "end", a.span[1]))
    return out


def frac_nearest(counts: list[list[int]], col: int, distance: int) -> int | None:
    best_key = None
    best_i = None
    for i in range(1, len(counts)):
        f = counts[i][col]
        if f <= 0:
            continue
        key = (abs(distance - i), -f, -i)
        if best_key is None or key < best_key:
            best_key, best_i = key, i
    return best_i


def frac_token_cost(
    counts: list[list[int]], n: int, col: int, distance: int, width: int
) -> Fraction:
    """Exact-rational token cost; col is the zero-based class column."""
    f = counts[distance][col]
    if f > 0:
        return Fraction(f, n)
    near = frac_nearest(counts, col, distance)
    if near is None:
        return Fraction(0)
    pos = max(Fraction(0), 1 - Fraction(abs(distance - near), width))
    return pos * Fraction(counts[near][col], n)


def frac_window_cost(
    counts: list[list[int]], n: int, window_cols: list[tuple[int, int | None]], width: int
) -> Fraction:
    """Window as (distance, column) pairs; column None marks padding."""
    total = Fraction(0)
    for distance, col in window_cols:
        if col is None:
            continue
        total += frac_token_cost(counts, n, col, distance, width)
    return total
