"""Lossless segmentation of HTML text into classified tokens.

The token stream is the shared alphabet for wrapper learning and
extraction.  Segmentation is maximal munch, left to right:

* ``<...>`` is a single tag token.  List tags (UL, OL, LI, DL, DT, DD,
  TR, TD, TH) become LIST_OPEN/LIST_CLOSE, whitespace-like tags (BR, P)
  become CTRL_OPEN/CTRL_CLOSE, and every other tag HTML_OPEN/HTML_CLOSE,
  split on a leading ``/``.  A ``<`` that never closes is plain
  punctuation.
* Alphabetic runs break at case humps: ``FSMCongo`` yields
  UPPERCASE(FSM) + CAPITALIZED(Congo), ``iPhone4`` yields
  LOWERCASE(i) + CAPITALIZED(Phone) + NUMBER(4).
* ASCII digit runs are NUMBER; a single ASCII punctuation mark is PUNCT.
* Whitespace runs are CTRL_OPEN tokens carrying the run itself;
  space/tab runs and newline-like runs are kept as separate tokens.
* Any other character becomes a one-character ANY token.

Token spans tile the input, so concatenating lexemes reproduces the
source exactly.  No DOM is built; comments and script bodies are
tokenized like ordinary text.
"""

from __future__ import annotations

import re
import string
from dataclasses import dataclass
from enum import IntEnum
from typing import Iterable

from .errors import InvalidLexeme


class TokenClass(IntEnum):
    """Token classes; ids 1..12 are stable matrix column positions."""

    PAD = 0  # synthetic filler for windows that run off a page edge
    CAPITALIZED = 1
    UPPERCASE = 2
    NUMBER = 3
    LOWERCASE = 4
    PUNCT = 5
    CTRL_CLOSE = 6
    CTRL_OPEN = 7
    LIST_CLOSE = 8
    LIST_OPEN = 9
    HTML_CLOSE = 10
    HTML_OPEN = 11
    ANY = 12


N_CLASSES = 12

LIST_TAGS = frozenset({"UL", "OL", "LI", "DL", "DT", "DD", "TR", "TD", "TH"})
CTRL_TAGS = frozenset({"BR", "P"})

_TAG_RE = re.compile(r"<[^<>]*>")
_TAG_NAME_RE = re.compile(r"[A-Za-z]+")
_SPACE_RE = re.compile(r"[ \t]+")
_NEWLINE_RE = re.compile(r"[\r\n\x0b\x0c]+")
_DIGIT_RE = re.compile(r"[0-9]+")
_ASCII_PUNCT = frozenset(string.punctuation)


@dataclass(frozen=True)
class Token:
    cls: TokenClass
    lexeme: str
    span: tuple[int, int]  # half-open character offsets into the page


def _classify_tag(lexeme: str) -> TokenClass:
    inner = lexeme[1:-1].strip()
    closing = inner.startswith("/")
    if closing:
        inner = inner[1:].lstrip()
    m = _TAG_NAME_RE.match(inner)
    name = m.group().upper() if m else ""
    if name in LIST_TAGS:
        return TokenClass.LIST_CLOSE if closing else TokenClass.LIST_OPEN
    if name in CTRL_TAGS:
        return TokenClass.CTRL_CLOSE if closing else TokenClass.CTRL_OPEN
    return TokenClass.HTML_CLOSE if closing else TokenClass.HTML_OPEN


def classify(lexeme: str) -> TokenClass:
    """Classify one maximal lexical unit.

    Priority: tags, then all-uppercase, capitalized, lowercase words,
    digit runs, single punctuation marks, whitespace runs, and finally
    the ANY catch-all.
    """
    if not lexeme:
        raise InvalidLexeme("cannot classify an empty lexeme")
    if len(lexeme) >= 2 and lexeme[0] == "<" and lexeme[-1] == ">":
        return _classify_tag(lexeme)
    if lexeme.isalpha():
        if lexeme.isupper():
            return TokenClass.UPPERCASE
        if lexeme[0].isupper() and any(c.islower() for c in lexeme):
            return TokenClass.CAPITALIZED
        if lexeme[0].islower():
            return TokenClass.LOWERCASE
        return TokenClass.ANY  # uncased scripts
    if _DIGIT_RE.fullmatch(lexeme):
        return TokenClass.NUMBER
    if len(lexeme) == 1 and lexeme in _ASCII_PUNCT:
        return TokenClass.PUNCT
    if lexeme.strip() == "":
        return TokenClass.CTRL_OPEN
    return TokenClass.ANY


def _alpha_end(text: str, i: int) -> int:
    """End of the case hump starting at ``text[i]`` (a letter)."""
    n = len(text)
    ch = text[i]
    if ch.isupper():
        j = i
        while j < n and text[j].isalpha() and text[j].isupper():
            j += 1
        if j < n and text[j].isalpha() and text[j].islower():
            if j - i == 1:  # single capital heads a capitalized word
                k = j
                while k < n and text[k].isalpha() and text[k].islower():
                    k += 1
                return k
            return j - 1  # acronym run; last capital starts the next word
        return j
    if ch.islower():
        j = i
        while j < n and text[j].isalpha() and text[j].islower():
            j += 1
        return j
    j = i  # letters with no case (ideographs etc.)
    while j < n and text[j].isalpha() and not text[j].isupper() and not text[j].islower():
        j += 1
    return j


def tokenize(page: str) -> list[Token]:
    """Segment a page into classified tokens whose spans tile the input."""
    tokens: list[Token] = []
    i, n = 0, len(page)
    while i < n:
        ch = page[i]
        if ch == "<":
            m = _TAG_RE.match(page, i)
            if m:
                tokens.append(Token(_classify_tag(m.group()), m.group(), (i, m.end())))
                i = m.end()
                continue
        if ch in " \t":
            j = _SPACE_RE.match(page, i).end()
        elif ch in "\r\n\x0b\x0c":
            j = _NEWLINE_RE.match(page, i).end()
        elif ch in "0123456789":
            j = _DIGIT_RE.match(page, i).end()
        elif ch.isalpha():
            j = _alpha_end(page, i)
        else:
            j = i + 1
        lexeme = page[i:j]
        tokens.append(Token(classify(lexeme), lexeme, (i, j)))
        i = j
    return tokens


def detokenize(tokens: Iterable[Token]) -> str:
    return "".join(t.lexeme for t in tokens)
