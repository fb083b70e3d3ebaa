from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fuzzwrap import InvalidLexeme, TokenClass, classify, detokenize, tokenize
from fixtures import CC_PAGES, QUERY_PAGE
from oracles import reference_segments


@pytest.mark.parametrize(
    "lexeme,expected",
    [
        ("FSM", TokenClass.UPPERCASE),
        ("Professor", TokenClass.CAPITALIZED),
        ("123", TokenClass.NUMBER),
        ("and", TokenClass.LOWERCASE),
        ("<I>", TokenClass.HTML_OPEN),
        ("</I>", TokenClass.HTML_CLOSE),
        (",", TokenClass.PUNCT),
        ("§", TokenClass.ANY),
        ("<UL>", TokenClass.LIST_OPEN),
        ("</ul>", TokenClass.LIST_CLOSE),
        ("<BR>", TokenClass.CTRL_OPEN),
        ("</p>", TokenClass.CTRL_CLOSE),
        ("< / I >", TokenClass.HTML_CLOSE),
        ("<li class=x>", TokenClass.LIST_OPEN),
        (" ", TokenClass.CTRL_OPEN),
        ("\n", TokenClass.CTRL_OPEN),
        ("  ", TokenClass.CTRL_OPEN),
        ("<", TokenClass.PUNCT),
        (">", TokenClass.PUNCT),
        ("A", TokenClass.UPPERCASE),
        ("中", TokenClass.ANY),
    ],
)
def test_classify(lexeme, expected):
    assert classify(lexeme) is expected


def test_classify_empty_lexeme_rejected():
    with pytest.raises(InvalidLexeme):
        classify("")


def test_class_ids_are_stable_column_positions():
    order = [
        TokenClass.CAPITALIZED,
        TokenClass.UPPERCASE,
        TokenClass.NUMBER,
        TokenClass.LOWERCASE,
        TokenClass.PUNCT,
        TokenClass.CTRL_CLOSE,
        TokenClass.CTRL_OPEN,
        TokenClass.LIST_CLOSE,
        TokenClass.LIST_OPEN,
        TokenClass.HTML_CLOSE,
        TokenClass.HTML_OPEN,
        TokenClass.ANY,
    ]
    assert [int(c) for c in order] == list(range(1, 13))
    assert int(TokenClass.PAD) == 0


def test_tokenize_empty():
    assert tokenize("") == []


def test_tokenize_listing_fragment():
    # segmentation confirmed against the character-walk reference
    text = "<UL><LI>Congo 1"
    assert [t.lexeme for t in tokenize(text)] == reference_segments(text)
    assert [(t.cls, t.lexeme) for t in tokenize(text)] == [
        (TokenClass.LIST_OPEN, "<UL>"),
        (TokenClass.LIST_OPEN, "<LI>"),
        (TokenClass.CAPITALIZED, "Congo"),
        (TokenClass.CTRL_OPEN, " "),
        (TokenClass.NUMBER, "1"),
    ]


def test_tokenize_splits_letter_digit_boundary():
    assert [(t.cls, t.lexeme) for t in tokenize("a1")] == [
        (TokenClass.LOWERCASE, "a"),
        (TokenClass.NUMBER, "1"),
    ]


@pytest.mark.parametrize(
    "text,lexemes",
    [
        ("FSMCongo", ["FSM", "Congo"]),
        ("iPhone4", ["i", "Phone", "4"]),
        ("CountryCodes", ["Country", "Codes"]),
        ("ABCdef", ["AB", "Cdef"]),
        ("McDonald", ["Mc", "Donald"]),
    ],
)
def test_case_hump_splits(text, lexemes):
    assert [t.lexeme for t in tokenize(text)] == lexemes
    assert [t.lexeme for t in tokenize(text)] == reference_segments(text)


def test_unclosed_tag_is_punctuation():
    toks = tokenize("<a<b>")
    assert [(t.cls, t.lexeme) for t in toks] == [
        (TokenClass.PUNCT, "<"),
        (TokenClass.LOWERCASE, "a"),
        (TokenClass.HTML_OPEN, "<b>"),
    ]


def test_spans_tile_the_input():
    text = CC_PAGES["cc1"]
    toks = tokenize(text)
    assert toks[0].span[0] == 0
    assert toks[-1].span[1] == len(text)
    for a, b in zip(toks, toks[1:]):
        assert a.span[1] == b.span[0]


def test_classification_idempotent_on_fixture_pages():
    for text in (*CC_PAGES.values(), QUERY_PAGE):
        for t in tokenize(text):
            assert classify(t.lexeme) is t.cls


def test_determinism():
    text = CC_PAGES["cc2"]
    assert tokenize(text) == tokenize(text)


def _random_fragment(rng: random.Random) -> str:
    pieces = []
    for _ in range(rng.randint(0, 30)):
        kind = rng.randrange(8)
        if kind == 0:
            pieces.append(rng.choice(["<UL>", "<LI>", "</I>", "<BR>", "<p>", "<A HREF=x>"]))
        elif kind == 1:
            pieces.append("".join(rng.choice("ABCDEFgyzoi") for _ in range(rng.randint(1, 6))))
        elif kind == 2:
            pieces.append(str(rng.randint(0, 99999)))
        elif kind == 3:
            pieces.append(rng.choice([" ", "  ", "\n", "\t", "\r\n"]))
        elif kind == 4:
            pieces.append(rng.choice(",.;:!<>()[]&\"'"))
        elif kind == 5:
            pieces.append(rng.choice(["§", "ø", "字", "é", "…", "​"]))
        elif kind == 6:
            pieces.append(rng.choice(["<", ">", "< I >", "<!-- hey -->"]))
        else:
            pieces.append(rng.choice(["Congo", "iPhone4", "ABCdef", "and", "FSM"]))
    return "".join(pieces)


def test_round_trip_on_seeded_random_fragments():
    rng = random.Random(902210)
    for _ in range(1000):
        text = _random_fragment(rng)
        toks = tokenize(text)
        assert detokenize(toks) == text
        assert [t.lexeme for t in toks] == reference_segments(text)


@settings(max_examples=300, deadline=None)
@given(st.text(max_size=60))
def test_round_trip_property(text):
    toks = tokenize(text)
    assert detokenize(toks) == text
    for t in toks:
        assert classify(t.lexeme) is t.cls
