"""
Tests for normalization, grapheme segmentation and tokenization.
"""

import unicodedata

import pytest

from text.sinhala_text import (
    Grapheme, TokenKind, join, line_col, normalize, segment, segment_lenient, tokenize, words
)
from utils.errors import SegmentationError, TextDecodeError

ZWJ = "\u200d"
CONJUNCT = "ශ්" + ZWJ + "ය"  # virama + ZWJ conjunct


def test_normalize_composes_split_vowel_sign():
    decomposed = "ක" + "ෙ" + "ා"  # ෙ + ා
    assert normalize(decomposed) == "ක" + "ො"  # ො
    assert unicodedata.is_normalized("NFC", normalize(decomposed))


def test_normalize_keeps_joiners():
    word = "අව" + CONJUNCT
    assert normalize(word) == word


def test_normalize_accepts_bytes():
    assert normalize("දරන".encode("utf-8")) == "දරන"


def test_normalize_reports_bad_byte_offset():
    data = "දර".encode("utf-8") + b"\xff"
    with pytest.raises(TextDecodeError) as info:
        normalize(data)
    assert info.value.offset == len("දර".encode("utf-8"))


def test_normalize_is_idempotent():
    text = "කො අම්මා"
    assert normalize(normalize(text)) == normalize(text)


@pytest.mark.parametrize("word, expected", [
    ("දරන", ["ද", "ර", "න"]),
    ("අම්මා", ["අ", "ම්", "මා"]),
    ("කී", ["කී"]),
    ("අව" + CONJUNCT, ["අ", "ව", CONJUNCT]),
    ("", []),
])
def test_segment(word, expected):
    assert segment(word) == expected


def test_segment_returns_graphemes_that_join_back():
    word = "සාමාන්" + ZWJ + "ය"
    graphemes = segment(word)
    assert all(isinstance(g, Grapheme) for g in graphemes)
    assert join(graphemes) == word


def test_grapheme_codepoints():
    assert segment("කී")[0].codepoints == (0x0D9A, 0x0DD3)


def test_segment_rejects_leading_mark():
    with pytest.raises(SegmentationError) as info:
        segment("ාක")
    assert info.value.position == 0


def test_segment_lenient_keeps_orphan_mark():
    assert segment_lenient("ාක") == ["ා", "ක"]


def test_tokenize_spans_and_kinds():
    text = "අපි 12 දිගට-ම."
    tokens = tokenize(text)
    assert [t.surface for t in tokens] == ["අපි", "12", "දිගට", "-", "ම", "."]
    assert [t.kind for t in tokens] == [
        TokenKind.WORD, TokenKind.NUMBER, TokenKind.WORD,
        TokenKind.PUNCTUATION, TokenKind.WORD, TokenKind.PUNCTUATION,
    ]
    data = text.encode("utf-8")
    for token in tokens:
        start, end = token.span
        assert data[start:end].decode("utf-8") == token.surface
        assert text[token.char_span[0]:token.char_span[1]] == token.surface


def test_tokenize_keeps_conjunct_inside_word():
    word = "අව" + CONJUNCT
    assert [t.surface for t in tokenize(f"{word} ද")] == [word, "ද"]


def test_words_and_line_col():
    text = "අපි\nදරන ලිපිය"
    assert words(text) == ["අපි", "දරන", "ලිපිය"]
    offset = text.index("ලිපිය")
    assert line_col(text, offset) == (2, 5)
    assert line_col(text, 0) == (1, 1)
