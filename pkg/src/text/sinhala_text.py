"""
Sinhala Text
Normalization, grapheme segmentation and tokenization of Sinhala running text.
"""

import unicodedata
from dataclasses import dataclass
from enum import Enum, auto
from typing import Iterable, List, Tuple, Union

import regex

from utils.constants import SINHALA_END, SINHALA_START, VIRAMA, ZWJ
from utils.data_loader import decode_utf8
from utils.errors import SegmentationError


_CLUSTER_RE = regex.compile(r"\X", regex.DOTALL)

_TOKEN_RE = regex.compile(
    r"(?P<word>[\p{L}\p{M}\u200c\u200d]+)"
    r"|(?P<number>\p{Nd}+)"
    r"|(?P<space>\s+)"
    r"|(?P<punct>[\p{P}\p{S}])"
    r"|(?P<other>.)",
    regex.DOTALL,
)


class TokenKind(Enum):
    """Kinds of tokens in running text."""
    WORD = auto()
    NUMBER = auto()
    PUNCTUATION = auto()
    OTHER = auto()


class Grapheme(str):
    """
    One orthographic unit: a base letter plus its vowel signs, virama and
    ZWJ-joined conjunct parts. Compares equal to the plain string.
    """

    @property
    def codepoints(self) -> Tuple[int, ...]:
        """Unicode scalar values of the cluster."""
        return tuple(ord(ch) for ch in self)


@dataclass(frozen=True)
class Token:
    """A slice of source text. span is in UTF-8 bytes, char_span in code points."""
    surface: str
    span: Tuple[int, int]
    kind: TokenKind
    char_span: Tuple[int, int]

    @property
    def is_word(self) -> bool:
        return self.kind is TokenKind.WORD


def is_sinhala(char: str) -> bool:
    """True for code points in the Sinhala block."""
    return SINHALA_START <= ord(char) <= SINHALA_END


def is_extender(char: str) -> bool:
    """Marks that can never begin a grapheme."""
    return char == ZWJ or unicodedata.category(char) in ("Mn", "Mc", "Me")


def normalize(text: Union[str, bytes]) -> str:
    """
    Canonical composed normalization (NFC). ZWJ/ZWNJ survive untouched.

    Args:
        text: Text, or raw UTF-8 bytes

    Returns:
        Normalized text

    Raises:
        TextDecodeError: If bytes are not valid UTF-8
    """
    if isinstance(text, (bytes, bytearray)):
        text = decode_utf8(bytes(text))
    if unicodedata.is_normalized("NFC", text):
        return text
    return unicodedata.normalize("NFC", text)


def _merge_conjuncts(clusters: Iterable[str]) -> List[str]:
    """Join a cluster ending in virama+ZWJ with the consonant cluster after it."""
    merged: List[str] = []
    for cluster in clusters:
        if merged and merged[-1].endswith(VIRAMA + ZWJ):
            merged[-1] += cluster
        else:
            merged.append(cluster)
    return merged


def segment(word: str) -> List[Grapheme]:
    """
    Split a normalized word into graphemes.

    Raises:
        SegmentationError: If the word starts with a combining mark, ZWJ or virama
    """
    if word and is_extender(word[0]):
        raise SegmentationError(0, word[0])
    return [Grapheme(c) for c in _merge_conjuncts(_CLUSTER_RE.findall(word))]


def segment_lenient(word: str) -> List[Grapheme]:
    """
    Like segment(), but an orphan leading mark becomes its own grapheme.
    Used on misspelled input, where broken encodings are expected.
    """
    if word and is_extender(word[0]):
        start = 1
        while start < len(word) and is_extender(word[start]):
            start += 1
        return [Grapheme(word[:start])] + segment(word[start:])
    return segment(word)


def join(graphemes: Iterable[str]) -> str:
    """Inverse of segment()."""
    return "".join(graphemes)


def tokenize(text: str) -> List[Token]:
    """
    Tokenize normalized text. Whitespace is skipped; everything else is covered
    by exactly one token. Hyphens and other punctuation are single-character tokens.
    """
    tokens: List[Token] = []
    byte_pos = 0
    for match in _TOKEN_RE.finditer(text):
        piece = match.group(0)
        size = len(piece.encode("utf-8"))
        group = match.lastgroup
        if group != "space":
            kind = {
                "word": TokenKind.WORD,
                "number": TokenKind.NUMBER,
                "punct": TokenKind.PUNCTUATION,
            }.get(group, TokenKind.OTHER)
            tokens.append(Token(piece, (byte_pos, byte_pos + size), kind, match.span()))
        byte_pos += size
    return tokens


def words(text: str) -> List[str]:
    """Surfaces of the Word tokens of text."""
    return [t.surface for t in tokenize(text) if t.is_word]


def line_col(text: str, char_offset: int) -> Tuple[int, int]:
    """1-based line and column of a code-point offset."""
    line = text.count("\n", 0, char_offset) + 1
    line_start = text.rfind("\n", 0, char_offset) + 1
    return line, char_offset - line_start + 1
