"""
Text Package
Unicode foundation for Sinhala: normalization, graphemes, tokens.
"""

from text.sinhala_text import (
    Grapheme, Token, TokenKind, normalize, segment, segment_lenient, join, tokenize, words, line_col
)

__all__ = [
    'Grapheme',
    'Token',
    'TokenKind',
    'normalize',
    'segment',
    'segment_lenient',
    'join',
    'tokenize',
    'words',
    'line_col'
]
