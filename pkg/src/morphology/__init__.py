"""
Morphology Package
Affix-rule recognition and lexicon compilation.
"""

from morphology.affix_engine import (
    AffixKind, AffixRule, AffixTable, Analysis, Dictionary, StemEntry,
    parse_aff, parse_dic, load_dictionary, recognize, expand_all
)
from morphology.lexc_compiler import (
    CompiledLexicon, LexcEntry, LexcSource, build, compile_lexc, expand_lexc, parse_lexc, render
)
from morphology.suffix_table import (
    SuffixTable, build_suffix_table, compile_suffix_table, merge_dictionaries, parse_suffix_table
)

__all__ = [
    'AffixKind',
    'AffixRule',
    'AffixTable',
    'Analysis',
    'Dictionary',
    'StemEntry',
    'parse_aff',
    'parse_dic',
    'load_dictionary',
    'recognize',
    'expand_all',
    'CompiledLexicon',
    'LexcEntry',
    'LexcSource',
    'build',
    'compile_lexc',
    'expand_lexc',
    'parse_lexc',
    'render',
    'SuffixTable',
    'build_suffix_table',
    'compile_suffix_table',
    'merge_dictionaries',
    'parse_suffix_table'
]
