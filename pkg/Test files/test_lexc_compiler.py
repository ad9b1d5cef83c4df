"""
Tests for .lexc parsing and compilation to .dic/.aff.
"""

import random

import pytest

from conftest import database_path
from morphology.affix_engine import parse_aff, parse_dic
from morphology.lexc_compiler import (
    CompiledLexicon, build, compile_lexc, expand_lexc, parse_lexc, render
)
from utils.data_loader import read_text
from utils.errors import LexcCycleError, LexcParseError


NOUNS = """! uncountable nouns ending in a consonant
Multichar_Symbols +N +RT +UN +SG +NOM +DAT +INS

LEXICON Root
NounStem ;

LEXICON NounStem
ඇපල් NounConsEnd ;
ඊමේල් NounConsEnd ;

LEXICON NounConsEnd
+N+RT+UN+NOM:0 # ;
+N+RT+UN+DAT:වලට # ;
+N+RT+UN+INS:වලින් # ;
+N+RT+UN+SG:ය NounCase ;

LEXICON NounCase
+NOM:0 # ;
+DAT:ට # ;
+INS:ෙන් # ;
"""


def round_trip(source):
    dic_text, aff_text = compile_lexc(source)
    return parse_dic(dic_text, parse_aff(aff_text), negative_infix="").expand_all()


def test_parse_lexicons_and_symbols():
    source = parse_lexc(NOUNS)
    assert set(source.lexicons) == {"Root", "NounStem", "NounConsEnd", "NounCase"}
    assert "+NOM" in source.multichar_symbols
    dat = source.lexicons["NounConsEnd"][1]
    assert (dat.analysis, dat.surface, dat.continuation) == ("+N+RT+UN+DAT", "වලට", "#")
    assert source.lexicons["Root"][0].is_pure_continuation


def test_zero_surface_is_empty():
    source = parse_lexc(NOUNS)
    assert source.lexicons["NounConsEnd"][0].surface == ""


def test_expand_lexc():
    words = expand_lexc(parse_lexc(NOUNS))
    assert {"ඇපල්", "ඇපල්වලට", "ඇපල්වලින්", "ඇපල්ය", "ඇපල්යට", "ඇපල්යෙන්"} <= words
    assert len(words) == 12


def test_compiled_dictionary_matches_lexicon():
    source = parse_lexc(NOUNS)
    assert round_trip(source) == expand_lexc(source)


def test_sample_lexicon_round_trips():
    source = parse_lexc(read_text(database_path("Lexicons/nouns.lexc")))
    assert round_trip(source) == expand_lexc(source)


def test_stems_sharing_a_class_share_a_flag():
    dic_text, aff_text = compile_lexc(parse_lexc(NOUNS))
    assert dic_text.splitlines() == ["2", "ඇපල්/A", "ඊමේල්/A"]
    assert "SFX A Y 5" in aff_text


def test_stem_without_bare_form_needs_affix():
    source = parse_lexc("LEXICON Root\nබල Verb ;\nLEXICON Verb\nනවා # ;\nමින් # ;\n")
    dic_text, _ = compile_lexc(source)
    assert "බල/A!" in dic_text.splitlines()
    assert round_trip(source) == {"බලනවා", "බලමින්"}


def test_compile_is_deterministic():
    source = parse_lexc(NOUNS)
    assert compile_lexc(source) == compile_lexc(source)


def test_escaped_characters_and_comments():
    source = parse_lexc("LEXICON Root\n%!අ # ; ! trailing comment\n")
    assert source.lexicons["Root"][0].surface == "!අ"


def test_undefined_continuation_is_an_error():
    with pytest.raises(LexcParseError) as info:
        parse_lexc("LEXICON Root\nබල Missing ;\n")
    assert info.value.line_number == 2


@pytest.mark.parametrize("text", [
    "බල # ;\n",                             # entry before any LEXICON
    "LEXICON Root\nබල #\n",                 # missing terminator
    "LEXICON Other\nබල # ;\n",              # no Root
    "LEXICON Root\nLEXICON Root\n",         # duplicate lexicon
])
def test_malformed_sources(text):
    with pytest.raises(LexcParseError):
        parse_lexc(text)


def test_cycle_is_reported():
    source = parse_lexc("LEXICON Root\nA ;\nLEXICON A\nක B ;\nLEXICON B\nග A ;\n")
    with pytest.raises(LexcCycleError) as info:
        build(source)
    assert info.value.cycle == ["A", "B", "A"]
    with pytest.raises(LexcCycleError):
        expand_lexc(source)


def test_many_classes_switch_to_long_flags():
    compiled = CompiledLexicon()
    endings = ["ක", "ග", "ට", "ද", "න", "ප", "බ", "ම", "ය", "ර"]
    expected = set()
    for i in range(30):
        suffix = endings[i % 10] + endings[i // 10]
        key = compiled.add_class({suffix: set()}, f"class{i}")
        stem = "ල" + endings[i % 10] * (i // 10 + 1)
        compiled.add_stem(stem, key, True)
        expected |= {stem, stem + suffix}

    dic_text, aff_text = render(compiled)
    assert "FLAG long" in aff_text.splitlines()
    words = parse_dic(dic_text, parse_aff(aff_text), negative_infix="").expand_all()
    assert words == expected


STEM_SYLLABLES = ["ක", "ග", "ට", "ද", "න", "ප", "බ", "ම", "ය", "ර", "ල", "ව", "ස"]
SUFFIX_PIECES = ["0", "ට", "වලට", "වලින්", "ය", "ක්", "ගේ", "න්", "ම", "ද"]
TAGS = ["+N", "+SG", "+DAT", "+INS"]


def random_lexicon(rng):
    """A noun-style lexicon: two stem lexicons over 2-5 chained suffix classes."""
    classes = [f"Class{k}" for k in range(rng.randint(2, 5))]
    lines = ["Multichar_Symbols " + " ".join(TAGS), "", "LEXICON Root", "Stems ;", "MoreStems ;", ""]
    for k, name in enumerate(classes):
        lines.append(f"LEXICON {name}")
        for _ in range(rng.randint(1, 4)):
            later = classes[k + 1:]
            continuation = rng.choice(later) if later and rng.random() < 0.5 else "#"
            lines.append(f"{rng.choice(TAGS)}:{rng.choice(SUFFIX_PIECES)} {continuation} ;")
        lines.append("")
    for name in ("Stems", "MoreStems"):
        lines.append(f"LEXICON {name}")
        for _ in range(rng.randint(2, 6)):
            stem = "".join(rng.choice(STEM_SYLLABLES) for _ in range(rng.randint(2, 4)))
            lines.append(f"{stem} {rng.choice(classes + ['#'])} ;")
        lines.append("")
    return "\n".join(lines)


@pytest.mark.parametrize("seed", range(8))
def test_generated_lexicons_round_trip(seed):
    source = parse_lexc(random_lexicon(random.Random(seed)))
    assert round_trip(source) == expand_lexc(source)
