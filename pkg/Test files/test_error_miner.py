"""
Tests for sentence alignment, error extraction and confusion statistics.
"""

import random
from collections import Counter

import pytest

from analysis.aligner import SentencePair, align, align_sentences, split_sentences
from analysis.error_miner import (
    EditClass, EditOp, ErrorRecord, confusion_stats, diff, edit_script,
    format_records, format_stats, mine, parse_stats
)
from text.sinhala_text import segment
from utils.errors import AlignmentError, DataFileError


def pair(original, corrected):
    return SentencePair(original, corrected, 0.0)


# ---------------------------------------------------------------------------
# sentence alignment
# ---------------------------------------------------------------------------

def test_split_sentences():
    assert split_sentences("අපි යනවා. ඔබ? ද\nවූ") == ["අපි යනවා.", "ඔබ?", "ද", "වූ"]
    assert split_sentences("  \n") == []


def test_one_to_one_alignment():
    pairs = align("අපි යනවා. ඔබ කරනවා.", "අපි යනවා. ඔබ කරනවා.")
    assert [p.bead for p in pairs] == [(1, 1), (1, 1)]
    assert pairs[1].original == "ඔබ කරනවා."


def test_two_sentences_merged_into_one():
    original = ["අපි ලිපිය කරනවා.", "ඔබ සඳහා ලබා දෙන ලදී.", "රජය දින සඳහා ලබා දෙන."]
    corrected = ["අපි ලිපිය කරනවා, ඔබ සඳහා ලබා දෙන ලදී.", "රජය දින සඳහා ලබා දෙන."]
    pairs = align_sentences(original, corrected)
    assert [p.bead for p in pairs] == [(2, 1), (1, 1)]
    assert pairs[0].original_indices == (0, 1)
    assert pairs[0].original == "අපි ලිපිය කරනවා. ඔබ සඳහා ලබා දෙන ලදී."


def test_every_sentence_lands_in_one_bead():
    original = ["අපි යනවා.", "ඔබ කරනවා.", "රජය ලබා දෙන ලදී.", "ගමට යනවා."]
    corrected = ["අපි යනවා. ඔබ කරනවා.", "රජය ලබා දෙන ලදී.", "ගමට", "යනවා."]
    pairs = align_sentences(original, corrected)
    assert [i for p in pairs for i in p.original_indices] == [0, 1, 2, 3]
    assert [j for p in pairs for j in p.corrected_indices] == [0, 1, 2, 3]


@pytest.mark.parametrize("original, corrected", [
    ([], ["අපි."]),
    (["අපි."], []),
    (["අ.", "ද.", "ම."], ["අ."]),
])
def test_alignment_errors(original, corrected):
    with pytest.raises(AlignmentError):
        align_sentences(original, corrected)


# ---------------------------------------------------------------------------
# edit scripts and classification
# ---------------------------------------------------------------------------

def test_edit_script_substitution():
    script = edit_script(segment("දරණ"), segment("දරන"))
    assert script == [EditOp("sub", "ණ", "න")]
    assert str(script[0]) == "ණ→න"


def test_edit_script_swap_insert_delete():
    assert edit_script(["ක", "ම"], ["ම", "ක"]) == [EditOp("swap", "කම", "මක")]
    assert [str(op) for op in edit_script(["ද", "ර"], ["ද", "ර", "න"])] == ["+න"]
    assert [str(op) for op in edit_script(["ද", "ර", "න"], ["ද", "න"])] == ["-ර"]
    assert edit_script(["ද"], ["ද"]) == []


def test_split_record():
    records = diff(pair("අපි දිගටම යනවා.", "අපි දිගට ම යනවා."))
    assert records == [ErrorRecord("දිගටම", "දිගට ම", EditClass.SPLIT)]


def test_join_record():
    records = diff(pair("කටයුතු වලට යනවා", "කටයුතුවලට යනවා"))
    assert records == [ErrorRecord("කටයුතු වලට", "කටයුතුවලට", EditClass.JOIN)]


def test_substitution_record():
    (record,) = diff(pair("දරණ ලිපිය", "දරන ලිපිය"))
    assert record.key() == ("දරණ", "දරන", EditClass.SUBSTITUTION)
    assert record.script == "ණ→න"


def test_insertion_and_deletion_records():
    assert diff(pair("අපි යනවා", "අපි ද යනවා")) == [ErrorRecord("", "ද", EditClass.INSERTION)]
    assert diff(pair("අපි ද යනවා", "අපි යනවා")) == [ErrorRecord("ද", "", EditClass.DELETION)]


def test_unrelated_words_are_not_a_substitution():
    classes = [r.edit_class for r in diff(pair("අපි යනවා", "නිලධාරී යනවා"))]
    assert classes == [EditClass.DELETION, EditClass.INSERTION]


def test_identical_sentences_have_no_records():
    assert diff(pair("අපි යනවා.", "අපි යනවා.")) == []


# ---------------------------------------------------------------------------
# mining documents
# ---------------------------------------------------------------------------

VOCABULARY = [
    "දරන", "ලිපිය", "නිලධාරී", "වන", "සිදු", "පාසල", "රජය", "දින", "ලබා", "දෙන",
    "කරනවා", "යනවා", "ගමට", "අනුව", "පරිදි", "සභා", "එක", "ඔබ", "මේ", "අපි",
]
INJECTIONS = [("න", "ණ"), ("ල", "ළ"), ("ි", "ී"), ("ස", "ෂ")]


def inject(rng, word):
    options = [(a, b) for a, b in INJECTIONS if a in word]
    if not options:
        return None
    a, b = rng.choice(options)
    return word.replace(a, b, 1)


def test_mining_recovers_injected_substitutions():
    rng = random.Random(3)
    original, corrected, expected = [], [], set()
    for _ in range(25):
        sentence = rng.sample(VOCABULARY, 5)
        wrong = list(sentence)
        position = rng.randrange(5)
        damaged = inject(rng, sentence[position])
        if damaged is not None:
            wrong[position] = damaged
            expected.add((damaged, sentence[position]))
        original.append(" ".join(wrong) + ".")
        corrected.append(" ".join(sentence) + ".")

    records = mine(" ".join(original), " ".join(corrected))
    assert {(r.wrong, r.corrected) for r in records} == expected
    assert all(r.edit_class is EditClass.SUBSTITUTION for r in records)
    assert all(len(r.detail) == 1 and r.detail[0].op == "sub" for r in records)


def test_mine_finds_split_across_documents():
    records = mine("අපි දිගටම යනවා. දරණ ලිපිය.", "අපි දිගට ම යනවා. දරන ලිපිය.")
    assert [r.edit_class for r in records] == [EditClass.SPLIT, EditClass.SUBSTITUTION]


# ---------------------------------------------------------------------------
# statistics
# ---------------------------------------------------------------------------

def substitution(wrong, corrected, *ops):
    return ErrorRecord(wrong, corrected, EditClass.SUBSTITUTION, tuple(ops))


def test_confusion_stats_ranking():
    records = [
        substitution("ළිපිය", "ලිපිය", EditOp("sub", "ළි", "ලි")),
        substitution("දරණ", "දරන", EditOp("sub", "ණ", "න")),
        substitution("වණ", "වන", EditOp("sub", "ණ", "න")),
        substitution("දරනව", "දරන", EditOp("del", "ව", "")),
        ErrorRecord("දිගටම", "දිගට ම", EditClass.SPLIT),
    ]
    stats = confusion_stats(records)
    assert list(stats.items()) == [(("ණ", "න"), 2), (("ළි", "ලි"), 1)]


def test_stats_file_round_trip():
    stats = {("ණ", "න"): 2, ("ළි", "ලි"): 1}
    assert format_stats(stats) == "ණ\tන\t2\nළි\tලි\t1\n"
    assert parse_stats(format_stats(stats)) == stats
    with pytest.raises(DataFileError) as info:
        parse_stats("ණ\tන\t2\nණ\tන\n")
    assert info.value.line_number == 2


def test_format_records():
    records = [substitution("දරණ", "දරන", EditOp("sub", "ණ", "න")),
               ErrorRecord("දිගටම", "දිගට ම", EditClass.SPLIT)]
    assert format_records(records) == "දරණ\tදරන\tSubstitution\tණ→න\nදිගටම\tදිගට ම\tSplit\t\n"


def test_hyphenated_parts_rejoin():
    records = diff(pair("කටයුතු - වලට යනවා", "කටයුතුවලට යනවා"))
    assert records == [ErrorRecord("කටයුතු වලට", "කටයුතුවලට", EditClass.JOIN)]
    assert diff(pair("කටයුතු-වලට යනවා", "කටයුතුවලට යනවා")) == records


def test_hyphen_between_words_is_not_an_error():
    assert diff(pair("අපි - යනවා", "අපි යනවා")) == []


def test_adjacent_split_and_substitution():
    records = diff(pair("අපි දිගටම දරණ යනවා", "අපි දිගට ම දරන යනවා"))
    assert [r.key() for r in records] == [
        ("දිගටම", "දිගට ම", EditClass.SPLIT),
        ("දරණ", "දරන", EditClass.SUBSTITUTION),
    ]
    assert records[1].script == "ණ→න"


def test_adjacent_join_and_insertion():
    records = diff(pair("කටයුතු වලට යනවා", "කටයුතුවලට ද යනවා"))
    assert [r.key() for r in records] == [
        ("කටයුතු වලට", "කටයුතුවලට", EditClass.JOIN),
        ("", "ද", EditClass.INSERTION),
    ]


def test_two_adjacent_substitutions():
    records = diff(pair("දරණ ළිපිය යනවා", "දරන ලිපිය යනවා"))
    assert [r.key() for r in records] == [
        ("දරණ", "දරන", EditClass.SUBSTITUTION),
        ("ළිපිය", "ලිපිය", EditClass.SUBSTITUTION),
    ]


CONFUSABLE = {"න": "ණ", "ල": "ළ", "ස": "ෂ", "ද": "ධ"}


def plant_edit(rng, kind, sentence, i, wrong):
    """
    Damage sentence[i] (and for a split also sentence[i + 1]) into wrong.
    Returns (words consumed, expected record key, confused pair) or None when
    the word cannot take this kind of edit.
    """
    word = sentence[i]
    if kind is EditClass.SUBSTITUTION:
        graphemes = segment(word)
        spots = [k for k, g in enumerate(graphemes) if g in CONFUSABLE]
        preferred = [k for k in spots if graphemes[k] == "න"]
        if not spots:
            return None
        k = rng.choice(preferred if preferred and rng.random() < 0.7 else spots)
        damaged = "".join(graphemes[:k] + [CONFUSABLE[graphemes[k]]] + graphemes[k + 1:])
        if damaged in VOCABULARY:
            return None
        wrong.append(damaged)
        return 1, (damaged, word, kind), (CONFUSABLE[graphemes[k]], graphemes[k])
    if kind is EditClass.SPLIT:
        joined = word + sentence[i + 1]
        if joined in VOCABULARY:
            return None
        wrong.append(joined)
        return 2, (joined, f"{word} {sentence[i + 1]}", kind), None
    if kind is EditClass.JOIN:
        graphemes = segment(word)
        if len(graphemes) < 2:
            return None
        k = rng.randrange(1, len(graphemes))
        left, right = "".join(graphemes[:k]), "".join(graphemes[k:])
        if left in sentence or right in sentence:
            return None
        wrong.extend([left, right])
        return 1, (f"{left} {right}", word, kind), None
    if kind is EditClass.INSERTION:
        return 1, ("", word, kind), None
    extra = rng.choice([w for w in VOCABULARY if w not in sentence])
    wrong.extend([extra, word])
    return 1, (extra, "", kind), None


def test_mining_recovers_every_kind_of_planted_edit():
    rng = random.Random(11)
    original, corrected = [], []
    expected = Counter()
    planted_pairs = Counter()
    for _ in range(70):
        sentence = rng.sample(VOCABULARY, 9)
        wrong = []
        i = 0
        while i < len(sentence):
            if i not in (0, 3, 6):
                wrong.append(sentence[i])
                i += 1
                continue
            kinds = list(EditClass)
            rng.shuffle(kinds)
            for kind in kinds:
                planted = plant_edit(rng, kind, sentence, i, wrong)
                if planted is not None:
                    break
            consumed, key, confused = planted
            expected[key] += 1
            if confused:
                planted_pairs[confused] += 1
            i += consumed
        original.append(" ".join(wrong) + ".")
        corrected.append(" ".join(sentence) + ".")

    assert sum(expected.values()) >= 200
    per_class = Counter(kind for _, _, kind in expected.elements())
    assert set(per_class) == set(EditClass)
    assert min(per_class.values()) >= 10

    records = mine(" ".join(original), " ".join(corrected))
    assert Counter(r.key() for r in records) == expected

    stats = confusion_stats(records)
    assert stats == dict(planted_pairs)
    most_planted = sorted(planted_pairs, key=lambda p: (-planted_pairs[p], p))[:2]
    assert list(stats)[:2] == most_planted
    assert most_planted[0] == ("ණ", "න")
