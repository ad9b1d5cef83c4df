"""
Tests for detection rates, suggestion ranking metrics and report rendering.
"""

import random

import pytest

from analysis.eval_harness import (
    EvalReport, eval_detection, eval_suggestions, load_cases, load_word_list, rate,
    reciprocal_ranks, render_table, render_tsv, suggestion_row, summarize_ranks
)
from conftest import database_path
from utils.data_loader import read_text
from utils.errors import DataFileError


@pytest.mark.parametrize("hits, total, expected", [
    (1897, 1917, 98.9),
    (1912, 1917, 99.7),
    (1853, 1917, 96.6),
    (420, 457, 91.9),
    (449, 457, 98.2),
    (1, 3, 33.3),
    (3, 3, 100.0),
])
def test_rate_truncates_to_one_decimal(hits, total, expected):
    assert rate(hits, total) == expected


def test_rate_without_cases():
    assert rate(0, 0) is None


def test_rank_summary():
    first, mrr = summarize_ranks([1, 2, None])
    assert first == 33.3
    assert mrr == pytest.approx(0.5)
    assert list(reciprocal_ranks([1, 4, None])) == [1.0, 0.25, 0.0]
    assert summarize_ranks([]) == (None, None)


def test_first_accuracy_never_exceeds_mrr():
    rng = random.Random(7)
    for _ in range(300):
        ranks = [rng.choice([None, 1, 1, 2, 3, 5, 10]) for _ in range(rng.randint(1, 40))]
        first, mrr = summarize_ranks(ranks)
        assert first / 100 <= mrr + 1e-9
    assert summarize_ranks([1] * 12) == (100.0, 1.0)


def test_load_word_list_dedupes_and_skips_comments():
    assert load_word_list("# header\nදරන\n\nදරන\n දිගට \n") == ["දරන", "දිගට"]


def test_load_cases():
    assert load_cases("# misspelled\tgold\nදරණ\tදරන\n") == [("දරණ", "දරන")]
    with pytest.raises(DataFileError) as info:
        load_cases("දරණ\tදරන\nදරණ\n")
    assert info.value.line_number == 2


def test_detection_on_sample_lists(sample_dictionary):
    correct = load_word_list(read_text(database_path("Evaluation/correct_words.txt")))
    incorrect = load_word_list(read_text(database_path("Evaluation/incorrect_words.txt")))
    report = eval_detection(sample_dictionary, correct, incorrect)
    assert (report.tp, report.fn) == (len(correct), 0)
    assert (report.tn, report.fp) == (len(incorrect), 0)
    assert report.tp_rate == report.tn_rate == 100.0


def test_detection_counts_misses(sample_dictionary):
    report = eval_detection(sample_dictionary, ["දරන", "දරණ"], ["දිගටම", "දිගට", "දිගට"])
    assert (report.tp, report.fn, report.tn, report.fp) == (1, 1, 1, 1)
    assert report.tp_rate == 50.0


def test_suggestion_metrics(sample_dictionary, sample_confusions):
    cases = [("දරණ", "දරන"), ("දිගටම", "දිගට"), ("ආරක", "ලිපිය"), ("දරන", "දරන")]
    report = eval_suggestions(sample_dictionary, sample_confusions, cases)
    assert report.cases == 3
    assert report.skipped == 1
    assert report.first_accuracy == 33.3
    assert report.mrr == pytest.approx(0.5)


def test_sample_suggestion_cases(sample_dictionary, sample_confusions):
    cases = load_cases(read_text(database_path("Evaluation/suggestion_cases.tsv")))
    report = eval_suggestions(sample_dictionary, sample_confusions, cases)
    assert report.cases == len(cases)
    assert report.first_accuracy == 100.0


def test_suggestion_row():
    assert suggestion_row("SinSpell", EvalReport(first_accuracy=62.3, mrr=0.729)) == "SinSpell  62.3  0.729"
    assert suggestion_row("SinSpell", EvalReport()) == "SinSpell  -  -"


def test_render_table_and_tsv():
    report = EvalReport(tp=1897, fn=20, tn=420, fp=37, tp_rate=98.9, tn_rate=91.9)
    table = render_table(report, name="Sample")
    assert "Sample      1897    20    98.9" in table
    assert "Sample       420    37    91.9" in table
    tsv = render_tsv(report)
    assert "tp_rate\t98.9\n" in tsv
    assert "mrr\t\n" in tsv
