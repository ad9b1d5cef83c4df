"""Analysis: sentence alignment, error mining and evaluation."""

from analysis.aligner import SentencePair, align, align_sentences, split_sentences
from analysis.error_miner import (
    EditClass, EditOp, ErrorRecord, confusion_stats, diff, edit_script, format_records, format_stats, mine,
    parse_stats
)
from analysis.eval_harness import (
    EvalReport, eval_detection, eval_suggestions, load_cases, load_word_list, rate, render_table, render_tsv,
    suggestion_row, summarize_ranks
)

__all__ = [
    "SentencePair", "align", "align_sentences", "split_sentences", "EditClass", "EditOp", "ErrorRecord",
    "confusion_stats", "diff", "edit_script", "format_records", "format_stats", "mine", "parse_stats",
    "EvalReport", "eval_detection", "eval_suggestions", "load_cases", "load_word_list", "rate",
    "render_table", "render_tsv", "suggestion_row", "summarize_ranks",
]
