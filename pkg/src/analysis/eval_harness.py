"""
Evaluation Harness
Detection rates over correct/incorrect word lists and suggestion quality
(first-suggestion accuracy and mean reciprocal rank) over (misspelled, gold) cases.
"""

from dataclasses import dataclass, fields
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from correction.confusion import ConfusionSet
from correction.suggester import Suggester
from morphology.affix_engine import Dictionary
from text.sinhala_text import normalize
from utils.constants import DEFAULT_MAX_SUGGESTIONS
from utils.errors import DataFileError
from utils.logger import get_logger


@dataclass
class EvalReport:
    tp: int = 0
    fn: int = 0
    tn: int = 0
    fp: int = 0
    tp_rate: Optional[float] = None
    tn_rate: Optional[float] = None
    first_accuracy: Optional[float] = None
    mrr: Optional[float] = None
    cases: int = 0
    skipped: int = 0


def rate(hits: int, total: int) -> Optional[float]:
    """Percentage truncated to one decimal (the way the reference tables print); None when total is 0."""
    if total <= 0:
        return None
    return (1000 * hits // total) / 10


def _unique(words: Iterable[str]) -> List[str]:
    return list(dict.fromkeys(w for w in (normalize(x.strip()) for x in words) if w))


def load_word_list(text: str) -> List[str]:
    """One word per line; '#' comments and blanks skipped."""
    return _unique(line for line in text.splitlines() if not line.lstrip().startswith("#"))


def load_cases(text: str) -> List[Tuple[str, str]]:
    """
    "misspelled<TAB>gold" lines.

    Raises:
        DataFileError: On a line without exactly two fields
    """
    cases = []
    for number, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise DataFileError(number, "expected misspelled<TAB>gold")
        cases.append((normalize(parts[0].strip()), normalize(parts[1].strip())))
    return cases


def eval_detection(dictionary: Dictionary, correct_words: Sequence[str],
                   incorrect_words: Sequence[str], report: Optional[EvalReport] = None) -> EvalReport:
    """Count recognized correct words (tp) and rejected incorrect words (tn)."""
    report = report or EvalReport()
    correct, incorrect = _unique(correct_words), _unique(incorrect_words)
    report.tp = sum(1 for w in correct if dictionary.recognize(w))
    report.fn = len(correct) - report.tp
    report.tn = sum(1 for w in incorrect if not dictionary.recognize(w))
    report.fp = len(incorrect) - report.tn
    report.tp_rate = rate(report.tp, report.tp + report.fn)
    report.tn_rate = rate(report.tn, report.tn + report.fp)
    get_logger().info(f"Detection: tp={report.tp} fn={report.fn} tn={report.tn} fp={report.fp}")
    return report


def reciprocal_ranks(ranks: Sequence[Optional[int]]) -> np.ndarray:
    """1/rank per case, 0 where the gold word was not suggested."""
    return np.array([1.0 / r if r else 0.0 for r in ranks], dtype=float)


def summarize_ranks(ranks: Sequence[Optional[int]]) -> Tuple[Optional[float], Optional[float]]:
    """(first-suggestion accuracy %, MRR) for 1-based ranks; (None, None) when there are no cases."""
    if not ranks:
        return None, None
    first = rate(sum(1 for r in ranks if r == 1), len(ranks))
    return first, float(np.mean(reciprocal_ranks(ranks)))


def eval_suggestions(dictionary: Dictionary, confusions: Iterable[ConfusionSet],
                     cases: Sequence[Tuple[str, str]], k: int = DEFAULT_MAX_SUGGESTIONS,
                     suggester: Optional[Suggester] = None,
                     report: Optional[EvalReport] = None) -> EvalReport:
    """
    Rank the gold word in each case's suggestions. Cases whose misspelling is a
    recognized word are skipped with a warning.
    """
    logger = get_logger()
    report = report or EvalReport()
    suggester = suggester or Suggester(dictionary, confusions)
    ranks: List[Optional[int]] = []
    for misspelled, gold in cases:
        if dictionary.recognize(misspelled):
            logger.warning(f"Skipping case {misspelled!r}: it is a recognized word")
            report.skipped += 1
            continue
        if not dictionary.recognize(gold):
            logger.warning(f"Gold word {gold!r} is not recognized; it can never be suggested")
        candidates = [s.candidate for s in suggester.generate(misspelled, k)]
        ranks.append(candidates.index(gold) + 1 if gold in candidates else None)
        logger.debug(f"{misspelled} -> {gold}: rank {ranks[-1]}")

    report.cases = len(ranks)
    report.first_accuracy, report.mrr = summarize_ranks(ranks)
    return report


def _fmt(value: Optional[float], precision: int) -> str:
    return "-" if value is None else f"{value:.{precision}f}"


def suggestion_row(name: str, report: EvalReport) -> str:
    """Name, first-suggestion accuracy and MRR as one table row."""
    return f"{name}  {_fmt(report.first_accuracy, 1)}  {_fmt(report.mrr, 3)}"


def render_table(report: EvalReport, name: str = "SinSpell") -> str:
    """Aligned text tables for detection and suggestion results."""
    lines = [
        "Correct words",
        f"{'':<10}{'TP':>6}{'FN':>6}{'TP %':>8}",
        f"{name:<10}{report.tp:>6}{report.fn:>6}{_fmt(report.tp_rate, 1):>8}",
        "",
        "Incorrect words",
        f"{'':<10}{'TN':>6}{'FP':>6}{'TN %':>8}",
        f"{name:<10}{report.tn:>6}{report.fp:>6}{_fmt(report.tn_rate, 1):>8}",
        "",
        "Suggestions",
        f"{'':<10}1st %  MRR",
        suggestion_row(f"{name:<8}", report),
    ]
    return "\n".join(lines) + "\n"


def render_tsv(report: EvalReport) -> str:
    """One "field<TAB>value" line per report field; absent values are empty."""
    out = []
    for f in fields(report):
        value = getattr(report, f.name)
        out.append(f"{f.name}\t{'' if value is None else value}\n")
    return "".join(out)
