"""
Error Miner
Extracts (wrong, corrected) pairs from aligned original/corrected sentences,
classifies them and counts grapheme confusions for suggester calibration.
"""

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from analysis.aligner import SentencePair, align
from text.sinhala_text import segment_lenient, tokenize
from utils.constants import HYPHENS, UNRELATED_MIN_DISTANCE, UNRELATED_RATIO
from utils.errors import DataFileError
from utils.logger import get_logger


class EditClass(Enum):
    INSERTION = "Insertion"
    DELETION = "Deletion"
    SUBSTITUTION = "Substitution"
    SPLIT = "Split"
    JOIN = "Join"


@dataclass(frozen=True)
class EditOp:
    """One grapheme-level step: 'sub', 'ins', 'del' or 'swap'."""
    op: str
    source: str
    target: str

    def __str__(self) -> str:
        if self.op == "ins":
            return f"+{self.target}"
        if self.op == "del":
            return f"-{self.source}"
        return f"{self.source}→{self.target}"


@dataclass(frozen=True)
class ErrorRecord:
    wrong: str
    corrected: str
    edit_class: EditClass
    detail: Optional[Tuple[EditOp, ...]] = None

    @property
    def script(self) -> str:
        return ",".join(str(op) for op in self.detail) if self.detail else ""

    def key(self) -> Tuple[str, str, EditClass]:
        return self.wrong, self.corrected, self.edit_class


def edit_script(a: Sequence[str], b: Sequence[str]) -> List[EditOp]:
    """Minimum edit script between grapheme sequences (adjacent swaps count once)."""
    la, lb = len(a), len(b)
    d = [[0] * (lb + 1) for _ in range(la + 1)]
    for i in range(la + 1):
        d[i][0] = i
    for j in range(lb + 1):
        d[0][j] = j
    for i in range(1, la + 1):
        for j in range(1, lb + 1):
            cost = 0 if a[i - 1] == b[j - 1] else 1
            d[i][j] = min(d[i - 1][j] + 1, d[i][j - 1] + 1, d[i - 1][j - 1] + cost)
            if i > 1 and j > 1 and a[i - 1] == b[j - 2] and a[i - 2] == b[j - 1]:
                d[i][j] = min(d[i][j], d[i - 2][j - 2] + 1)

    ops: List[EditOp] = []
    i, j = la, lb
    while i or j:
        if i and j and a[i - 1] == b[j - 1] and d[i][j] == d[i - 1][j - 1]:
            i, j = i - 1, j - 1
        elif i and j and d[i][j] == d[i - 1][j - 1] + 1:
            ops.append(EditOp("sub", a[i - 1], b[j - 1]))
            i, j = i - 1, j - 1
        elif (i > 1 and j > 1 and a[i - 1] == b[j - 2] and a[i - 2] == b[j - 1]
              and d[i][j] == d[i - 2][j - 2] + 1):
            ops.append(EditOp("swap", a[i - 2] + a[i - 1], b[j - 2] + b[j - 1]))
            i, j = i - 2, j - 2
        elif i and d[i][j] == d[i - 1][j] + 1:
            ops.append(EditOp("del", a[i - 1], ""))
            i -= 1
        else:
            ops.append(EditOp("ins", "", b[j - 1]))
            j -= 1
    ops.reverse()
    return ops


def _lcs_pairs(a: Sequence[str], b: Sequence[str]) -> List[Tuple[int, int]]:
    """Index pairs of one longest common subsequence."""
    la, lb = len(a), len(b)
    table = [[0] * (lb + 1) for _ in range(la + 1)]
    for i in range(la - 1, -1, -1):
        for j in range(lb - 1, -1, -1):
            if a[i] == b[j]:
                table[i][j] = table[i + 1][j + 1] + 1
            else:
                table[i][j] = max(table[i + 1][j], table[i][j + 1])
    pairs = []
    i = j = 0
    while i < la and j < lb:
        if a[i] == b[j]:
            pairs.append((i, j))
            i, j = i + 1, j + 1
        elif table[i + 1][j] >= table[i][j + 1]:
            i += 1
        else:
            j += 1
    return pairs


def _substitution(wrong: str, corrected: str) -> Optional[ErrorRecord]:
    """A Substitution record, or None when the two words are too far apart to be one."""
    a, b = segment_lenient(wrong), segment_lenient(corrected)
    script = edit_script(a, b)
    if len(script) > max(UNRELATED_MIN_DISTANCE, UNRELATED_RATIO * max(len(a), len(b))):
        return None
    return ErrorRecord(wrong, corrected, EditClass.SUBSTITUTION, tuple(script))


def _region_steps(wrong: List[str], corrected: List[str]) -> List[Tuple[int, int, Optional[ErrorRecord]]]:
    """
    Cheapest cover of a non-matching region by 1:2 splits, 2:1 joins, 1:1
    substitutions and single-token deletions/insertions. Each step costs one
    unit; a substitution costs a tenth more per extra grapheme edit, so a
    close pair wins over a loose one.
    Returns (wrong count, corrected count, record) steps in text order; the
    record is None for a bare deletion or insertion.
    """
    m, n = len(wrong), len(corrected)
    inf = float("inf")
    cost = [[inf] * (n + 1) for _ in range(m + 1)]
    step: List[List[Optional[Tuple[int, int, Optional[ErrorRecord]]]]] = [[None] * (n + 1) for _ in range(m + 1)]
    cost[0][0] = 0
    for i in range(m + 1):
        for j in range(n + 1):
            if cost[i][j] == inf:
                continue
            moves: List[Tuple[int, int, float, Optional[ErrorRecord]]] = []
            if i < m and j + 1 < n and wrong[i] == corrected[j] + corrected[j + 1]:
                moves.append((1, 2, 1.0, ErrorRecord(wrong[i], f"{corrected[j]} {corrected[j + 1]}", EditClass.SPLIT)))
            if i + 1 < m and j < n and wrong[i] + wrong[i + 1] == corrected[j]:
                moves.append((2, 1, 1.0, ErrorRecord(f"{wrong[i]} {wrong[i + 1]}", corrected[j], EditClass.JOIN)))
            if i < m and j < n:
                record = _substitution(wrong[i], corrected[j])
                if record is not None:
                    moves.append((1, 1, 0.9 + 0.1 * len(record.detail), record))
            if i < m:
                moves.append((1, 0, 1.0, None))
            if j < n:
                moves.append((0, 1, 1.0, None))
            for di, dj, price, record in moves:
                if cost[i][j] + price < cost[i + di][j + dj] - 1e-9:
                    cost[i + di][j + dj] = cost[i][j] + price
                    step[i + di][j + dj] = (di, dj, record)

    steps = []
    i, j = m, n
    while i or j:
        di, dj, record = step[i][j]
        steps.append((di, dj, record))
        i, j = i - di, j - dj
    steps.reverse()
    return steps


def _classify(wrong: List[str], corrected: List[str]) -> List[ErrorRecord]:
    """Records for one region; neighbouring bare deletions and insertions merge into one pair."""
    records: List[ErrorRecord] = []
    deleted: List[str] = []
    inserted: List[str] = []

    def flush():
        if deleted:
            records.append(ErrorRecord(" ".join(deleted), "", EditClass.DELETION))
        if inserted:
            records.append(ErrorRecord("", " ".join(inserted), EditClass.INSERTION))
        deleted.clear()
        inserted.clear()

    i = j = 0
    for di, dj, record in _region_steps(wrong, corrected):
        if record is None:
            deleted.extend(wrong[i:i + di])
            inserted.extend(corrected[j:j + dj])
        else:
            flush()
            records.append(record)
        i, j = i + di, j + dj
    flush()
    return records


def _surfaces(text: str) -> List[str]:
    """Token surfaces, with a hyphen between two words dropped so the words can rejoin."""
    tokens = tokenize(text)
    kept = []
    for k, token in enumerate(tokens):
        if (token.surface in HYPHENS and 0 < k < len(tokens) - 1
                and tokens[k - 1].is_word and tokens[k + 1].is_word):
            continue
        kept.append(token.surface)
    return kept


def diff(pair: SentencePair) -> List[ErrorRecord]:
    """Token-level LCS diff of one aligned pair; each non-matching region becomes records."""
    a = _surfaces(pair.original)
    b = _surfaces(pair.corrected)
    records: List[ErrorRecord] = []
    i = j = 0
    for mi, mj in _lcs_pairs(a, b) + [(len(a), len(b))]:
        if i < mi or j < mj:
            records.extend(_classify(a[i:mi], b[j:mj]))
        i, j = mi + 1, mj + 1
    return records


def mine(original_doc: str, corrected_doc: str) -> List[ErrorRecord]:
    """Align two documents and diff every bead."""
    records: List[ErrorRecord] = []
    for pair in align(original_doc, corrected_doc):
        records.extend(diff(pair))
    get_logger().info(f"Mined {len(records)} error records")
    return records


def confusion_stats(records: Iterable[ErrorRecord]) -> Dict[Tuple[str, str], int]:
    """Substituted grapheme pairs across Substitution records, most frequent first."""
    counts: Counter = Counter()
    for record in records:
        if record.edit_class is EditClass.SUBSTITUTION and record.detail:
            counts.update((op.source, op.target) for op in record.detail if op.op == "sub")
    return dict(sorted(counts.items(), key=lambda item: (-item[1], item[0])))


def format_records(records: Iterable[ErrorRecord]) -> str:
    """"wrong<TAB>corrected<TAB>class<TAB>script" lines."""
    return "".join(f"{r.wrong}\t{r.corrected}\t{r.edit_class.value}\t{r.script}\n" for r in records)


def format_stats(stats: Dict[Tuple[str, str], int]) -> str:
    return "".join(f"{wrong}\t{right}\t{count}\n" for (wrong, right), count in stats.items())


def parse_stats(text: str) -> Dict[Tuple[str, str], int]:
    """
    Read format_stats() output back.

    Raises:
        DataFileError: On malformed lines
    """
    stats: Dict[Tuple[str, str], int] = {}
    for number, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        fields = line.split("\t")
        if len(fields) != 3:
            raise DataFileError(number, "expected wrong<TAB>corrected<TAB>count")
        try:
            stats[(fields[0], fields[1])] = stats.get((fields[0], fields[1]), 0) + int(fields[2])
        except ValueError:
            raise DataFileError(number, f"count {fields[2]!r} is not an integer")
    return stats
