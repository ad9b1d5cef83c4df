"""
Sentence Aligner
Pairs the sentences of an original document with those of its corrected
version. Length-based dynamic program over 1:1, 1:2 and 2:1 beads with a
bonus for shared tokens.
"""

import math
from dataclasses import dataclass
from typing import Dict, List, Set, Tuple

import regex

from text.sinhala_text import segment_lenient, words
from utils.constants import ANCHOR_MIN_GRAPHEMES, SENTENCE_TERMINATORS
from utils.errors import AlignmentError
from utils.logger import get_logger


# Bead priors and length-ratio variance from the classic length-based aligner
BEAD_PRIORS: Dict[Tuple[int, int], float] = {(1, 1): 0.89, (2, 1): 0.089, (1, 2): 0.089}
LENGTH_RATIO = 1.0
LENGTH_VARIANCE = 6.8

_TERMINATORS = "".join(regex.escape(t) for t in SENTENCE_TERMINATORS if t != "\n")
_SENTENCE_RE = regex.compile(rf"[^{_TERMINATORS}\n]+[{_TERMINATORS}]*|[{_TERMINATORS}]+")


@dataclass(frozen=True)
class SentencePair:
    """One bead: the sentences on each side joined by a space."""
    original: str
    corrected: str
    alignment_score: float
    original_indices: Tuple[int, ...] = ()
    corrected_indices: Tuple[int, ...] = ()

    @property
    def bead(self) -> Tuple[int, int]:
        return len(self.original_indices), len(self.corrected_indices)


def split_sentences(text: str) -> List[str]:
    """Split after . ? ! । and at newlines; terminators stay with their sentence."""
    sentences = []
    for match in _SENTENCE_RE.finditer(text):
        sentence = match.group(0).strip()
        if sentence:
            sentences.append(sentence)
    return sentences


def _anchors(sentence: str) -> Set[str]:
    return {w for w in words(sentence) if len(segment_lenient(w)) >= ANCHOR_MIN_GRAPHEMES}


def _length_cost(source_len: int, target_len: int) -> float:
    """-log probability that target_len is a translation-length of source_len."""
    if source_len == 0 and target_len == 0:
        return 0.0
    mean = (source_len + target_len / LENGTH_RATIO) / 2
    delta = (target_len - source_len * LENGTH_RATIO) / math.sqrt(mean * LENGTH_VARIANCE)
    probability = math.erfc(abs(delta) / math.sqrt(2))
    return -math.log(max(probability, 1e-300))


def bead_score(original: List[str], corrected: List[str]) -> float:
    """Higher is better: log prior minus length cost plus one per shared anchor token."""
    bead = (len(original), len(corrected))
    source = " ".join(original)
    target = " ".join(corrected)
    shared = set().union(*(_anchors(s) for s in original)) & set().union(*(_anchors(s) for s in corrected))
    return math.log(BEAD_PRIORS[bead]) - _length_cost(len(source), len(target)) + len(shared)


def align_sentences(original: List[str], corrected: List[str]) -> List[SentencePair]:
    """
    Align two sentence lists. Every sentence lands in exactly one bead.

    Raises:
        AlignmentError: If either list is empty or the lengths cannot be
            covered by 1:1, 1:2 and 2:1 beads
    """
    n, m = len(original), len(corrected)
    if n == 0 or m == 0:
        raise AlignmentError("cannot align an empty document")
    if n > 2 * m or m > 2 * n:
        raise AlignmentError(f"{n} and {m} sentences cannot be paired with 1:1, 1:2 and 2:1 beads")

    best = [[-math.inf] * (m + 1) for _ in range(n + 1)]
    back: List[List[Tuple[int, int]]] = [[(0, 0)] * (m + 1) for _ in range(n + 1)]
    best[0][0] = 0.0
    for i in range(n + 1):
        for j in range(m + 1):
            if best[i][j] == -math.inf:
                continue
            for di, dj in BEAD_PRIORS:
                ni, nj = i + di, j + dj
                if ni > n or nj > m:
                    continue
                score = best[i][j] + bead_score(original[i:ni], corrected[j:nj])
                if score > best[ni][nj]:
                    best[ni][nj] = score
                    back[ni][nj] = (di, dj)

    if best[n][m] == -math.inf:
        raise AlignmentError("no monotone alignment found")

    pairs: List[SentencePair] = []
    i, j = n, m
    while i or j:
        di, dj = back[i][j]
        src, tgt = original[i - di:i], corrected[j - dj:j]
        pairs.append(SentencePair(" ".join(src), " ".join(tgt), bead_score(src, tgt),
                                  tuple(range(i - di, i)), tuple(range(j - dj, j))))
        i, j = i - di, j - dj
    pairs.reverse()
    get_logger().debug(f"Aligned {n} x {m} sentences into {len(pairs)} beads")
    return pairs


def align(original_doc: str, corrected_doc: str) -> List[SentencePair]:
    """Split both documents into sentences and align them."""
    return align_sentences(split_sentences(original_doc), split_sentences(corrected_doc))
