"""
Suggester
Generates and ranks corrections for words the affix engine rejects.

Candidate sources, cheapest first: confusion-set swaps, REP-table rewrites,
word splits, grapheme edits at distance 1 and, only when nothing cheap was
found, distance 2.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterable, List, Mapping, Optional, Set, Tuple

from correction.confusion import ConfusionModel, ConfusionSet, edit_cost
from morphology.affix_engine import Dictionary
from text.sinhala_text import Token, join, normalize, segment_lenient
from utils.constants import (
    BOUND_SUFFIXES, DEFAULT_MAX_SUGGESTIONS, EDIT2_ADMIT_THRESHOLD,
    REPLACEMENT_COST, SPLIT_COST
)
from utils.errors import ExpansionLimitError
from utils.logger import get_logger


class SuggestionSource(Enum):
    """Where a candidate came from."""
    CONFUSION = "confusion"
    REPLACEMENT_TABLE = "replacement"
    SPLIT = "split"
    JOIN = "join"
    EDIT1 = "edit1"
    EDIT2 = "edit2"


# Lower wins when two sources give the same cost for one candidate
_SOURCE_PRIORITY = {source: rank for rank, source in enumerate(SuggestionSource)}


@dataclass(frozen=True)
class Suggestion:
    """A ranked correction candidate."""
    candidate: str
    cost: float
    source: SuggestionSource

    @property
    def parts(self) -> List[str]:
        return self.candidate.split(" ")


class DeleteIndex:
    """
    Symmetric-delete index over grapheme sequences: every dictionary word is
    filed under each form reachable by deleting up to max_distance graphemes.
    Words within Damerau-Levenshtein distance max_distance of a query share a key.
    """

    def __init__(self, words: Iterable[str], max_distance: int = 2):
        self.max_distance = max_distance
        self.deletes: Dict[Tuple[str, ...], Set[str]] = {}
        self.size = 0
        for word in words:
            self.size += 1
            for key in self._delete_forms(tuple(segment_lenient(word))):
                self.deletes.setdefault(key, set()).add(word)

    def _delete_forms(self, graphemes: Tuple[str, ...]) -> Set[Tuple[str, ...]]:
        forms = {graphemes}
        frontier = {graphemes}
        for _ in range(self.max_distance):
            nxt = set()
            for form in frontier:
                for i in range(len(form)):
                    nxt.add(form[:i] + form[i + 1:])
            nxt -= forms
            forms |= nxt
            frontier = nxt
        return forms

    def lookup(self, graphemes: Tuple[str, ...]) -> Set[str]:
        found: Set[str] = set()
        for key in self._delete_forms(graphemes):
            found |= self.deletes.get(key, set())
        return found


class Suggester:
    """
    Ranks corrections against one dictionary. Read-only after construction
    apart from lazily built caches.
    """

    def __init__(self, dictionary: Dictionary, confusions: Iterable[ConfusionSet] = (),
                 frequencies: Optional[Mapping[str, int]] = None, index_limit: int = 200_000):
        """
        Args:
            dictionary: Loaded dictionary
            confusions: Confusion sets
            frequencies: Optional word counts for tie-breaking
            index_limit: Largest expansion the delete index is built for;
                bigger dictionaries fall back to generated edits
        """
        self.logger = get_logger()
        self.dictionary = dictionary
        self.model = ConfusionModel(confusions)
        self.frequencies: Mapping[str, int] = frequencies or {}
        self.index_limit = index_limit
        self._index: Optional[DeleteIndex] = None
        self._index_built = False
        self._inventory: Optional[List[str]] = None
        self._recognized: Dict[str, bool] = {}

    # -- helpers -------------------------------------------------------------

    def recognize(self, word: str) -> bool:
        known = self._recognized.get(word)
        if known is None:
            known = self.dictionary.recognize(word)
            self._recognized[word] = known
        return known

    def _delete_index(self) -> Optional[DeleteIndex]:
        if not self._index_built:
            self._index_built = True
            try:
                words = self.dictionary.expand_all(self.index_limit)
                self._index = DeleteIndex(words)
                self.logger.debug(f"Delete index built over {self._index.size} words")
            except ExpansionLimitError:
                self.logger.info(
                    f"Dictionary expands past {self.index_limit} words; using generated edits only"
                )
        return self._index

    def grapheme_inventory(self) -> List[str]:
        """Graphemes seen in stems, affixes and the TRY string."""
        if self._inventory is None:
            seen: Set[str] = set()
            for stem in self.dictionary.entries:
                seen.update(segment_lenient(stem))
            for rules in self.dictionary.table.rules.values():
                for rule in rules:
                    seen.update(segment_lenient(rule.append))
            seen.update(ch for ch in self.dictionary.table.alphabet if not ch.isspace())
            self._inventory = sorted(seen)
        return self._inventory

    def _edit1_forms(self, graphemes: List[str]) -> Set[str]:
        """Every string one grapheme edit away (generated, not yet checked)."""
        forms: Set[str] = set()
        n = len(graphemes)
        inventory = self.grapheme_inventory()
        for i in range(n):
            forms.add(join(graphemes[:i] + graphemes[i + 1:]))
            if i + 1 < n:
                swapped = graphemes[:i] + [graphemes[i + 1], graphemes[i]] + graphemes[i + 2:]
                forms.add(join(swapped))
            for g in inventory:
                if g != graphemes[i]:
                    forms.add(join(graphemes[:i] + [g] + graphemes[i + 1:]))
        for i in range(n + 1):
            for g in inventory:
                forms.add(join(graphemes[:i] + [g] + graphemes[i:]))
        return forms

    def _edit2_pool(self, graphemes: List[str]) -> Set[str]:
        """
        Recognized words two generated edits away. Second-level forms are only
        checked, not cached, so the recognize cache stays small.
        """
        first = self._edit1_forms(graphemes)
        pool = {f for f in first if self.recognize(f)}
        seen = set(first)
        for form in first:
            for second in self._edit1_forms(segment_lenient(form)):
                if second not in seen:
                    seen.add(second)
                    if self.dictionary.recognize(second):
                        pool.add(second)
        self.logger.debug(f"{join(graphemes)}: {len(seen)} generated forms at distance 2")
        return pool

    # -- candidate sources ---------------------------------------------------

    def _confusion_candidates(self, graphemes: List[str]) -> Iterable[Tuple[str, float]]:
        for i, grapheme in enumerate(graphemes):
            for variant, weight, _ in self.model.variants(grapheme):
                candidate = normalize(join(graphemes[:i] + [variant] + graphemes[i + 1:]))
                if self.recognize(candidate):
                    yield candidate, weight

    def _replacement_candidates(self, word: str) -> Iterable[Tuple[str, float]]:
        for wrong, right in self.dictionary.table.replacements:
            start = word.find(wrong)
            while start != -1:
                candidate = normalize(word[:start] + right + word[start + len(wrong):])
                parts = candidate.split()
                if parts and candidate != word and all(self.recognize(p) for p in parts):
                    yield " ".join(parts), REPLACEMENT_COST
                start = word.find(wrong, start + 1)

    def _split_candidates(self, graphemes: List[str]) -> Iterable[Tuple[str, float]]:
        for i in range(1, len(graphemes)):
            left, right = join(graphemes[:i]), join(graphemes[i:])
            if self.recognize(left) and self.recognize(right):
                yield f"{left} {right}", SPLIT_COST

    def _edit_candidates(self, graphemes: List[str], max_distance: int) -> Iterable[Tuple[str, float, int]]:
        """(candidate, weighted cost, plain edit count) for recognized words within max_distance."""
        plain = ConfusionModel()
        index = self._delete_index()
        if index is not None:
            pool = index.lookup(tuple(graphemes))
        elif max_distance == 1:
            pool = {f for f in self._edit1_forms(graphemes) if self.recognize(f)}
        else:
            pool = self._edit2_pool(graphemes)
        for candidate in sorted(pool):
            cand_graphemes = segment_lenient(candidate)
            steps = edit_cost(plain, graphemes, cand_graphemes)
            if 0 < steps <= max_distance:
                yield candidate, edit_cost(self.model, graphemes, cand_graphemes), int(steps)

    # -- public API ----------------------------------------------------------

    def generate(self, word: str, k: int = DEFAULT_MAX_SUGGESTIONS) -> List[Suggestion]:
        """
        Up to k ranked suggestions for a word; empty when the word is recognized.
        Ordering: cost, then corpus frequency (descending), then the candidate string.
        """
        if k < 1:
            raise ValueError("k must be at least 1")
        word = normalize(word)
        if not word or self.recognize(word):
            return []

        graphemes = segment_lenient(word)
        best: Dict[str, Tuple[float, SuggestionSource]] = {}

        def offer(candidate: str, cost: float, source: SuggestionSource):
            if candidate == word:
                return
            current = best.get(candidate)
            if (current is None or cost < current[0]
                    or (cost == current[0] and _SOURCE_PRIORITY[source] < _SOURCE_PRIORITY[current[1]])):
                best[candidate] = (cost, source)

        for candidate, cost in self._confusion_candidates(graphemes):
            offer(candidate, cost, SuggestionSource.CONFUSION)
        for candidate, cost in self._replacement_candidates(word):
            offer(candidate, cost, SuggestionSource.REPLACEMENT_TABLE)
        for candidate, cost in self._split_candidates(graphemes):
            offer(candidate, cost, SuggestionSource.SPLIT)
        for candidate, cost, _ in self._edit_candidates(graphemes, 1):
            offer(candidate, cost, SuggestionSource.EDIT1)

        if not best or min(cost for cost, _ in best.values()) >= EDIT2_ADMIT_THRESHOLD:
            for candidate, cost, steps in self._edit_candidates(graphemes, 2):
                if steps == 2:
                    offer(candidate, cost, SuggestionSource.EDIT2)

        ranked = sorted(
            (Suggestion(c, cost, source) for c, (cost, source) in best.items()),
            key=lambda s: (s.cost, -self._frequency(s.candidate), s.candidate),
        )
        self.logger.debug(f"{word}: {len(ranked)} candidates, returning {min(k, len(ranked))}")
        return ranked[:k]

    def _frequency(self, candidate: str) -> int:
        if " " in candidate:
            return min(self.frequencies.get(p, 0) for p in candidate.split(" "))
        return self.frequencies.get(candidate, 0)

    def suggest_joins(self, left: Token, right: Token) -> Optional[Suggestion]:
        """
        Suggest writing two adjacent Word tokens as one word, when the joined form
        is recognized and a part is not, or the second part is a bound suffix (වල, වලට, වලින්).
        """
        if not (left.is_word and right.is_word):
            return None
        first = left.surface.strip("-")
        second = right.surface.strip("-")
        if not first or not second:
            return None
        joined = normalize(first + second)
        if not self.recognize(joined):
            return None
        if self.recognize(first) and self.recognize(second) and second not in BOUND_SUFFIXES:
            return None
        return Suggestion(joined, SPLIT_COST, SuggestionSource.JOIN)


def generate(dictionary: Dictionary, confusions: Iterable[ConfusionSet], word: str,
             k: int = DEFAULT_MAX_SUGGESTIONS) -> List[Suggestion]:
    """Module-level form of Suggester.generate for one-off calls."""
    return Suggester(dictionary, confusions).generate(word, k)
