"""
Confusion Model
Sinhala confusion sets (vowel length, retroflex/dental, sibilants, aspirates)
and the weighted grapheme edit distance built on them.
"""

from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from text.sinhala_text import normalize
from utils.constants import EDIT_COST, MIN_CONFUSION_WEIGHT
from utils.errors import DataFileError
from utils.logger import get_logger


@dataclass(frozen=True)
class ConfusionSet:
    """Mutually confusable graphemes (or grapheme parts) and their substitution cost."""
    members: Tuple[str, ...]
    weight: float

    def __post_init__(self):
        if len(set(self.members)) < 2:
            raise ValueError(f"confusion set needs two distinct members: {self.members}")
        if not 0 <= self.weight < EDIT_COST:
            raise ValueError(f"confusion weight {self.weight} must be in [0, {EDIT_COST})")


def load_confusions(text: str) -> List[ConfusionSet]:
    """
    Parse "weight<TAB>member<TAB>member..." lines; '#' starts a comment.

    Raises:
        DataFileError: On a bad weight or a set with fewer than two members
    """
    sets: List[ConfusionSet] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = [f.strip() for f in raw.split("\t") if f.strip()]
        try:
            weight = float(fields[0])
        except ValueError:
            raise DataFileError(number, f"weight {fields[0]!r} is not a number")
        members = tuple(dict.fromkeys(normalize(m) for m in fields[1:]))
        try:
            sets.append(ConfusionSet(members, weight))
        except ValueError as e:
            raise DataFileError(number, str(e))
    get_logger().debug(f"Loaded {len(sets)} confusion sets")
    return sets


def load_frequencies(text: str) -> Dict[str, int]:
    """
    Parse "word<TAB>count" lines into a frequency map.

    Raises:
        DataFileError: On a non-integer count
    """
    counts: Dict[str, int] = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 2:
            raise DataFileError(number, "expected word<TAB>count")
        try:
            count = int(fields[1])
        except ValueError:
            raise DataFileError(number, f"count {fields[1]!r} is not an integer")
        word = normalize(fields[0].strip())
        counts[word] = counts.get(word, 0) + count
    return counts


class ConfusionModel:
    """
    Lookup structure over confusion sets. A grapheme pair is confusable when
    swapping one set member inside the first grapheme for another member of
    the same set yields the second (ණ/න, කි/කී, ණා/නා ...).
    """

    def __init__(self, confusions: Iterable[ConfusionSet] = ()):
        self.sets: List[ConfusionSet] = list(confusions)
        self._cost_cache: Dict[Tuple[str, str], Optional[float]] = {}
        self._variant_cache: Dict[str, List[Tuple[str, float, int]]] = {}

    def variants(self, grapheme: str) -> List[Tuple[str, float, int]]:
        """(replacement grapheme, weight, set index) for every single in-set swap."""
        cached = self._variant_cache.get(grapheme)
        if cached is not None:
            return cached
        best: Dict[str, Tuple[float, int]] = {}
        for index, confusion in enumerate(self.sets):
            for member in confusion.members:
                start = grapheme.find(member)
                while start != -1:
                    for other in confusion.members:
                        if other == member:
                            continue
                        variant = grapheme[:start] + other + grapheme[start + len(member):]
                        if variant != grapheme and (variant not in best or confusion.weight < best[variant][0]):
                            best[variant] = (confusion.weight, index)
                    start = grapheme.find(member, start + 1)
        result = sorted(((v, w, i) for v, (w, i) in best.items()), key=lambda t: (t[1], t[0]))
        self._variant_cache[grapheme] = result
        return result

    def confusion_cost(self, a: str, b: str) -> Optional[float]:
        """Weight of the cheapest set linking a and b, or None."""
        key = (a, b) if a <= b else (b, a)
        if key in self._cost_cache:
            return self._cost_cache[key]
        costs = [w for v, w, _ in self.variants(a) if v == b]
        costs += [w for v, w, _ in self.variants(b) if v == a]
        cost = min(costs) if costs else None
        self._cost_cache[key] = cost
        return cost

    def set_index(self, a: str, b: str) -> Optional[int]:
        """Index of the set that turns a into b (cheapest first)."""
        for variant, _, index in self.variants(a):
            if variant == b:
                return index
        return None

    def substitution_cost(self, a: str, b: str) -> float:
        if a == b:
            return 0.0
        cost = self.confusion_cost(a, b)
        return EDIT_COST if cost is None else cost


def edit_cost(confusions, a: Sequence[str], b: Sequence[str]) -> float:
    """
    Weighted Damerau-Levenshtein distance over grapheme sequences (unrestricted
    transpositions, so it is a metric). Insert, delete and transpose cost 1.0;
    substitution costs 1.0 unless a confusion set links the pair.

    Args:
        confusions: ConfusionModel, list of ConfusionSet, or None
        a, b: Grapheme sequences from segment()
    """
    model = confusions if isinstance(confusions, ConfusionModel) else ConfusionModel(confusions or ())
    la, lb = len(a), len(b)
    if la == 0 or lb == 0:
        return EDIT_COST * (la + lb)

    big = EDIT_COST * (la + lb) + 1
    # Row/column 0 of d stand for index -1 of the textbook formulation
    d = [[big] * (lb + 2) for _ in range(la + 2)]
    for i in range(la + 1):
        d[i + 1][1] = i * EDIT_COST
    for j in range(lb + 1):
        d[1][j + 1] = j * EDIT_COST

    last_row: Dict[str, int] = {}
    for i in range(1, la + 1):
        last_match_col = 0
        for j in range(1, lb + 1):
            k = last_row.get(b[j - 1], 0)
            l = last_match_col
            if a[i - 1] == b[j - 1]:
                cost = 0.0
                last_match_col = j
            else:
                cost = model.substitution_cost(a[i - 1], b[j - 1])
            d[i + 1][j + 1] = min(
                d[i][j] + cost,
                d[i + 1][j] + EDIT_COST,
                d[i][j + 1] + EDIT_COST,
                d[k][l] + (i - k - 1) * EDIT_COST + EDIT_COST + (j - l - 1) * EDIT_COST,
            )
        last_row[a[i - 1]] = i
    return d[la + 1][lb + 1]


def calibrate(confusions: Sequence[ConfusionSet], stats: Mapping[Tuple[str, str], int],
              floor: float = MIN_CONFUSION_WEIGHT) -> List[ConfusionSet]:
    """
    Lower the weight of sets whose swaps were mined often:
    weight = base * (1 - share), clamped to [floor, base].
    """
    model = ConfusionModel(confusions)
    per_set = [0] * len(model.sets)
    total = 0
    for (wrong, right), count in stats.items():
        total += count
        index = model.set_index(wrong, right)
        if index is not None:
            per_set[index] += count

    if not total:
        return list(confusions)

    calibrated = []
    for confusion, count in zip(model.sets, per_set):
        share = count / total
        weight = min(confusion.weight, max(floor, confusion.weight * (1 - share)))
        calibrated.append(ConfusionSet(confusion.members, round(weight, 4)))
    get_logger().info(f"Calibrated {len(calibrated)} confusion sets from {total} mined substitutions")
    return calibrated


def write_confusions(confusions: Iterable[ConfusionSet]) -> str:
    """Serialize sets in the file format load_confusions() reads."""
    return "".join(f"{c.weight}\t" + "\t".join(c.members) + "\n" for c in confusions)
