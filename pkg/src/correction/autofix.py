"""
Autofix
Deterministic rewriting of evident errors. Rules are literal pattern/replacement
pairs compiled into a trie and applied in one left-to-right pass.

The pass is not a plain scan: when a replacement leaves text that a rule
matches again together with its neighbours ("ාාා" read as "ාා" + "ා"), the
rewrites around it are re-matched and merged, at most 64 times per spot.
That is what keeps apply(apply(x)) == apply(x).
"""

from dataclasses import dataclass
from enum import Enum
from itertools import accumulate
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

import regex

from text.sinhala_text import normalize
from utils.errors import RuleLoadError
from utils.logger import get_logger


_WORD_CHAR = regex.compile(r"[\p{L}\p{M}\u200c\u200d]")
_WORD = regex.compile(r"[\p{L}\p{M}\u200c\u200d]+")
_END = None  # trie key marking a complete pattern
_MAX_SETTLE = 64


class RewriteScope(Enum):
    """Where a rule may fire."""
    ANYWHERE = "Anywhere"
    WHOLE_TOKEN = "WholeToken"

    @classmethod
    def parse(cls, value: str) -> "RewriteScope":
        for scope in cls:
            if scope.value.lower() == value.strip().lower():
                return scope
        raise ValueError(f"unknown scope {value!r} (use Anywhere or WholeToken)")


@dataclass(frozen=True)
class RewriteRule:
    pattern: str
    replacement: str
    scope: RewriteScope = RewriteScope.ANYWHERE
    line_number: int = 0


@dataclass(frozen=True)
class AppliedFix:
    """One rewrite; span is in UTF-8 bytes of the original text."""
    span: Tuple[int, int]
    before: str
    after: str
    rule_index: int


def load_rules(text: str) -> List[RewriteRule]:
    """
    Parse "pattern<TAB>replacement<TAB>scope" lines ('#' comments, scope optional,
    defaulting to Anywhere). Patterns and replacements are NFC-normalized.

    Raises:
        RuleLoadError: On malformed lines, empty or duplicate patterns, no-op
            rules, or a replacement that contains any rule's pattern
    """
    rules: List[RewriteRule] = []
    seen: Dict[str, int] = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        if not raw.strip() or raw.lstrip().startswith("#"):
            continue
        fields = raw.rstrip("\r").split("\t")
        if len(fields) not in (2, 3):
            raise RuleLoadError(number, "expected pattern<TAB>replacement[<TAB>scope]")
        pattern, replacement = normalize(fields[0]), normalize(fields[1])
        try:
            scope = RewriteScope.parse(fields[2]) if len(fields) == 3 else RewriteScope.ANYWHERE
        except ValueError as e:
            raise RuleLoadError(number, str(e))

        if not pattern:
            raise RuleLoadError(number, "empty pattern")
        if pattern == replacement:
            raise RuleLoadError(number, f"pattern and replacement are both {pattern!r} after normalization")
        if pattern in replacement:
            raise RuleLoadError(number, f"replacement {replacement!r} contains its own pattern")
        if pattern in seen:
            raise RuleLoadError(number, f"pattern {pattern!r} already defined on line {seen[pattern]}")
        if scope is RewriteScope.WHOLE_TOKEN and not _WORD.fullmatch(pattern):
            raise RuleLoadError(number, "WholeToken pattern must be a single word")
        seen[pattern] = number
        rules.append(RewriteRule(pattern, replacement, scope, number))

    for rule in rules:
        for other in rules:
            if other is not rule and other.pattern in rule.replacement:
                raise RuleLoadError(
                    rule.line_number,
                    f"replacement {rule.replacement!r} feeds the rule on line {other.line_number}",
                )
    get_logger().debug(f"Loaded {len(rules)} rewrite rules")
    return rules


@dataclass
class _Fix:
    """A rewrite in progress: its range in the output and in the original text (code points)."""
    out_start: int
    out_end: int
    orig_start: int
    orig_end: int
    rule_index: int


class AutoCorrector:
    """Trie over rule patterns; apply() is pure, so one instance may be shared."""

    def __init__(self, rules: Sequence[RewriteRule]):
        self.rules: List[RewriteRule] = list(rules)
        self._trie: dict = {}
        for index, rule in enumerate(self.rules):
            node = self._trie
            for ch in rule.pattern:
                node = node.setdefault(ch, {})
            node.setdefault(_END, index)
        self.longest = max((len(r.pattern) for r in self.rules), default=0)

    def _allowed(self, index: int, at: Callable[[int], Optional[str]], start: int, end: int) -> bool:
        if self.rules[index].scope is RewriteScope.ANYWHERE:
            return True
        before, after = at(start - 1), at(end)
        return ((before is None or not _WORD_CHAR.match(before))
                and (after is None or not _WORD_CHAR.match(after)))

    def _match(self, at: Callable[[int], Optional[str]], start: int) -> Optional[Tuple[int, int]]:
        """Longest permitted match starting at start, as (end, rule index)."""
        node = self._trie
        best = None
        k = start
        while True:
            ch = at(k)
            if ch is None or ch not in node:
                return best
            node = node[ch]
            k += 1
            index = node.get(_END)
            if index is not None and self._allowed(index, at, start, k):
                best = (k, index)

    @staticmethod
    def _reader(out: List[str], text: str, j: int) -> Callable[[int], Optional[str]]:
        """Index into output-so-far followed by the unread input."""
        n = len(out)

        def at(idx: int) -> Optional[str]:
            if idx < 0:
                return None
            if idx < n:
                return out[idx]
            idx = j + idx - n
            return text[idx] if idx < len(text) else None
        return at

    def _settle(self, text: str, j: int, out: List[str], origin: List[int], fixes: List[_Fix]) -> int:
        """
        Absorb pattern matches that straddle the newest rewrite, so no pattern
        survives in the output. Returns the new input position.
        """
        for _ in range(_MAX_SETTLE):
            fix = fixes[-1]
            at = self._reader(out, text, j)
            hit = None
            for s in range(max(0, fix.out_start - self.longest + 1), fix.out_end):
                found = self._match(at, s)
                if found and found[0] > fix.out_start:
                    hit = (s, *found)
                    break
            if hit is None:
                return j

            s, e, index = hit
            absorbed = []
            while fixes and fixes[-1].out_end > s:
                absorbed.append(fixes.pop())
            first = absorbed[-1]
            lo = min(s, first.out_start)
            orig_start = origin[lo] if lo < first.out_start else first.orig_start
            consumed = max(0, e - len(out))
            leftover = "".join(out[e:]) if e < len(out) else ""
            new_text = "".join(out[lo:s]) + self.rules[index].replacement + leftover
            rule_index = index if s < first.out_start else first.rule_index

            j += consumed
            del out[lo:]
            del origin[lo:]
            out.extend(new_text)
            origin.extend([orig_start] * len(new_text))
            fixes.append(_Fix(lo, len(out), orig_start, j, rule_index))

        get_logger().warning(f"Rewrites around offset {j} did not settle after {_MAX_SETTLE} steps")
        return j

    def apply(self, text: str) -> Tuple[str, List[AppliedFix]]:
        """Rewrite text; returns the new text and the audit trail."""
        if not self.rules or not text:
            return text, []

        out: List[str] = []
        origin: List[int] = []  # original code-point offset behind each output char
        fixes: List[_Fix] = []
        j = 0
        while j < len(text):
            found = self._match(self._reader(out, text, j), len(out))
            if found is None:
                out.append(text[j])
                origin.append(j)
                j += 1
                continue
            end, index = found
            consumed = end - len(out)
            replacement = self.rules[index].replacement
            fixes.append(_Fix(len(out), len(out) + len(replacement), j, j + consumed, index))
            out.extend(replacement)
            origin.extend([j] * len(replacement))
            j = self._settle(text, j + consumed, out, origin, fixes)

        offsets = list(accumulate((len(ch.encode("utf-8")) for ch in text), initial=0))
        applied = []
        for fix in fixes:
            before = text[fix.orig_start:fix.orig_end]
            after = "".join(out[fix.out_start:fix.out_end])
            if before != after:
                applied.append(AppliedFix((offsets[fix.orig_start], offsets[fix.orig_end]),
                                          before, after, fix.rule_index))
        if applied:
            get_logger().debug(f"Applied {len(applied)} fixes")
        return "".join(out), applied


def apply(rules: Union[Sequence[RewriteRule], AutoCorrector], text: str) -> Tuple[str, List[AppliedFix]]:
    """
    Single left-to-right pass: at each position the longest matching pattern
    fires (rule order breaks ties), WholeToken rules only on a whole word.
    """
    corrector = rules if isinstance(rules, AutoCorrector) else AutoCorrector(rules)
    return corrector.apply(text)


def replay(text: str, fixes: Sequence[AppliedFix]) -> str:
    """
    Rebuild apply()'s output from the original text and its audit trail.

    Raises:
        ValueError: If the fixes overlap or do not match the text
    """
    data = text.encode("utf-8")
    pieces: List[bytes] = []
    last = 0
    for fix in fixes:
        start, end = fix.span
        if start < last:
            raise ValueError(f"fix at byte {start} overlaps the previous one")
        if data[start:end].decode("utf-8") != fix.before:
            raise ValueError(f"text at bytes {start}-{end} is not {fix.before!r}")
        pieces.append(data[last:start])
        pieces.append(fix.after.encode("utf-8"))
        last = end
    pieces.append(data[last:])
    return b"".join(pieces).decode("utf-8")


_ESCAPES = {"\\": "\\\\", "\t": "\\t", "\n": "\\n"}


def _escape(value: str) -> str:
    return "".join(_ESCAPES.get(ch, ch) for ch in value)


def _unescape(value: str) -> str:
    return regex.sub(r"\\(.)", lambda m: {"t": "\t", "n": "\n"}.get(m.group(1), m.group(1)), value)


def format_audit(fixes: Sequence[AppliedFix]) -> str:
    """Audit trail as "start<TAB>end<TAB>before<TAB>after<TAB>rule" lines."""
    return "".join(
        f"{f.span[0]}\t{f.span[1]}\t{_escape(f.before)}\t{_escape(f.after)}\t{f.rule_index}\n"
        for f in fixes
    )


def parse_audit(text: str) -> List[AppliedFix]:
    """Inverse of format_audit()."""
    fixes = []
    for number, line in enumerate(text.splitlines(), start=1):
        if not line:
            continue
        fields = line.split("\t")
        if len(fields) != 5:
            raise ValueError(f"audit line {number}: expected 5 fields, got {len(fields)}")
        fixes.append(AppliedFix((int(fields[0]), int(fields[1])), _unescape(fields[2]),
                                _unescape(fields[3]), int(fields[4])))
    return fixes
