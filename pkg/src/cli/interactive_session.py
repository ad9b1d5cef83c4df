"""
Interactive Session
Terminal review loop: walk the findings of a check one by one and let the
user accept a suggestion, skip, apply one choice to every identical word, or
type a replacement.
"""

import sys
from typing import Callable, Dict, List, Optional

from cli.checker import Finding, SpellChecker
from text.sinhala_text import normalize
from utils.constants import RECOVERY_SUFFIX
from utils.errors import SessionInterruptedError
from utils.logger import get_logger


HELP = "[n] accept suggestion n   s skip   a [n] accept for all identical   e edit   q quit"


def _stderr_write(message: str) -> None:
    sys.stderr.write(message + "\n")
    sys.stderr.flush()


def apply_replacements(text: str, replacements: Dict[int, str], findings: List[Finding]) -> str:
    """Rewrite text with replacements keyed by finding index (char spans, applied right to left)."""
    result = text
    for index in sorted(replacements, key=lambda i: findings[i].char_span[0], reverse=True):
        start, end = findings[index].char_span
        result = result[:start] + replacements[index] + result[end:]
    return result


class InteractiveSession:
    """One review pass over one document."""

    def __init__(self, checker: SpellChecker, read_line: Callable[[str], str] = input,
                 write: Callable[[str], None] = _stderr_write, recovery_path: str = "sinspell" + RECOVERY_SUFFIX):
        """
        Args:
            checker: Loaded checker
            read_line: Prompt function; raises EOFError when the terminal goes away
            write: Where prompts and findings are shown
            recovery_path: File that receives partial output if the session breaks off
        """
        self.logger = get_logger()
        self.checker = checker
        self.read_line = read_line
        self.write = write
        self.recovery_path = recovery_path

    def _show(self, number: int, total: int, finding: Finding):
        self.write(f"[{number}/{total}] {finding.line}:{finding.column}  {finding.surface}")
        if not finding.suggestions:
            self.write("    (no suggestions)")
        for rank, suggestion in enumerate(finding.suggestions, start=1):
            self.write(f"    {rank}) {suggestion.candidate}")
        self.write(f"    {HELP}")

    def _pick(self, finding: Finding, answer: str) -> Optional[str]:
        """Suggestion text for a 1-based choice, or None if out of range."""
        try:
            rank = int(answer)
        except ValueError:
            return None
        if 1 <= rank <= len(finding.suggestions):
            return finding.suggestions[rank - 1].candidate
        return None

    def _ask(self, finding: Finding):
        """
        Prompt until a valid answer. Returns (replacement or None, apply_to_identical, quit).
        """
        while True:
            answer = self.read_line("> ").strip()
            if answer in ("", "s"):
                return None, False, False
            if answer == "q":
                return None, False, True
            if answer == "e":
                typed = normalize(self.read_line("replacement> ").strip())
                if typed:
                    return typed, False, False
                self.write("empty replacement ignored")
                continue
            if answer == "a" or answer.startswith("a "):
                choice = self._pick(finding, answer[1:].strip() or "1")
                if choice is not None:
                    return choice, True, False
            else:
                choice = self._pick(finding, answer)
                if choice is not None:
                    return choice, False, False
            self.write(f"unrecognized answer {answer!r}. {HELP}")

    def run(self, text: str) -> str:
        """
        Review every finding and return the corrected text.

        Raises:
            SessionInterruptedError: On end of input or Ctrl+C; the decisions
                made so far are written to the recovery file first
        """
        text = normalize(text)
        findings = self.checker.check(text)
        replacements: Dict[int, str] = {}
        remembered: Dict[str, str] = {}

        try:
            for index, finding in enumerate(findings):
                if finding.surface in remembered:
                    replacements[index] = remembered[finding.surface]
                    continue
                self._show(index + 1, len(findings), finding)
                replacement, everywhere, stop = self._ask(finding)
                if stop:
                    self.logger.info(f"Review stopped at finding {index + 1} of {len(findings)}")
                    break
                if replacement is not None:
                    replacements[index] = replacement
                    if everywhere:
                        remembered[finding.surface] = replacement
        except (EOFError, KeyboardInterrupt):
            partial = apply_replacements(text, replacements, findings)
            with open(self.recovery_path, "w", encoding="utf-8") as f:
                f.write(partial)
            self.logger.warning(f"Input ended mid-session, partial output in {self.recovery_path}")
            raise SessionInterruptedError(self.recovery_path)

        self.logger.info(f"Accepted {len(replacements)} of {len(findings)} findings")
        return apply_replacements(text, replacements, findings)
