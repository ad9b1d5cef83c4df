"""
Spell Checker
Loads every data file named by a Config and runs detection, suggestion and
autofix over whole texts.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from correction.autofix import AppliedFix, AutoCorrector, load_rules
from correction.confusion import load_confusions, load_frequencies
from correction.suggester import Suggester, Suggestion
from morphology.affix_engine import Dictionary, load_dictionary
from text.sinhala_text import Token, is_sinhala, line_col, normalize, tokenize
from utils.config_manager import Config
from utils.data_loader import read_text
from utils.logger import get_logger


@dataclass(frozen=True)
class Finding:
    """A flagged word, or a pair of words that should be written as one."""
    tokens: Tuple[Token, ...]
    line: int
    column: int
    suggestions: List[Suggestion] = field(default_factory=list)

    @property
    def surface(self) -> str:
        return " ".join(t.surface for t in self.tokens)

    @property
    def is_join(self) -> bool:
        return len(self.tokens) > 1

    @property
    def char_span(self) -> Tuple[int, int]:
        return self.tokens[0].char_span[0], self.tokens[-1].char_span[1]

    def format(self) -> str:
        return f"{self.line}:{self.column}\t{self.surface}\t{','.join(s.candidate for s in self.suggestions)}"


class SpellChecker:
    """Everything a command needs, loaded once from a Config."""

    def __init__(self, config: Config, dictionary: Optional[Dictionary] = None):
        """
        Args:
            config: Validated configuration
            dictionary: Preloaded dictionary (skips reading config.dictionary_path)

        Raises:
            SinSpellError: If any referenced file fails to load
        """
        self.logger = get_logger()
        self.config = config
        self.dictionary = dictionary or load_dictionary(config.dictionary_path, config.affix_path)
        self.confusions = load_confusions(read_text(config.confusion_path))
        self.frequencies: Dict[str, int] = (
            load_frequencies(read_text(config.frequency_path)) if config.frequency_path else {}
        )
        self.rules = load_rules(read_text(config.rules_path))
        self.suggester = Suggester(self.dictionary, self.confusions, self.frequencies)
        self.corrector = AutoCorrector(self.rules)
        self.logger.info(
            f"Checker ready: {len(self.dictionary)} stems, {len(self.confusions)} confusion sets, "
            f"{len(self.rules)} rewrite rules"
        )

    def suggest(self, word: str) -> List[Suggestion]:
        return self.suggester.generate(word, self.config.max_suggestions)

    def _next_word(self, tokens: List[Token], i: int) -> Optional[int]:
        """Index of the Word token after tokens[i], allowing one hyphen in between."""
        j = i + 1
        if j < len(tokens) and tokens[j].surface == "-":
            j += 1
        if j < len(tokens) and tokens[j].is_word:
            return j
        return None

    def check(self, text: str) -> List[Finding]:
        """Flag unrecognized Sinhala words and split words, in text order."""
        text = normalize(text)
        tokens = tokenize(text)
        findings: List[Finding] = []
        i = 0
        while i < len(tokens):
            token = tokens[i]
            if not token.is_word or not any(is_sinhala(ch) for ch in token.surface):
                i += 1
                continue
            line, column = line_col(text, token.char_span[0])

            j = self._next_word(tokens, i)
            if j is not None:
                joined = self.suggester.suggest_joins(token, tokens[j])
                if joined is not None:
                    findings.append(Finding((token, tokens[j]), line, column, [joined]))
                    i = j + 1
                    continue

            if not self.suggester.recognize(normalize(token.surface)):
                findings.append(Finding((token,), line, column, self.suggest(token.surface)))
            i += 1
        self.logger.debug(f"Checked {len(tokens)} tokens, {len(findings)} findings")
        return findings

    def fix(self, text: str) -> Tuple[str, List[AppliedFix]]:
        """Normalize, then apply the rewrite rules."""
        return self.corrector.apply(normalize(text))
