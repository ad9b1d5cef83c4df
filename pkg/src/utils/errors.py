"""
Error Types
Exceptions raised by the SinSpell toolkit.
"""

from typing import Iterable, List, Optional, Sequence, Tuple


class SinSpellError(Exception):
    """Base class for every toolkit error."""


class TextDecodeError(SinSpellError):
    """Input bytes are not valid UTF-8."""

    def __init__(self, offset: int, reason: str = "invalid UTF-8", source: Optional[str] = None):
        self.offset = offset
        self.reason = reason
        self.source = source
        where = f"{source}: " if source else ""
        super().__init__(f"{where}cannot decode byte at offset {offset}: {reason}")


class SegmentationError(SinSpellError):
    """A grapheme cannot start at the given position."""

    def __init__(self, position: int, char: str):
        self.position = position
        self.char = char
        super().__init__(f"combining mark U+{ord(char):04X} at position {position} has no base letter")


class AffixParseError(SinSpellError):
    """Malformed line in an affix file."""

    def __init__(self, line_number: int, message: str):
        self.line_number = line_number
        super().__init__(f"line {line_number}: {message}")


class DictionaryLoadError(SinSpellError):
    """Dictionary entries reference flags the affix table does not define."""

    def __init__(self, problems: Sequence[Tuple[str, str]]):
        self.problems = list(problems)
        listing = ", ".join(f"{stem}/{flag}" for stem, flag in self.problems)
        super().__init__(f"undefined affix flags: {listing}")


class LexcParseError(SinSpellError):
    """Malformed or inconsistent lexc source."""

    def __init__(self, message: str, line_number: Optional[int] = None, entry: Optional[str] = None):
        self.line_number = line_number
        self.entry = entry
        prefix = f"line {line_number}: " if line_number is not None else ""
        suffix = f" (entry: {entry!r})" if entry else ""
        super().__init__(f"{prefix}{message}{suffix}")


class LexcCycleError(SinSpellError):
    """The continuation graph loops."""

    def __init__(self, cycle: Iterable[str]):
        self.cycle = list(cycle)
        super().__init__("continuation cycle: " + " -> ".join(self.cycle))


class ExpansionLimitError(SinSpellError):
    """Forward generation produced more words than allowed."""

    def __init__(self, limit: int, partial: set):
        self.limit = limit
        self.partial = partial
        super().__init__(f"expansion exceeds limit of {limit} words")


class SuffixTableError(SinSpellError):
    """Malformed suffix grid."""

    def __init__(self, line_number: int, message: str):
        self.line_number = line_number
        super().__init__(f"line {line_number}: {message}")


class RuleLoadError(SinSpellError):
    """Invalid rewrite rule."""

    def __init__(self, line_number: int, message: str):
        self.line_number = line_number
        super().__init__(f"line {line_number}: {message}")


class DataFileError(SinSpellError):
    """Malformed confusion, frequency or evaluation data file."""

    def __init__(self, line_number: int, message: str):
        self.line_number = line_number
        super().__init__(f"line {line_number}: {message}")


class AlignmentError(SinSpellError):
    """Documents cannot be aligned."""


class ConfigError(SinSpellError):
    """Configuration refers to missing or unloadable files."""

    def __init__(self, message: str, missing: Optional[List[str]] = None):
        self.missing = missing or []
        super().__init__(message)


class SessionInterruptedError(SinSpellError):
    """Interactive review ended before every finding was decided."""

    def __init__(self, recovery_path: str):
        self.recovery_path = recovery_path
        super().__init__(f"session interrupted; partial output saved to {recovery_path}")
