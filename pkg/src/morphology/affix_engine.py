"""
Affix Engine
Reads Hunspell-style .aff/.dic pairs and decides whether a word can be formed
as (prefix) + stem + (suffix), with the Sinhala negative infix as the one
compound-verb extension.

Supported .aff subset: SET, FLAG (char/long), TRY, REP, PFX, SFX.
"""

from collections import defaultdict
from dataclasses import dataclass, field
from enum import Enum, auto
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Set, Tuple

import regex

from text.sinhala_text import normalize, segment_lenient
from utils.constants import NEEDS_AFFIX_FLAG, NEGATIVE_INFIX
from utils.data_loader import read_text
from utils.errors import AffixParseError, DictionaryLoadError, ExpansionLimitError
from utils.logger import get_logger


class AffixKind(Enum):
    """Which edge of the stem a rule works on."""
    PREFIX = auto()
    SUFFIX = auto()


def compile_condition(condition: str, kind: AffixKind, line_number: int = 0) -> "regex.Pattern":
    """
    Compile a rule condition into an anchored pattern.

    "." matches anything, [abc] and [^abc] are character classes, every other
    code point is a literal. Suffix conditions are right-anchored, prefix
    conditions left-anchored.
    """
    if condition in ("", "."):
        return regex.compile("")

    parts: List[str] = []
    i = 0
    while i < len(condition):
        ch = condition[i]
        if ch == "[":
            end = condition.find("]", i + 1)
            if end == -1:
                raise AffixParseError(line_number, f"unclosed '[' in condition {condition!r}")
            body = condition[i + 1:end]
            negate = body.startswith("^")
            members = body[1:] if negate else body
            if not members:
                raise AffixParseError(line_number, f"empty character class in condition {condition!r}")
            escaped = "".join(regex.escape(m) for m in members)
            parts.append(f"[{'^' if negate else ''}{escaped}]")
            i = end + 1
        elif ch == "]":
            raise AffixParseError(line_number, f"stray ']' in condition {condition!r}")
        elif ch == ".":
            parts.append(".")
            i += 1
        else:
            parts.append(regex.escape(ch))
            i += 1

    body = "".join(parts)
    if kind is AffixKind.SUFFIX:
        return regex.compile(f"(?:{body})$", regex.DOTALL)
    return regex.compile(f"^(?:{body})", regex.DOTALL)


@dataclass(frozen=True)
class AffixRule:
    """One strip/append/condition transformation under a flag."""
    kind: AffixKind
    flag: str
    strip: str
    append: str
    condition: str = "."
    cross_product: bool = True
    line_number: int = field(default=0, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_pattern", compile_condition(self.condition, self.kind, self.line_number))

    def condition_matches(self, stripped: str) -> bool:
        """True if the condition holds at the attaching edge of the stripped stem."""
        return self._pattern.search(stripped) is not None

    def can_strip(self, stem: str) -> bool:
        """True if the strip string sits at the rule's edge of the stem."""
        if self.kind is AffixKind.SUFFIX:
            return stem.endswith(self.strip)
        return stem.startswith(self.strip)

    def describe(self) -> str:
        tag = "SFX" if self.kind is AffixKind.SUFFIX else "PFX"
        return f"{tag} {self.flag} {self.strip or '0'} {self.append or '0'} {self.condition}"


@dataclass
class AffixTable:
    """Parsed contents of an .aff file."""
    rules: Dict[str, List[AffixRule]] = field(default_factory=dict)
    replacements: List[Tuple[str, str]] = field(default_factory=list)
    alphabet: str = ""
    encoding: str = "UTF-8"
    flag_mode: str = "char"
    warnings: List[str] = field(default_factory=list)

    def prefixes(self) -> List[AffixRule]:
        return [r for rules in self.rules.values() for r in rules if r.kind is AffixKind.PREFIX]

    def suffixes(self) -> List[AffixRule]:
        return [r for rules in self.rules.values() for r in rules if r.kind is AffixKind.SUFFIX]

    def split_flags(self, flags: str) -> List[str]:
        """Split a .dic flag field according to the FLAG mode."""
        if self.flag_mode == "long":
            # The needs-affix mark stays a single character in every mode
            marks = [NEEDS_AFFIX_FLAG] if NEEDS_AFFIX_FLAG in flags else []
            flags = flags.replace(NEEDS_AFFIX_FLAG, "")
            return [flags[i:i + 2] for i in range(0, len(flags), 2)] + marks
        return list(flags)


@dataclass(frozen=True)
class StemEntry:
    """A dictionary stem and the affix flags it accepts."""
    stem: str
    flags: FrozenSet[str] = frozenset()

    @property
    def needs_affix(self) -> bool:
        return NEEDS_AFFIX_FLAG in self.flags


@dataclass(frozen=True)
class Analysis:
    """
    One way a word is formed. core_start/core_end bound the stem material
    that survives in the analysed word.
    """
    stem: str
    prefix: Optional[AffixRule] = None
    suffix: Optional[AffixRule] = None
    infix_at: Optional[int] = None
    core_start: int = 0
    core_end: int = 0

    def describe(self) -> str:
        parts = [f"stem={self.stem}"]
        if self.prefix:
            parts.append(f"prefix={self.prefix.append or '0'}/{self.prefix.flag}")
        if self.suffix:
            parts.append(f"suffix={self.suffix.append or '0'}/{self.suffix.flag}")
        if self.infix_at is not None:
            parts.append(f"infix@{self.infix_at}")
        return " ".join(parts)


# ---------------------------------------------------------------------------
# .aff parsing
# ---------------------------------------------------------------------------

def _strip_field(value: str) -> str:
    return "" if value == "0" else normalize(value)


def parse_aff(text: str) -> AffixTable:
    """
    Parse .aff text into an AffixTable.

    Unknown directives are skipped and reported in table.warnings.

    Raises:
        AffixParseError: On malformed rule lines or count mismatches
    """
    logger = get_logger()
    table = AffixTable()
    lines = text.splitlines()

    # (directive, flag, remaining count, header line) while inside a block
    pending: Optional[Tuple[str, str, int, int]] = None
    rep_pending: Optional[Tuple[int, int]] = None  # (remaining, header line)
    cross_products: Dict[Tuple[str, str], bool] = {}

    def warn(message: str):
        table.warnings.append(message)
        logger.warning(message)

    for number, raw in enumerate(lines, start=1):
        fields = raw.split()
        if not fields or fields[0].startswith("#"):
            continue
        directive = fields[0]

        if pending is not None:
            kind_name, flag, remaining, header_line = pending
            if directive != kind_name or len(fields) < 2 or fields[1] != flag:
                raise AffixParseError(
                    number,
                    f"{kind_name} {flag} declared at line {header_line} is missing {remaining} rule line(s)"
                )
        if rep_pending is not None and directive != "REP":
            raise AffixParseError(number, f"REP block at line {rep_pending[1]} is missing {rep_pending[0]} pair(s)")

        if directive == "SET":
            if len(fields) != 2:
                raise AffixParseError(number, "SET takes one value")
            table.encoding = fields[1]
            if fields[1].upper() != "UTF-8":
                warn(f"line {number}: encoding {fields[1]} declared; text is read as UTF-8")

        elif directive == "FLAG":
            if len(fields) != 2:
                raise AffixParseError(number, "FLAG takes one value")
            mode = fields[1].lower()
            if mode in ("char", "utf-8"):
                table.flag_mode = "char"
            elif mode == "long":
                table.flag_mode = "long"
            else:
                raise AffixParseError(number, f"unsupported FLAG mode {fields[1]!r}")

        elif directive == "TRY":
            if len(fields) != 2:
                raise AffixParseError(number, "TRY takes one value")
            table.alphabet = normalize(fields[1])

        elif directive == "REP":
            if rep_pending is None:
                if len(fields) != 2 or not fields[1].isdigit():
                    raise AffixParseError(number, "REP header must be 'REP <count>'")
                count = int(fields[1])
                rep_pending = (count, number) if count else None
            else:
                if len(fields) != 3:
                    raise AffixParseError(number, "REP pair must be 'REP <from> <to>'")
                # Hunspell convention: underscore stands for a space
                pair = (normalize(fields[1].replace("_", " ")), normalize(fields[2].replace("_", " ")))
                table.replacements.append(pair)
                remaining = rep_pending[0] - 1
                rep_pending = (remaining, rep_pending[1]) if remaining else None

        elif directive in ("PFX", "SFX"):
            kind = AffixKind.PREFIX if directive == "PFX" else AffixKind.SUFFIX
            if pending is None:
                if len(fields) != 4 or fields[2] not in ("Y", "N") or not fields[3].isdigit():
                    raise AffixParseError(number, f"{directive} header must be '{directive} <flag> <Y|N> <count>'")
                flag = fields[1]
                if table.flag_mode == "long" and len(flag) != 2:
                    raise AffixParseError(number, f"flag {flag!r} is not a two-character flag")
                if table.flag_mode == "char" and len(flag) != 1:
                    raise AffixParseError(number, f"flag {flag!r} is not a single character")
                if (directive, flag) in cross_products:
                    warn(f"line {number}: second {directive} block for flag {flag}; rules are merged")
                cross_products[(directive, flag)] = fields[2] == "Y"
                table.rules.setdefault(flag, [])
                count = int(fields[3])
                pending = (directive, flag, count, number) if count else None
            else:
                if len(fields) < 5:
                    raise AffixParseError(number, f"{directive} rule needs flag, strip, append and condition")
                if len(fields) > 5:
                    warn(f"line {number}: extra fields after condition ignored")
                flag = fields[1]
                if "/" in fields[3]:
                    raise AffixParseError(number, "continuation flags on affixes are not supported")
                rule = AffixRule(
                    kind=kind,
                    flag=flag,
                    strip=_strip_field(fields[2]),
                    append=_strip_field(fields[3]),
                    condition=normalize(fields[4]),
                    cross_product=cross_products[(directive, flag)],
                    line_number=number,
                )
                if any(r.kind is not kind for r in table.rules[flag]):
                    raise AffixParseError(number, f"flag {flag} is used for both prefixes and suffixes")
                table.rules[flag].append(rule)
                _, _, remaining, header_line = pending
                pending = (directive, flag, remaining - 1, header_line) if remaining > 1 else None

        else:
            warn(f"line {number}: unsupported directive {directive} skipped")

    if pending is not None:
        kind_name, flag, remaining, header_line = pending
        raise AffixParseError(header_line, f"{kind_name} {flag} declares {remaining} more rule line(s) than present")
    if rep_pending is not None:
        raise AffixParseError(rep_pending[1], f"REP declares {rep_pending[0]} more pair(s) than present")

    logger.debug(
        f"Parsed affix table: {len(table.rules)} flags, {len(table.replacements)} REP pairs, "
        f"{len(table.warnings)} warnings"
    )
    return table


# ---------------------------------------------------------------------------
# Dictionary
# ---------------------------------------------------------------------------

class Dictionary:
    """
    Stems plus their affix table. Read-only after construction; every query
    method is safe to call concurrently.
    """

    def __init__(self, entries: Dict[str, StemEntry], table: AffixTable,
                 negative_infix: str = NEGATIVE_INFIX, warnings: Optional[List[str]] = None):
        self.entries: Dict[str, StemEntry] = dict(entries)
        self.table = table
        self.negative_infix = negative_infix
        self.warnings: List[str] = list(warnings or [])

        self._suffixes_by_append: Dict[str, List[AffixRule]] = defaultdict(list)
        self._prefixes_by_append: Dict[str, List[AffixRule]] = defaultdict(list)
        for rule in table.suffixes():
            self._suffixes_by_append[rule.append].append(rule)
        for rule in table.prefixes():
            self._prefixes_by_append[rule.append].append(rule)
        self._suffix_lengths = sorted({len(a) for a in self._suffixes_by_append})
        self._prefix_lengths = sorted({len(a) for a in self._prefixes_by_append})

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, stem: str) -> bool:
        return stem in self.entries

    def lookup(self, stem: str) -> Optional[StemEntry]:
        return self.entries.get(stem)

    # -- recognition ---------------------------------------------------------

    def _suffix_candidates(self, word: str) -> Iterator[Tuple[Optional[AffixRule], int]]:
        """(rule, append length) pairs whose append ends the word; None for no suffix."""
        yield None, 0
        for length in self._suffix_lengths:
            if length > len(word):
                break
            for rule in self._suffixes_by_append.get(word[len(word) - length:], ()):
                yield rule, length

    def _prefix_candidates(self, word: str) -> Iterator[Tuple[Optional[AffixRule], int]]:
        yield None, 0
        for length in self._prefix_lengths:
            if length > len(word):
                break
            for rule in self._prefixes_by_append.get(word[:length], ()):
                yield rule, length

    def _plain_analyses(self, word: str) -> List[Analysis]:
        """Analyses without the infix: bare, prefix, suffix, prefix+suffix."""
        found: List[Analysis] = []
        for prefix, p_len in self._prefix_candidates(word):
            for suffix, s_len in self._suffix_candidates(word):
                if p_len + s_len > len(word):
                    continue
                if prefix and suffix and not (prefix.cross_product and suffix.cross_product):
                    continue
                core = word[p_len:len(word) - s_len]
                p_strip = prefix.strip if prefix else ""
                s_strip = suffix.strip if suffix else ""
                stem = p_strip + core + s_strip
                entry = self.entries.get(stem)
                if entry is None:
                    continue
                if prefix is None and suffix is None:
                    if entry.needs_affix:
                        continue
                else:
                    if prefix and prefix.flag not in entry.flags:
                        continue
                    if suffix and suffix.flag not in entry.flags:
                        continue
                    if suffix and not suffix.condition_matches(stem[:len(stem) - len(s_strip)]):
                        continue
                    if prefix and not prefix.condition_matches(stem[len(p_strip):]):
                        continue
                found.append(Analysis(stem, prefix, suffix, None, p_len, len(word) - s_len))
        return found

    def analyze(self, word: str) -> List[Analysis]:
        """
        Every way the word can be formed; empty when the word is not recognized.
        """
        word = normalize(word)
        if not word:
            return []

        analyses = self._plain_analyses(word)

        infix = self.negative_infix
        if infix:
            start = word.find(infix, 1)
            while start != -1:
                end = start + len(infix)
                if end < len(word):
                    reduced = word[:start] + word[end:]
                    if start in _grapheme_boundaries(reduced):
                        for plain in self._plain_analyses(reduced):
                            if plain.core_start < start < plain.core_end:
                                analyses.append(Analysis(
                                    plain.stem, plain.prefix, plain.suffix, start,
                                    plain.core_start, plain.core_end + len(infix)
                                ))
                start = word.find(infix, start + 1)
        return analyses

    def recognize(self, word: str) -> bool:
        """True iff the word is formable from some stem and the affix rules."""
        return bool(self.analyze(word))

    # -- generation ----------------------------------------------------------

    def _forms_of(self, entry: StemEntry) -> Iterator[Tuple[str, int, int]]:
        """(word, core_start, core_end) for every plain form of one stem."""
        stem = entry.stem
        if not entry.needs_affix:
            yield stem, 0, len(stem)

        rules = [r for flag in sorted(entry.flags) for r in self.table.rules.get(flag, ())]
        suffixes = [r for r in rules if r.kind is AffixKind.SUFFIX]
        prefixes = [r for r in rules if r.kind is AffixKind.PREFIX]

        def suffix_ok(rule: AffixRule) -> bool:
            return rule.can_strip(stem) and rule.condition_matches(stem[:len(stem) - len(rule.strip)])

        def prefix_ok(rule: AffixRule) -> bool:
            return rule.can_strip(stem) and rule.condition_matches(stem[len(rule.strip):])

        good_suffixes = [r for r in suffixes if suffix_ok(r)]
        good_prefixes = [r for r in prefixes if prefix_ok(r)]

        for rule in good_suffixes:
            core = stem[:len(stem) - len(rule.strip)]
            yield core + rule.append, 0, len(core)
        for rule in good_prefixes:
            core = stem[len(rule.strip):]
            yield rule.append + core, len(rule.append), len(rule.append) + len(core)
        for prefix in good_prefixes:
            if not prefix.cross_product:
                continue
            for suffix in good_suffixes:
                if not suffix.cross_product or len(prefix.strip) + len(suffix.strip) > len(stem):
                    continue
                core = stem[len(prefix.strip):len(stem) - len(suffix.strip)]
                yield prefix.append + core + suffix.append, len(prefix.append), len(prefix.append) + len(core)

    def expand_all(self, limit: int = 10_000) -> Set[str]:
        """
        Every word recognize() accepts, by forward generation.

        Raises:
            ExpansionLimitError: If more than limit words are generated
        """
        words: Set[str] = set()

        # A join that composes under NFC (e.g. ෙ + ා) is unreachable from normalized input
        def add(word: str):
            if word and normalize(word) == word:
                words.add(word)
                if len(words) > limit:
                    raise ExpansionLimitError(limit, set(words))

        infix = self.negative_infix
        for stem in sorted(self.entries):
            for word, core_start, core_end in self._forms_of(self.entries[stem]):
                add(word)
                if not infix:
                    continue
                for boundary in _grapheme_boundaries(word):
                    if core_start < boundary < core_end:
                        add(word[:boundary] + infix + word[boundary:])
        return words

    # -- derivation ----------------------------------------------------------

    def add_word_list(self, text: str) -> "Dictionary":
        """
        New dictionary with each listed word added as a flagless stem.
        One word per line; '#' starts a comment line.
        """
        entries = dict(self.entries)
        added = 0
        for raw in text.splitlines():
            word = raw.strip()
            if not word or word.startswith("#"):
                continue
            word = normalize(word.split()[0])
            if word not in entries:
                entries[word] = StemEntry(word, frozenset())
                added += 1
        get_logger().debug(f"Word list added {added} stems")
        return Dictionary(entries, self.table, self.negative_infix, self.warnings)


def _grapheme_boundaries(word: str) -> Set[int]:
    """Code-point offsets between graphemes (0 and len included)."""
    boundaries = {0}
    position = 0
    for grapheme in segment_lenient(word):
        position += len(grapheme)
        boundaries.add(position)
    return boundaries


def parse_dic(text: str, table: AffixTable, negative_infix: str = NEGATIVE_INFIX,
              strict: bool = True) -> Dictionary:
    """
    Parse .dic text against an affix table.

    The first line is the entry count; a mismatch only warns. Duplicate stems
    merge their flag sets.

    Raises:
        DictionaryLoadError: If strict and an entry uses an undefined flag
    """
    logger = get_logger()
    warnings: List[str] = []
    flags_by_stem: Dict[str, Set[str]] = {}
    undefined: List[Tuple[str, str]] = []

    def warn(message: str):
        warnings.append(message)
        logger.warning(message)

    lines = text.splitlines()
    declared: Optional[int] = None
    body_start = 0
    if lines and lines[0].strip().isdigit():
        declared = int(lines[0].strip())
        body_start = 1
    else:
        warn("dictionary has no entry-count line")

    count = 0
    for number, raw in enumerate(lines[body_start:], start=body_start + 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) > 1:
            warn(f"line {number}: fields after the entry ignored")
        stem, _, flag_field = fields[0].partition("/")
        stem = normalize(stem)
        if not stem:
            warn(f"line {number}: empty stem skipped")
            continue
        flags = table.split_flags(flag_field) if flag_field else []
        for flag in flags:
            if flag != NEEDS_AFFIX_FLAG and flag not in table.rules:
                undefined.append((stem, flag))
        flags_by_stem.setdefault(stem, set()).update(flags)
        count += 1

    if declared is not None and declared != count:
        warn(f"entry count line says {declared}, found {count}")

    if undefined:
        if strict:
            raise DictionaryLoadError(undefined)
        for stem, flag in undefined:
            warn(f"stem {stem} uses undefined flag {flag}")

    entries = {stem: StemEntry(stem, frozenset(flags)) for stem, flags in flags_by_stem.items()}
    logger.debug(f"Parsed dictionary: {len(entries)} stems from {count} entries")
    return Dictionary(entries, table, negative_infix, table.warnings + warnings)


def load_dictionary(dic_path: str, aff_path: str, negative_infix: str = NEGATIVE_INFIX,
                    strict: bool = True) -> Dictionary:
    """Read and parse a .dic/.aff pair from disk."""
    table = parse_aff(read_text(aff_path))
    dictionary = parse_dic(read_text(dic_path), table, negative_infix, strict)
    get_logger().info(f"Loaded dictionary {dic_path}: {len(dictionary)} stems, {len(table.rules)} affix flags")
    return dictionary


def recognize(dictionary: Dictionary, word: str) -> bool:
    """Module-level form of Dictionary.recognize."""
    return dictionary.recognize(word)


def expand_all(dictionary: Dictionary, limit: int = 10_000) -> Set[str]:
    """Module-level form of Dictionary.expand_all."""
    return dictionary.expand_all(limit)
