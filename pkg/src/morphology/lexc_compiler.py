"""
Lexc Compiler
Parses .lexc morphological lexicons and compiles them into .dic/.aff pairs
for the affix engine.

Every stem gets one affix flag per suffix class it continues into. A class is
the set of surface strings from its lexicon to the terminator, with longer
continuation chains flattened into single suffixes so that one suffix per word
is always enough.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Set, Tuple

from text.sinhala_text import normalize
from utils.constants import FLAG_ALPHABET, LEXC_ROOT, LEXC_TERMINATOR, NEEDS_AFFIX_FLAG
from utils.errors import LexcCycleError, LexcParseError
from utils.logger import get_logger


@dataclass(frozen=True)
class LexcEntry:
    """One continuation-class entry: analysis:surface continuation;"""
    analysis: str
    surface: str
    continuation: str
    line_number: int = field(default=0, compare=False)

    @property
    def is_pure_continuation(self) -> bool:
        return not self.analysis and not self.surface


@dataclass
class LexcSource:
    """A parsed .lexc file."""
    multichar_symbols: List[str] = field(default_factory=list)
    lexicons: Dict[str, List[LexcEntry]] = field(default_factory=dict)
    root_name: str = LEXC_ROOT


# ---------------------------------------------------------------------------
# Parsing
# ---------------------------------------------------------------------------

def _strip_comment(line: str) -> str:
    """Drop everything from the first unescaped '!'."""
    i = 0
    while i < len(line):
        if line[i] == "%":
            i += 2
            continue
        if line[i] == "!":
            return line[:i]
        i += 1
    return line


def _unescape(text: str) -> str:
    out = []
    i = 0
    while i < len(text):
        if text[i] == "%" and i + 1 < len(text):
            out.append(text[i + 1])
            i += 2
        else:
            out.append(text[i])
            i += 1
    return "".join(out)


def _remove_symbols(text: str, symbols: List[str]) -> Tuple[str, str]:
    """Split text into (multichar tags found, remaining surface)."""
    tags = []
    rest = []
    i = 0
    ordered = sorted(symbols, key=len, reverse=True)
    while i < len(text):
        for symbol in ordered:
            if symbol and text.startswith(symbol, i):
                tags.append(symbol)
                i += len(symbol)
                break
        else:
            rest.append(text[i])
            i += 1
    return "".join(tags), "".join(rest)


def _parse_entry(chunk: str, line_number: int, symbols: List[str]) -> LexcEntry:
    tokens = chunk.split()
    if not tokens:
        raise LexcParseError("empty entry", line_number, chunk)
    continuation = tokens[-1]
    form = " ".join(tokens[:-1])

    if ":" in form:
        analysis, _, surface = form.partition(":")
        analysis = _unescape(analysis.strip())
        surface = _unescape(surface.strip())
        # Tags never reach the written form
        _, surface = _remove_symbols(surface, symbols)
    else:
        analysis, surface = _remove_symbols(_unescape(form.strip()), symbols)

    if surface == "0":
        surface = ""
    if " " in surface:
        raise LexcParseError("surface form contains a space", line_number, chunk)
    return LexcEntry(analysis, normalize(surface), continuation, line_number)


def parse_lexc(text: str) -> LexcSource:
    """
    Parse .lexc text.

    Raises:
        LexcParseError: On syntax errors, a missing Root lexicon, or an entry
            continuing into an undefined lexicon
    """
    source = LexcSource()
    current: Optional[str] = None
    in_symbols = False

    for number, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw).strip()
        if not line:
            continue

        head = line.split(None, 1)
        keyword = head[0]

        if keyword == "Multichar_Symbols":
            in_symbols = True
            if len(head) > 1:
                source.multichar_symbols.extend(head[1].split())
            continue

        if keyword == "LEXICON":
            in_symbols = False
            if len(head) != 2 or len(head[1].split()) != 1:
                raise LexcParseError("LEXICON needs exactly one name", number, line)
            current = head[1].strip()
            if current in source.lexicons:
                raise LexcParseError(f"lexicon {current} defined twice", number, line)
            source.lexicons[current] = []
            continue

        if in_symbols:
            source.multichar_symbols.extend(line.split())
            continue

        if current is None:
            raise LexcParseError("entry outside any LEXICON", number, line)
        if not line.endswith(";"):
            raise LexcParseError("entry not terminated by ';'", number, line)

        for chunk in line.split(";"):
            if chunk.strip():
                source.lexicons[current].append(_parse_entry(chunk, number, source.multichar_symbols))

    if source.root_name not in source.lexicons:
        raise LexcParseError(f"no LEXICON {source.root_name}")

    for name, entries in source.lexicons.items():
        for entry in entries:
            if entry.continuation != LEXC_TERMINATOR and entry.continuation not in source.lexicons:
                raise LexcParseError(
                    f"continuation {entry.continuation} in lexicon {name} is not defined",
                    entry.line_number,
                    f"{entry.analysis}:{entry.surface} {entry.continuation}",
                )

    get_logger().debug(
        f"Parsed lexc: {len(source.lexicons)} lexicons, {len(source.multichar_symbols)} multichar symbols"
    )
    return source


# ---------------------------------------------------------------------------
# Compilation
# ---------------------------------------------------------------------------

@dataclass
class SuffixClass:
    """Distinct suffix surfaces with the analyses that produce each one."""
    name: str
    suffixes: Dict[str, Set[str]] = field(default_factory=dict)

    def signature(self) -> Tuple[str, ...]:
        return tuple(sorted(self.suffixes))


@dataclass
class CompiledLexicon:
    """
    Stems and suffix classes ready to render as .dic/.aff.

    stems maps stem -> (class keys in first-seen order, bare form allowed).
    """
    stems: Dict[str, Tuple[List[Tuple[str, ...]], bool]] = field(default_factory=dict)
    classes: Dict[Tuple[str, ...], SuffixClass] = field(default_factory=dict)

    def add_class(self, suffixes: Dict[str, Set[str]], name: str) -> Tuple[str, ...]:
        """Register a class (merging analyses into an identical one) and return its key."""
        key = tuple(sorted(suffixes))
        existing = self.classes.get(key)
        if existing is None:
            self.classes[key] = SuffixClass(name, {s: set(a) for s, a in suffixes.items()})
        else:
            for surface, analyses in suffixes.items():
                existing.suffixes.setdefault(surface, set()).update(analyses)
        return key

    def add_stem(self, stem: str, class_key: Optional[Tuple[str, ...]], bare_ok: bool):
        keys, bare = self.stems.get(stem, ([], False))
        if class_key is not None and class_key not in keys:
            keys.append(class_key)
        self.stems[stem] = (keys, bare or bare_ok)

    def merge(self, other: "CompiledLexicon") -> "CompiledLexicon":
        """New lexicon holding both; identical classes share one flag."""
        merged = CompiledLexicon()
        for part in (self, other):
            for key, suffix_class in part.classes.items():
                merged.add_class(suffix_class.suffixes, suffix_class.name)
            for stem, (keys, bare_ok) in part.stems.items():
                if not keys:
                    merged.add_stem(stem, None, bare_ok)
                for key in keys:
                    merged.add_stem(stem, key, bare_ok)
        return merged


def _flag_names(count: int) -> Tuple[List[str], bool]:
    """Single letters while they last, then two-letter names under FLAG long."""
    if count <= len(FLAG_ALPHABET):
        return list(FLAG_ALPHABET[:count]), False
    names = [a + b for a in FLAG_ALPHABET for b in FLAG_ALPHABET]
    return names[:count], True


def render(compiled: CompiledLexicon) -> Tuple[str, str]:
    """Write a CompiledLexicon as (dic_text, aff_text). Output is deterministic."""
    # Classes in order of first use by a stem, then any unused ones
    order: List[Tuple[str, ...]] = []
    for keys, _ in compiled.stems.values():
        for key in keys:
            if key not in order:
                order.append(key)
    order.extend(k for k in compiled.classes if k not in order)

    # A class that only allows the bare form needs no rules
    order = [k for k in order if any(k)]
    names, long_flags = _flag_names(len(order))
    flag_of = dict(zip(order, names))

    aff: List[str] = ["SET UTF-8"]
    if long_flags:
        aff.append("FLAG long")

    char_counts: Dict[str, int] = {}
    for stem in compiled.stems:
        for ch in stem:
            char_counts[ch] = char_counts.get(ch, 0) + 1
    if char_counts:
        aff.append("TRY " + "".join(sorted(char_counts, key=lambda c: (-char_counts[c], c))))

    for key in order:
        suffix_class = compiled.classes[key]
        rules = [s for s in key if s]
        aff.append("")
        aff.append(f"# class {suffix_class.name}")
        for surface in rules:
            tags = ", ".join(sorted(a for a in suffix_class.suffixes[surface] if a))
            if tags:
                aff.append(f"# {surface} : {tags}")
        aff.append(f"SFX {flag_of[key]} Y {len(rules)}")
        for surface in rules:
            aff.append(f"SFX {flag_of[key]} 0 {surface} .")

    dic: List[str] = [str(len(compiled.stems))]
    for stem, (keys, bare_ok) in compiled.stems.items():
        flags = "".join(flag_of[k] for k in keys if k in flag_of)
        # "" among a class's suffixes makes the bare stem a word
        if not bare_ok and not any("" in k for k in keys):
            flags += NEEDS_AFFIX_FLAG
        dic.append(f"{stem}/{flags}" if flags else stem)

    return "\n".join(dic) + "\n", "\n".join(aff) + "\n"


def find_cycle(source: LexcSource) -> Optional[List[str]]:
    """A continuation cycle reachable from Root, or None."""
    state: Dict[str, int] = {}  # 1 = on stack, 2 = done
    stack: List[str] = []

    def visit(name: str) -> Optional[List[str]]:
        state[name] = 1
        stack.append(name)
        for entry in source.lexicons[name]:
            nxt = entry.continuation
            if nxt == LEXC_TERMINATOR:
                continue
            if state.get(nxt) == 1:
                return stack[stack.index(nxt):] + [nxt]
            if nxt not in state:
                found = visit(nxt)
                if found:
                    return found
        stack.pop()
        state[name] = 2
        return None

    return visit(source.root_name)


def _tails(source: LexcSource, name: str, memo: Dict[str, Dict[str, Set[str]]]) -> Dict[str, Set[str]]:
    """Every surface string from lexicon name to the terminator, with analyses."""
    if name in memo:
        return memo[name]
    tails: Dict[str, Set[str]] = {}
    for entry in source.lexicons[name]:
        if entry.continuation == LEXC_TERMINATOR:
            tails.setdefault(entry.surface, set()).add(entry.analysis)
            continue
        for rest, analyses in _tails(source, entry.continuation, memo).items():
            bucket = tails.setdefault(entry.surface + rest, set())
            bucket.update(entry.analysis + a for a in analyses)
    memo[name] = tails
    return tails


def build(source: LexcSource) -> CompiledLexicon:
    """
    Turn a parsed lexicon into stems and suffix classes.

    Raises:
        LexcCycleError: If the continuation graph loops
    """
    cycle = find_cycle(source)
    if cycle:
        raise LexcCycleError(cycle)

    compiled = CompiledLexicon()
    memo: Dict[str, Dict[str, Set[str]]] = {}

    def walk(name: str, prefix: str):
        for entry in source.lexicons[name]:
            stem = prefix + entry.surface
            if entry.continuation == LEXC_TERMINATOR:
                if stem:
                    compiled.add_stem(stem, None, True)
                continue
            if not stem:
                # Nothing written yet, keep descending
                walk(entry.continuation, stem)
                continue
            tails = _tails(source, entry.continuation, memo)
            key = compiled.add_class(tails, entry.continuation)
            compiled.add_stem(stem, key, "" in tails)

    walk(source.root_name, "")
    return compiled


def compile_lexc(source: LexcSource) -> Tuple[str, str]:
    """
    Compile a parsed lexicon to (dic_text, aff_text).

    Raises:
        LexcCycleError: If the continuation graph loops
    """
    compiled = build(source)
    dic_text, aff_text = render(compiled)
    get_logger().info(f"Compiled lexc: {len(compiled.stems)} stems, {len(compiled.classes)} suffix classes")
    return dic_text, aff_text


def expand_lexc(source: LexcSource) -> Set[str]:
    """
    Brute-force surface words: every Root-to-terminator concatenation.
    Joins that are not NFC-stable are left out, as the affix engine never sees them.
    """
    cycle = find_cycle(source)
    if cycle:
        raise LexcCycleError(cycle)
    memo: Dict[str, Dict[str, Set[str]]] = {}
    return {w for w in _tails(source, source.root_name, memo) if w and normalize(w) == w}
