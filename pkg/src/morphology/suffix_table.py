"""
Suffix Table
Compiles word x suffix grids (one row per adjective or adverb, a 1 under every
suffix the word takes) into .dic/.aff pairs, and merges compiled sources.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from morphology.lexc_compiler import CompiledLexicon, render
from text.sinhala_text import normalize
from utils.errors import SuffixTableError
from utils.logger import get_logger


@dataclass
class SuffixTable:
    """Header suffixes and, per word, the suffixes marked for it."""
    suffixes: List[str] = field(default_factory=list)
    rows: Dict[str, List[str]] = field(default_factory=dict)


def parse_suffix_table(text: str) -> SuffixTable:
    """
    Parse a tab-separated grid. The first row is "Word<TAB>suffix<TAB>...";
    a cell of 1 marks a suffix, blank or 0 marks none.

    Raises:
        SuffixTableError: On a missing header, ragged rows or unknown cell values
    """
    table = SuffixTable()
    lines = [(n, line) for n, line in enumerate(text.splitlines(), start=1) if line.strip()]
    if not lines:
        return table

    header_number, header = lines[0]
    columns = header.rstrip("\n").split("\t")
    if len(columns) < 2:
        raise SuffixTableError(header_number, "header needs a word column and at least one suffix")
    table.suffixes = [normalize(c.strip()) for c in columns[1:]]

    for number, line in lines[1:]:
        cells = line.rstrip("\n").split("\t")
        if len(cells) > len(columns):
            raise SuffixTableError(number, f"{len(cells)} cells, header has {len(columns)}")
        cells += [""] * (len(columns) - len(cells))
        word = normalize(cells[0].strip())
        if not word:
            raise SuffixTableError(number, "row has no word")
        marked = []
        for suffix, cell in zip(table.suffixes, cells[1:]):
            value = cell.strip()
            if value == "1":
                marked.append(suffix)
            elif value not in ("", "0"):
                raise SuffixTableError(number, f"cell value {value!r} is not 1, 0 or blank")
        existing = table.rows.setdefault(word, [])
        existing.extend(s for s in marked if s not in existing)

    get_logger().debug(f"Parsed suffix table: {len(table.rows)} words x {len(table.suffixes)} suffixes")
    return table


def build_suffix_table(table: SuffixTable) -> CompiledLexicon:
    """Every distinct marked set becomes one class; the bare word is always valid."""
    compiled = CompiledLexicon()
    for word, marked in table.rows.items():
        if not marked:
            compiled.add_stem(word, None, True)
            continue
        key = compiled.add_class({s: set() for s in marked}, f"table:{'|'.join(marked)}")
        compiled.add_stem(word, key, True)
    return compiled


def compile_suffix_table(table: SuffixTable) -> Tuple[str, str]:
    """Compile a parsed grid to (dic_text, aff_text)."""
    return render(build_suffix_table(table))


def merge_dictionaries(*parts: CompiledLexicon) -> Tuple[str, str]:
    """
    Render several compiled sources as one .dic/.aff pair. Flags are assigned
    after merging, so the sources never collide.
    """
    merged = CompiledLexicon()
    for part in parts:
        merged = merged.merge(part)
    return render(merged)
