"""
Command Line
Subcommands tying the toolkit together: check, suggest, fix, interactive,
compile-lexc, mine and eval.

Exit status is 0 when clean, 1 when findings were reported and 2 on any
load or usage error.
"""

import argparse
import os
import sys
from typing import Callable, Dict, List, Optional, TextIO

from analysis.error_miner import confusion_stats, format_records, format_stats, mine
from analysis.eval_harness import (
    EvalReport, eval_detection, eval_suggestions, load_cases, load_word_list, render_table, render_tsv
)
from cli.checker import SpellChecker
from cli.interactive_session import InteractiveSession
from correction.autofix import format_audit
from correction.confusion import calibrate, load_confusions, write_confusions
from morphology.lexc_compiler import build, parse_lexc
from morphology.suffix_table import build_suffix_table, merge_dictionaries, parse_suffix_table
from text.sinhala_text import normalize
from utils.config_manager import Config, ConfigManager
from utils.constants import (
    EXIT_CLEAN, EXIT_ERROR, EXIT_FINDINGS, RECOVERY_SUFFIX, TOOL_NAME, TOOL_VERSION
)
from utils.data_loader import decode_utf8, read_text
from utils.errors import SinSpellError
from utils.logger import get_logger


class UsageError(Exception):
    """Bad command-line arguments (argparse would otherwise exit the process)."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--config", help="config file (default: discovered sinspell.toml)")
    common.add_argument("--dic", help=".dic file")
    common.add_argument("--aff", help=".aff file")
    common.add_argument("--confusions", help="confusion sets file")
    common.add_argument("--rules", help="autofix rules file")
    common.add_argument("--freq", help="word frequency file")
    common.add_argument("--max-suggestions", type=int, help="suggestions per word")
    common.add_argument("--normalize-only", action="store_true",
                        help="print the NFC-normalized input and exit")

    parser = _Parser(prog=TOOL_NAME, description="Sinhala spell checking toolkit")
    parser.add_argument("--version", action="version", version=f"{TOOL_NAME} {TOOL_VERSION}")
    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("check", parents=[common], help="flag misspelled words")
    p.add_argument("inputs", nargs="*", help="input files (default: standard input)")

    p = sub.add_parser("suggest", parents=[common], help="rank corrections for one word")
    p.add_argument("word")

    p = sub.add_parser("fix", parents=[common], help="apply autofix rules")
    p.add_argument("inputs", nargs="*", help="input files (default: standard input)")
    p.add_argument("--audit", help="write the audit trail here instead of standard error")

    p = sub.add_parser("interactive", parents=[common], help="review findings one by one")
    p.add_argument("inputs", nargs="*", help="input file (default: standard input)")
    p.add_argument("--output", help="write the corrected document here instead of standard output")

    p = sub.add_parser("compile-lexc", parents=[common], help="compile lexc source to .dic/.aff")
    p.add_argument("inputs", nargs="*", help="lexc source files")
    p.add_argument("--suffix-table", action="append", default=[], help="word x suffix grid to merge in")
    p.add_argument("-o", "--output", help="output prefix (writes PREFIX.dic and PREFIX.aff)")

    p = sub.add_parser("mine", parents=[common], help="extract errors from original/corrected documents")
    p.add_argument("original")
    p.add_argument("corrected")
    p.add_argument("--records", help="records TSV (default: standard output)")
    p.add_argument("--stats", help="confusion statistics TSV")
    p.add_argument("--calibrate", help="write recalibrated confusion sets here")

    p = sub.add_parser("eval", parents=[common], help="detection and suggestion evaluation")
    p.add_argument("--correct", help="correct word list")
    p.add_argument("--incorrect", help="incorrect word list")
    p.add_argument("--cases", help="misspelled<TAB>gold suggestion cases")
    p.add_argument("--tsv", help="also write the report as TSV")
    p.add_argument("--name", default="SinSpell", help="row label in the report")
    return parser


class CommandRunner:
    """Runs one parsed command against the given streams."""

    def __init__(self, args: argparse.Namespace, stdin: TextIO, stdout: TextIO, stderr: TextIO):
        self.args = args
        self.stdin = stdin
        self.stdout = stdout
        self.stderr = stderr
        self.logger = get_logger()

    # -- plumbing ------------------------------------------------------------

    def read_input(self, path: Optional[str]) -> str:
        if path:
            return read_text(path)
        if hasattr(self.stdin, "buffer"):
            return decode_utf8(self.stdin.buffer.read(), "<stdin>")
        return self.stdin.read()

    def inputs(self) -> List[Optional[str]]:
        return list(getattr(self.args, "inputs", None) or [None])

    def config(self) -> Config:
        """Flags over config file over defaults; every file must exist."""
        manager = ConfigManager(self.args.config)
        manager.load()
        manager.set("dictionary_path", self.args.dic)
        manager.set("affix_path", self.args.aff)
        manager.set("confusion_path", self.args.confusions)
        manager.set("rules_path", self.args.rules)
        manager.set("frequency_path", self.args.freq)
        manager.set("max_suggestions", self.args.max_suggestions)
        config = manager.build()
        self.logger.set_console_level(config.log_level)
        return config

    def checker(self) -> SpellChecker:
        return SpellChecker(self.config())

    def emit(self, text: str):
        self.stdout.write(text)

    # -- commands ------------------------------------------------------------

    def normalize_only(self) -> int:
        for path in self.inputs():
            self.emit(normalize(self.read_input(path)))
        return EXIT_CLEAN

    def check(self) -> int:
        checker = self.checker()
        paths = self.inputs()
        total = 0
        for path in paths:
            findings = checker.check(self.read_input(path))
            prefix = f"{path}:" if path and len(paths) > 1 else ""
            for finding in findings:
                self.emit(prefix + finding.format() + "\n")
            total += len(findings)
        self.logger.info(f"{total} findings")
        return EXIT_FINDINGS if total else EXIT_CLEAN

    def suggest(self) -> int:
        checker = self.checker()
        word = normalize(self.args.word)
        if checker.suggester.recognize(word):
            self.logger.info(f"{word} is a dictionary word")
            return EXIT_CLEAN
        for suggestion in checker.suggest(word):
            self.emit(f"{suggestion.candidate}\t{suggestion.cost:.2f}\t{suggestion.source.value}\n")
        return EXIT_FINDINGS

    def fix(self) -> int:
        checker = self.checker()
        audit: List[str] = []
        for path in self.inputs():
            fixed, fixes = checker.fix(self.read_input(path))
            self.emit(fixed)
            audit.append(format_audit(fixes))
            self.logger.info(f"{path or '<stdin>'}: {len(fixes)} fixes")
        if self.args.audit:
            with open(self.args.audit, "w", encoding="utf-8") as f:
                f.write("".join(audit))
        else:
            self.stderr.write("".join(audit))
        return EXIT_CLEAN

    def interactive(self) -> int:
        paths = self.inputs()
        if len(paths) > 1:
            raise UsageError("interactive mode reviews one document at a time")
        path = paths[0]
        is_tty = getattr(self.stdin, "isatty", lambda: False)()
        if path is None or not is_tty:
            self.logger.warning("Not attached to a terminal; reporting findings instead")
            return self.check()

        checker = self.checker()
        recovery = (self.args.output or path) + RECOVERY_SUFFIX
        session = InteractiveSession(checker, read_line=self._prompt, write=self._tell, recovery_path=recovery)
        corrected = session.run(self.read_input(path))
        if self.args.output:
            with open(self.args.output, "w", encoding="utf-8") as f:
                f.write(corrected)
        else:
            self.emit(corrected)
        return EXIT_CLEAN

    def _prompt(self, prompt: str) -> str:
        self.stderr.write(prompt)
        self.stderr.flush()
        line = self.stdin.readline()
        if not line:
            raise EOFError
        return line.rstrip("\n")

    def _tell(self, message: str):
        self.stderr.write(message + "\n")

    def compile_lexc(self) -> int:
        if not self.args.inputs and not self.args.suffix_table:
            raise UsageError("compile-lexc needs a lexc file or --suffix-table")
        parts = [build(parse_lexc(read_text(path))) for path in self.args.inputs]
        parts += [build_suffix_table(parse_suffix_table(read_text(path))) for path in self.args.suffix_table]
        dic_text, aff_text = merge_dictionaries(*parts)

        prefix = self.args.output
        if prefix is None:
            first = (self.args.inputs or self.args.suffix_table)[0]
            prefix = os.path.splitext(first)[0]
        for extension, content in ((".dic", dic_text), (".aff", aff_text)):
            with open(prefix + extension, "w", encoding="utf-8") as f:
                f.write(content)
        self.logger.info(f"Wrote {prefix}.dic and {prefix}.aff")
        self.emit(f"{prefix}.dic\n{prefix}.aff\n")
        return EXIT_CLEAN

    def mine(self) -> int:
        records = mine(normalize(read_text(self.args.original)), normalize(read_text(self.args.corrected)))
        stats = confusion_stats(records)
        if self.args.records:
            with open(self.args.records, "w", encoding="utf-8") as f:
                f.write(format_records(records))
        else:
            self.emit(format_records(records))
        if self.args.stats:
            with open(self.args.stats, "w", encoding="utf-8") as f:
                f.write(format_stats(stats))
        if self.args.calibrate:
            config = self.config()
            calibrated = calibrate(load_confusions(read_text(config.confusion_path)), stats)
            with open(self.args.calibrate, "w", encoding="utf-8") as f:
                f.write(write_confusions(calibrated))
        return EXIT_CLEAN

    def eval(self) -> int:
        if not (self.args.correct or self.args.incorrect or self.args.cases):
            raise UsageError("eval needs --correct, --incorrect or --cases")
        checker = self.checker()
        report = EvalReport()
        if self.args.correct or self.args.incorrect:
            correct = load_word_list(read_text(self.args.correct)) if self.args.correct else []
            incorrect = load_word_list(read_text(self.args.incorrect)) if self.args.incorrect else []
            eval_detection(checker.dictionary, correct, incorrect, report)
        if self.args.cases:
            cases = load_cases(read_text(self.args.cases))
            eval_suggestions(checker.dictionary, checker.confusions, cases,
                             checker.config.max_suggestions, checker.suggester, report)
        self.emit(render_table(report, self.args.name))
        if self.args.tsv:
            with open(self.args.tsv, "w", encoding="utf-8") as f:
                f.write(render_tsv(report))
        return EXIT_CLEAN


COMMANDS: Dict[str, Callable[[CommandRunner], int]] = {
    "check": CommandRunner.check,
    "suggest": CommandRunner.suggest,
    "fix": CommandRunner.fix,
    "interactive": CommandRunner.interactive,
    "compile-lexc": CommandRunner.compile_lexc,
    "mine": CommandRunner.mine,
    "eval": CommandRunner.eval,
}


def run(argv: Optional[List[str]] = None, stdin: Optional[TextIO] = None,
        stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None) -> int:
    """Parse argv, run the command and return the exit status."""
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    logger = get_logger()
    parser = build_parser()

    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("a command is required")
        runner = CommandRunner(args, stdin, stdout, stderr)
        logger.section(f"{TOOL_NAME} {args.command}")
        if args.normalize_only:
            return runner.normalize_only()
        return COMMANDS[args.command](runner)
    except UsageError as e:
        stderr.write(parser.format_usage())
        stderr.write(f"{TOOL_NAME}: error: {e}\n")
        return EXIT_ERROR
    except (SinSpellError, OSError) as e:
        logger.debug(f"{type(e).__name__}: {e}")
        stderr.write(f"{TOOL_NAME}: {e}\n")
        return EXIT_ERROR
