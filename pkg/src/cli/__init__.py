"""Command-line front end."""

from cli.checker import Finding, SpellChecker
from cli.commands import build_parser, run
from cli.interactive_session import InteractiveSession

__all__ = ["Finding", "SpellChecker", "build_parser", "run", "InteractiveSession"]
