"""Correction: confusion model, suggester and autofix."""

from correction.confusion import (
    ConfusionModel, ConfusionSet, calibrate, edit_cost, load_confusions, load_frequencies, write_confusions
)
from correction.suggester import Suggester, Suggestion, SuggestionSource, generate
from correction.autofix import (
    AppliedFix, AutoCorrector, RewriteRule, RewriteScope, apply, format_audit, load_rules, parse_audit, replay
)

__all__ = [
    "ConfusionModel", "ConfusionSet", "calibrate", "edit_cost", "load_confusions", "load_frequencies",
    "write_confusions", "Suggester", "Suggestion", "SuggestionSource", "generate", "AppliedFix",
    "AutoCorrector", "RewriteRule", "RewriteScope", "apply", "format_audit", "load_rules",
    "parse_audit", "replay",
]
