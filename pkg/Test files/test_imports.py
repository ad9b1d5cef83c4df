"""
Simple Import Test
Tests that every toolkit module imports without errors.
"""

import importlib

import pytest

MODULES = [
    # Core
    ("utils.constants", "Constants"),
    ("utils.logger", "Logger"),
    ("utils.errors", "Errors"),
    ("utils.data_loader", "Data Loader"),
    ("utils.config_manager", "Config Manager"),

    # Text and morphology
    ("text.sinhala_text", "Sinhala Text"),
    ("morphology.affix_engine", "Affix Engine"),
    ("morphology.lexc_compiler", "Lexc Compiler"),
    ("morphology.suffix_table", "Suffix Table"),

    # Correction
    ("correction.confusion", "Confusion Model"),
    ("correction.suggester", "Suggester"),
    ("correction.autofix", "Autofix"),

    # Analysis
    ("analysis.aligner", "Sentence Aligner"),
    ("analysis.error_miner", "Error Miner"),
    ("analysis.eval_harness", "Evaluation Harness"),

    # Front end
    ("cli.checker", "Spell Checker"),
    ("cli.interactive_session", "Interactive Session"),
    ("cli.commands", "Command Line"),
]


@pytest.mark.parametrize("module_name, description", MODULES, ids=[m for m, _ in MODULES])
def test_import(module_name, description, test_logger):
    test_logger.info(f"Importing {description}...")
    assert importlib.import_module(module_name) is not None
    test_logger.info(f"  ok {module_name}")
