"""
Shared pytest setup: puts src/ and the project root on sys.path, keeps the
toolkit logger console-only, and provides the sample data as fixtures.
"""

import logging
import os
import sys

import pytest

PROJECT_ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
sys.path.insert(0, os.path.join(PROJECT_ROOT, 'src'))
sys.path.insert(0, PROJECT_ROOT)

from utils.logger import init_logger  # noqa: E402
from test_utils.logging_setup import log_test_end, log_test_start, setup_test_logger  # noqa: E402

init_logger(name="SinSpellTests", log_dir=None, console_level=logging.WARNING)


def database_path(relative: str) -> str:
    return os.path.join(PROJECT_ROOT, "Databases", relative)


@pytest.fixture
def test_logger(request):
    name = request.node.module.__name__.split(".")[-1]
    log_dir = os.path.join(PROJECT_ROOT, "logs", "tests")
    logger = setup_test_logger(name, log_dir)
    log_test_start(logger, request.node.name)
    yield logger
    log_test_end(logger, name, log_dir)


@pytest.fixture(scope="session")
def sample_dictionary():
    from morphology.affix_engine import load_dictionary
    return load_dictionary(database_path("Dictionaries/si_LK.dic"), database_path("Dictionaries/si_LK.aff"))


@pytest.fixture(scope="session")
def sample_confusions():
    from correction.confusion import load_confusions
    from utils.data_loader import data_loader
    return load_confusions(data_loader.load_text("Correction/confusions.tsv"))


@pytest.fixture(scope="session")
def sample_rules():
    from correction.autofix import load_rules
    from utils.data_loader import data_loader
    return load_rules(data_loader.load_text("Correction/autofix_rules.tsv"))
