"""
SinSpell - Sinhala spell checking toolkit
Main Entry Point with Logging

Detects and suggests corrections for Sinhala non-word errors, auto-corrects
evident ones, and builds Hunspell dictionaries from lexicon sources.
"""

import sys
import os
import logging

# Add src directory to Python path
project_root = os.path.dirname(os.path.abspath(__file__))
src_dir = os.path.join(project_root, 'src')
sys.path.insert(0, src_dir)

# Initialize logging FIRST (before any other imports)
from utils.logger import init_logger

# Console stays quiet (stdout carries results); the session file gets everything
logger = init_logger(
    name="SinSpell",
    log_dir=os.path.join(project_root, "logs"),
    console_level=logging.WARNING,
    file_level=logging.DEBUG
)

from cli.commands import run
from utils.constants import EXIT_ERROR, TOOL_VERSION


def main():
    """Main entry point"""
    logger.section("SINSPELL")
    logger.info(f"Version: {TOOL_VERSION}")
    logger.debug(f"Python: {sys.version.split()[0]}")
    logger.debug(f"Arguments: {sys.argv[1:]}")
    logger.debug(f"Session log: {logger.get_session_log_path()}")

    try:
        status = run(sys.argv[1:])
    except KeyboardInterrupt:
        logger.warning("Interrupted by user (Ctrl+C)")
        status = EXIT_ERROR
    except Exception as e:
        logger.critical("=" * 70)
        logger.critical("FATAL ERROR OCCURRED")
        logger.exception(f"Error: {e}")
        logger.critical(f"Log file: {logger.get_session_log_path()}")
        logger.critical("=" * 70)
        status = EXIT_ERROR

    logger.info(f"Exit status {status}")
    logger.separator()
    sys.exit(status)


if __name__ == "__main__":
    main()
