"""
Data Loader
Core system for locating and reading the UTF-8 data files under Databases/.
"""

import os
from typing import Dict, Optional

from utils.constants import DATABASE_DIR
from utils.errors import TextDecodeError
from utils.logger import get_logger


def decode_utf8(data: bytes, source: Optional[str] = None) -> str:
    """
    Decode UTF-8 bytes, reporting the offset of the first bad byte.

    Args:
        data: Raw bytes
        source: Name used in the error message

    Returns:
        Decoded text (a leading BOM is dropped)

    Raises:
        TextDecodeError: If the bytes are not valid UTF-8
    """
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as e:
        raise TextDecodeError(e.start, e.reason, source) from e
    return text[1:] if text.startswith("\ufeff") else text


def read_text(path: str) -> str:
    """Read a UTF-8 file from any location."""
    with open(path, "rb") as f:
        return decode_utf8(f.read(), path)


class DataLoader:
    """
    Handles locating and caching of data files.
    Singleton pattern for global access.
    """

    _instance = None

    def __new__(cls):
        """Ensure only one instance exists."""
        if cls._instance is None:
            cls._instance = super().__new__(cls)
            cls._instance._initialized = False
        return cls._instance

    def __init__(self):
        """Initialize the data loader."""
        if self._initialized:
            return

        self.logger = get_logger()
        self.cache: Dict[str, str] = {}

        self.project_root = self._find_project_root()
        self.database_path = os.path.join(self.project_root, DATABASE_DIR)

        if not os.path.exists(self.database_path):
            self.logger.warning(f"Database directory not found at {self.database_path}")

        self._initialized = True
        self.logger.debug(f"DataLoader initialized - Database: {self.database_path}")

    def _find_project_root(self) -> str:
        """Find the project root directory."""
        current = os.path.dirname(os.path.abspath(__file__))

        # Go up directories until we find the Databases folder
        while current != os.path.dirname(current):
            if os.path.exists(os.path.join(current, DATABASE_DIR)):
                return current
            current = os.path.dirname(current)

        return os.getcwd()

    def load_text(self, filepath: str, use_cache: bool = True) -> str:
        """
        Load a text file.

        Args:
            filepath: Path relative to the Databases folder
            use_cache: Whether to use cached data if available

        Returns:
            File contents

        Raises:
            FileNotFoundError: If the file does not exist
            TextDecodeError: If the file is not valid UTF-8
        """
        if use_cache and filepath in self.cache:
            return self.cache[filepath]

        full_path = self.get_database_path(filepath)
        text = read_text(full_path)
        self.cache[filepath] = text
        self.logger.debug(f"Loaded {filepath} ({len(text)} chars)")
        return text

    def clear_cache(self, filepath: Optional[str] = None):
        """
        Clear cached data.

        Args:
            filepath: Specific file to clear, or None to clear all
        """
        if filepath:
            self.cache.pop(filepath, None)
        else:
            self.cache.clear()

    def get_database_path(self, relative_path: str = "") -> str:
        """
        Get full path to a database file/folder.

        Args:
            relative_path: Path relative to Databases folder

        Returns:
            Full absolute path
        """
        return os.path.join(self.database_path, relative_path)


# Global instance
data_loader = DataLoader()
