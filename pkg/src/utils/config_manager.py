"""
Config Manager
Handles loading, merging and validating toolkit configuration.
"""

import os
try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from utils.constants import (
    AFFIX_FILE, CONFIG_FILE_NAME, CONFUSION_FILE, DEFAULT_MAX_SUGGESTIONS,
    DICTIONARY_FILE, FREQUENCY_FILE, RULES_FILE
)
from utils.data_loader import data_loader
from utils.errors import ConfigError
from utils.logger import get_logger


@dataclass
class Config:
    """Resolved configuration for one run."""
    dictionary_path: str
    affix_path: str
    confusion_path: str
    rules_path: str
    frequency_path: Optional[str] = None
    max_suggestions: int = DEFAULT_MAX_SUGGESTIONS
    log_level: str = "INFO"
    source: Optional[str] = field(default=None, compare=False)

    def required_paths(self) -> Dict[str, str]:
        """Map of config key to path for files that must exist."""
        paths = {
            "dictionary_path": self.dictionary_path,
            "affix_path": self.affix_path,
            "confusion_path": self.confusion_path,
            "rules_path": self.rules_path,
        }
        if self.frequency_path:
            paths["frequency_path"] = self.frequency_path
        return paths


class ConfigManager:
    """Manages configuration discovery and precedence (flags > file > defaults)."""

    DEFAULT_SETTINGS = {
        "dictionary_path": DICTIONARY_FILE,
        "affix_path": AFFIX_FILE,
        "confusion_path": CONFUSION_FILE,
        "rules_path": RULES_FILE,
        "frequency_path": FREQUENCY_FILE,
        "max_suggestions": DEFAULT_MAX_SUGGESTIONS,
        "log_level": "INFO",
    }

    # Keys whose default value is relative to Databases/
    PATH_KEYS = ("dictionary_path", "affix_path", "confusion_path", "rules_path", "frequency_path")

    def __init__(self, config_file: Optional[str] = None):
        """
        Initialize config manager.

        Args:
            config_file: Explicit config file; discovered when None
        """
        self.logger = get_logger()
        self.config_file = config_file or self._discover()
        self.settings: Dict[str, Any] = self._default_settings()
        self.logger.debug(f"Config manager initialized with file: {self.config_file}")

    def _default_settings(self) -> Dict[str, Any]:
        """Defaults with data paths resolved into the Databases folder."""
        settings = self.DEFAULT_SETTINGS.copy()
        for key in self.PATH_KEYS:
            settings[key] = data_loader.get_database_path(settings[key])
        # The frequency sidecar is optional
        if not os.path.exists(settings["frequency_path"]):
            settings["frequency_path"] = None
        return settings

    def _discover(self) -> Optional[str]:
        """Look for sinspell.toml in the working directory, then the project root."""
        for directory in (os.getcwd(), data_loader.project_root):
            candidate = os.path.join(directory, CONFIG_FILE_NAME)
            if os.path.exists(candidate):
                return candidate
        return None

    def load(self) -> Dict[str, Any]:
        """
        Load settings from the config file, merged over defaults.

        Returns:
            Dictionary of settings

        Raises:
            ConfigError: If an explicit file is unreadable or not valid TOML
        """
        self.settings = self._default_settings()
        if not self.config_file:
            self.logger.debug("No config file found, using defaults")
            return self.settings.copy()

        try:
            with open(self.config_file, "rb") as f:
                loaded = tomllib.load(f)
        except (OSError, tomllib.TOMLDecodeError) as e:
            raise ConfigError(f"cannot read config {self.config_file}: {e}") from e

        base_dir = os.path.dirname(os.path.abspath(self.config_file))
        for key, value in loaded.items():
            if key not in self.DEFAULT_SETTINGS:
                self.logger.warning(f"Unknown config key '{key}' in {self.config_file}")
                continue
            if key in self.PATH_KEYS and value:
                value = os.path.join(base_dir, value)
            self.settings[key] = value

        self.logger.info(f"Config loaded from {self.config_file}")
        self.logger.debug(f"Loaded settings: {self.settings}")
        return self.settings.copy()

    def get(self, key: str, default=None) -> Any:
        """Get a setting value."""
        return self.settings.get(key, default)

    def set(self, key: str, value: Any) -> None:
        """Set a setting value (command-line overrides land here)."""
        if value is None:
            return
        self.settings[key] = value
        self.logger.debug(f"Setting updated: {key} = {value}")

    def get_all(self) -> Dict[str, Any]:
        """Get all settings."""
        return self.settings.copy()

    def reset_to_defaults(self) -> None:
        """Reset all settings to default values."""
        self.settings = self._default_settings()

    def build(self) -> Config:
        """
        Produce a validated Config from the current settings.

        Raises:
            ConfigError: If a referenced file is missing or a value is invalid
        """
        try:
            max_suggestions = int(self.settings["max_suggestions"])
        except (TypeError, ValueError) as e:
            raise ConfigError(f"max_suggestions must be an integer: {self.settings['max_suggestions']!r}") from e
        if max_suggestions < 1:
            raise ConfigError("max_suggestions must be at least 1")

        config = Config(
            dictionary_path=self.settings["dictionary_path"],
            affix_path=self.settings["affix_path"],
            confusion_path=self.settings["confusion_path"],
            rules_path=self.settings["rules_path"],
            frequency_path=self.settings.get("frequency_path"),
            max_suggestions=max_suggestions,
            log_level=str(self.settings.get("log_level", "INFO")).upper(),
            source=self.config_file,
        )
        self.validate(config)
        return config

    def validate(self, config: Config) -> None:
        """Check that every referenced file exists."""
        missing: List[str] = [
            f"{key}={path}" for key, path in config.required_paths().items()
            if not path or not os.path.isfile(path)
        ]
        if missing:
            raise ConfigError("missing files: " + ", ".join(missing), missing)
