"""
Toolkit Constants
Contains constant values used throughout SinSpell.
"""

# Tool identity
TOOL_NAME = "sinspell"
TOOL_VERSION = "0.3.0"

# Sinhala code points
SINHALA_START = 0x0D80
SINHALA_END = 0x0DFF
VIRAMA = "්"           # hal kirima
ZWJ = "\u200d"
ZWNJ = "\u200c"

# Morphology
NEGATIVE_INFIX = "නො"
NEEDS_AFFIX_FLAG = "!"
LEXC_TERMINATOR = "#"
LEXC_ROOT = "Root"
FLAG_ALPHABET = "ABCDEFGHIJKLMNOPQRSTUVWXYZ"

# Suggestion weights
DEFAULT_CONFUSION_WEIGHT = 0.5
SPLIT_COST = 0.75
EDIT_COST = 1.0
REPLACEMENT_COST = 0.6
EDIT2_ADMIT_THRESHOLD = 1.25
DEFAULT_MAX_SUGGESTIONS = 10
MIN_CONFUSION_WEIGHT = 0.1
BOUND_SUFFIXES = ("වල", "වලට", "වලින්")

# Error mining
SENTENCE_TERMINATORS = (".", "?", "!", "।", "\n")
ANCHOR_MIN_GRAPHEMES = 3
UNRELATED_MIN_DISTANCE = 3
UNRELATED_RATIO = 0.4
HYPHENS = ("-", "\u2010", "\u2011")

# Exit codes
EXIT_CLEAN = 0
EXIT_FINDINGS = 1
EXIT_ERROR = 2

# Paths (relative to the project root)
DATABASE_DIR = "Databases"
LOGS_DIR = "logs"
CONFIG_FILE_NAME = "sinspell.toml"
RECOVERY_SUFFIX = ".recovery"

# Shipped data files (relative to Databases/)
DICTIONARY_FILE = "Dictionaries/si_LK.dic"
AFFIX_FILE = "Dictionaries/si_LK.aff"
CONFUSION_FILE = "Correction/confusions.tsv"
RULES_FILE = "Correction/autofix_rules.tsv"
FREQUENCY_FILE = "Correction/frequencies.tsv"
