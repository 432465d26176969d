"""
Configuration module for trlearn
"""

import logging
import os
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()

DIRECTIONS = ("l1l2", "l2l1")
MODES = ("first", "all")


def _env_flag(name: str, default: str = "0") -> bool:
    return os.getenv(name, default).strip().lower() in ("1", "true", "yes", "on")


class Config:
    """Configuration for learning and translation sessions"""

    # File locations
    CORPUS_PATH = os.getenv("TRL_CORPUS_PATH")
    RULES_PATH = os.getenv("TRL_RULES_PATH", "rules.trl")

    # Learning Configuration
    MAX_PASSES = int(os.getenv("TRL_MAX_PASSES", "10"))

    # Translation Configuration
    DIRECTION = os.getenv("TRL_DIRECTION", "l1l2")
    MODE = os.getenv("TRL_MODE", "first")
    TRACE = _env_flag("TRL_TRACE")

    # Logging Configuration
    LOG_LEVEL = os.getenv("LOG_LEVEL", "WARNING")

    def __init__(
        self,
        corpus_path: Optional[str] = None,
        rules_path: Optional[str] = None,
        direction: Optional[str] = None,
        mode: Optional[str] = None,
        max_passes: Optional[int] = None,
        trace: Optional[bool] = None,
    ):
        """Fill unset values from the environment defaults"""
        self.corpus_path = corpus_path or self.CORPUS_PATH
        self.rules_path = rules_path or self.RULES_PATH
        self.direction = direction or self.DIRECTION
        self.mode = mode or self.MODE
        self.max_passes = self.MAX_PASSES if max_passes is None else max_passes
        self.trace = self.TRACE if trace is None else trace

    def validate_config(self, require_corpus: bool = False, require_rules: bool = False):
        """Validate settings before any file is touched"""
        if self.direction not in DIRECTIONS:
            raise ValueError(
                f"direction must be one of {', '.join(DIRECTIONS)}, got '{self.direction}'"
            )
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {', '.join(MODES)}, got '{self.mode}'")
        if self.max_passes < 1:
            raise ValueError(f"max_passes must be at least 1, got {self.max_passes}")
        if require_corpus and not (self.corpus_path and Path(self.corpus_path).is_file()):
            raise ValueError(f"corpus file not found: {self.corpus_path}")
        if require_rules and not (self.rules_path and Path(self.rules_path).is_file()):
            raise ValueError(f"rules file not found: {self.rules_path}")

        return True

    @classmethod
    def setup_logging(cls, level: Optional[str] = None):
        """
        Set up logging on stderr so that stdout only carries command output
        """
        logging.basicConfig(
            format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
            level=getattr(logging, (level or cls.LOG_LEVEL).upper(), logging.WARNING),
            handlers=[logging.StreamHandler()],
        )

        return True
