"""
Message loader utility for trlearn
Uses importlib.resources to load longer text templates from the messages folder
"""

import logging
from importlib import resources

logger = logging.getLogger(__name__)


class MessageLoader:
    """Utility class for loading message templates"""

    def __init__(self, package: str = "trlearn.messages"):
        """Initialize the message loader"""
        self.package = package
        self._cache = {}

    def _load_template(self, filename: str) -> str:
        """Load a message template from file using importlib.resources"""
        if filename in self._cache:
            return self._cache[filename]

        try:
            content = (
                resources.files(self.package)
                .joinpath(filename)
                .read_text(encoding="utf-8")
                .strip()
            )
            self._cache[filename] = content
            return content
        except FileNotFoundError:
            logger.error(f"Message template file not found: {filename}")
            return f"[Template {filename} not found]"
        except Exception as e:
            logger.error(f"Error loading message template {filename}: {e}")
            return f"[Error loading template {filename}]"

    def get_repl_welcome(
        self, rule_count: int, rules_path: str, direction: str, mode: str, trace: bool
    ) -> str:
        """Get formatted REPL banner"""
        template = self._load_template("repl_welcome.txt")
        return template.format(
            rule_count=rule_count,
            rules_path=rules_path,
            direction=direction,
            mode=mode,
            trace="on" if trace else "off",
        )

    def get_repl_help(self) -> str:
        return self._load_template("repl_help.txt")

    def get_epilog(self) -> str:
        """Get command line usage examples"""
        return self._load_template("epilog.txt")


# Create a global instance for easy access
message_loader = MessageLoader()
