import logging
import sys
from typing import Dict

_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


class Logger:
    """Stderr logger shared by the library and the CLI.

    stdout is reserved for reports, so nothing here ever writes to it.
    """

    LEVELS: Dict[str, int] = {
        "debug": logging.DEBUG,
        "info": logging.INFO,
        "warning": logging.WARNING,
        "error": logging.ERROR,
    }

    def __init__(self, name: str, level: str = "warning"):
        self._logger = logging.getLogger(name)

        root = logging.getLogger("direction_space")
        if not root.handlers:
            handler = logging.StreamHandler(sys.stderr)
            handler.setFormatter(logging.Formatter(_FORMAT))
            root.addHandler(handler)
            root.setLevel(self.LEVELS[level])

    @property
    def name(self) -> str:
        return self._logger.name

    def set_level(self, level: str):
        assert level in self.LEVELS, f"level must be one of {list(self.LEVELS)}, got {level}"
        logging.getLogger("direction_space").setLevel(self.LEVELS[level])

    def log(self, message: str, level: str = "info"):
        assert level in self.LEVELS, f"level must be one of {list(self.LEVELS)}, got {level}"
        self._logger.log(self.LEVELS[level], message)

    def debug(self, message: str):
        self.log(message, level="debug")

    def info(self, message: str):
        self.log(message, level="info")

    def warning(self, message: str):
        self.log(message, level="warning")
