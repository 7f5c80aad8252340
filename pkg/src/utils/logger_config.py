"""
Logging for the amoeba toolkit.

All module loggers are children of ``amoeba`` (``amoeba.roots``,
``amoeba.dichotomy``, ...). Handlers are attached to that root only:
stderr always, plus a file when ``AMOEBA_LOG_FILE`` is set. stdout is
left to command output.
"""

import logging
import sys
import time
from pathlib import Path
from typing import Dict, Optional

ROOT_LOGGER = "amoeba"
CONSOLE_FORMAT = "%(levelname)s: %(message)s"
FILE_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

_loggers: Dict[str, logging.Logger] = {}


class ColoredFormatter(logging.Formatter):
    """Level names in ANSI colours when stderr is a terminal."""

    LEVEL_COLORS = {
        logging.DEBUG: "\033[36m",
        logging.INFO: "\033[32m",
        logging.WARNING: "\033[33m",
        logging.ERROR: "\033[31m",
        logging.CRITICAL: "\033[41m",
    }
    RESET = "\033[0m"

    def format(self, record: logging.LogRecord) -> str:
        tinted = logging.makeLogRecord(record.__dict__)
        tinted.levelname = f"{self.LEVEL_COLORS.get(record.levelno, '')}{record.levelname}{self.RESET}"
        return super().format(tinted)


def _add_file_handler(logger: logging.Logger, log_file: Path, level: int) -> None:
    """Attach a file handler once per path."""
    target = str(Path(log_file).resolve())
    for handler in logger.handlers:
        if isinstance(handler, logging.FileHandler) and handler.baseFilename == target:
            return
    Path(log_file).parent.mkdir(parents=True, exist_ok=True)
    file_handler = logging.FileHandler(log_file, encoding="utf-8")
    file_handler.setLevel(level)
    file_handler.setFormatter(logging.Formatter(FILE_FORMAT, datefmt="%Y-%m-%d %H:%M:%S"))
    logger.addHandler(file_handler)


def setup_logger(
    name: str = ROOT_LOGGER,
    level: int = logging.INFO,
    log_file: Optional[Path] = None,
    use_colors: bool = True,
) -> logging.Logger:
    """
    Configure and cache a logger.

    A child name (``amoeba.<module>``) makes sure the root is configured
    and returns the child untouched, so its records propagate to the
    root handlers. Calling again for the root with a ``log_file`` adds
    that file to an already configured root.

    Args:
        name: Logger name
        level: Level for the root logger and its handlers
        log_file: Optional log file path
        use_colors: Colour level names on a terminal

    Returns:
        The cached logger
    """
    if name in _loggers:
        logger = _loggers[name]
        if log_file is not None and name == ROOT_LOGGER:
            _add_file_handler(logger, log_file, logger.level)
        return logger

    logger = logging.getLogger(name)

    if name.startswith(ROOT_LOGGER + "."):
        setup_logger(ROOT_LOGGER, level, log_file, use_colors)
        _loggers[name] = logger
        return logger

    logger.setLevel(level)
    if not logger.handlers:
        console = logging.StreamHandler(sys.stderr)
        console.setLevel(level)
        if use_colors and sys.stderr.isatty():
            console.setFormatter(ColoredFormatter(CONSOLE_FORMAT))
        else:
            console.setFormatter(logging.Formatter(CONSOLE_FORMAT))
        logger.addHandler(console)
        if log_file is not None:
            _add_file_handler(logger, log_file, level)

    _loggers[name] = logger
    return logger


def get_logger(name: str = ROOT_LOGGER) -> logging.Logger:
    """Cached logger for ``name``, configured on first use."""
    return _loggers.get(name) or setup_logger(name)


def set_level(level: str) -> None:
    """Change the level of the package root logger and its handlers."""
    numeric = getattr(logging, level.upper(), logging.INFO)
    root = get_logger(ROOT_LOGGER)
    root.setLevel(numeric)
    for handler in root.handlers:
        handler.setLevel(numeric)


class ProcessingLogger:
    """
    Times one phase of a computation.

    Logs ``Completed: <phase> (1.23s)`` at info level, or ``Failed: ...``
    at error level when the block raises (the exception propagates).
    ``elapsed`` stays readable after the block for reports.
    """

    def __init__(self, operation: str, logger: Optional[logging.Logger] = None):
        self.operation = operation
        self.logger = logger or get_logger()
        self.start_time: Optional[float] = None
        self.elapsed: float = 0.0

    def __enter__(self) -> "ProcessingLogger":
        self.start_time = time.perf_counter()
        self.logger.debug(f"Starting: {self.operation}")
        return self

    def __exit__(self, exc_type, exc_val, exc_tb) -> bool:
        self.elapsed = time.perf_counter() - self.start_time
        if exc_type is not None:
            self.logger.error(f"Failed: {self.operation} ({self.elapsed:.2f}s) - {exc_val}")
        else:
            self.logger.info(f"Completed: {self.operation} ({self.elapsed:.2f}s)")
        return False
