"""Logging utilities for polyrep."""
import logging
import sys
from pathlib import Path

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
DATE_FORMAT = '%Y-%m-%d %H:%M:%S'


def setup_logger(name: str = "polyrep", level: int = logging.INFO) -> logging.Logger:
    """
    Set up and configure a logger.

    Log records go to stderr so that documents written to stdout stay clean.

    Args:
        name: Name of the logger.
        level: Logging level.

    Returns:
        Configured logger instance.
    """
    logger = logging.getLogger(name)
    logger.setLevel(level)

    # Clear existing handlers
    if logger.handlers:
        logger.handlers.clear()

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(level)
    console_handler.setFormatter(logging.Formatter(LOG_FORMAT, datefmt=DATE_FORMAT))
    logger.addHandler(console_handler)

    return logger


def set_level(logger: logging.Logger, level: int) -> None:
    """Change the level of a logger and of its console handlers."""
    logger.setLevel(level)
    for handler in logger.handlers:
        if not isinstance(handler, logging.FileHandler):
            handler.setLevel(level)


def add_file_handler(
    logger: logging.Logger,
    log_file: str,
    level: int = logging.DEBUG
) -> logging.Logger:
    """
    Add a file handler to an existing logger.

    Args:
        logger: Logger instance.
        log_file: Path to the log file.
        level: Logging level for the file handler.

    Returns:
        Logger with file handler added.
    """
    log_path = Path(log_file)
    log_path.parent.mkdir(parents=True, exist_ok=True)

    file_handler = logging.FileHandler(log_file)
    file_handler.setLevel(level)
    file_handler.setFormatter(logging.Formatter(LOG_FORMAT, datefmt=DATE_FORMAT))

    logger.addHandler(file_handler)
    # console handlers keep their own level
    if logger.level > level:
        logger.setLevel(level)

    return logger
