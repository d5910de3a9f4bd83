"""
Logging utility for the claw-free spanning tree toolkit

Provides consistent logging across all modules. Records go to stderr so that
JSON documents printed on stdout by the CLI stay machine-readable.
"""

import logging
import sys
from pathlib import Path
from typing import Optional, Union

from src.utils.settings import LOG_LEVEL


def setup_logger(
    name: str,
    log_file: Optional[str] = None,
    level: Optional[Union[int, str]] = None
) -> logging.Logger:
    """
    Set up a logger with consistent formatting

    Args:
        name: Logger name (usually __name__)
        log_file: Optional file path to write logs
        level: Logging level (default: CLAWTREE_LOG_LEVEL)

    Returns:
        Configured logger instance
    """
    if level is None:
        level = getattr(logging, LOG_LEVEL.upper(), logging.INFO)
    elif isinstance(level, str):
        level = getattr(logging, level.upper(), logging.INFO)

    logger = logging.getLogger(name)
    logger.setLevel(level)

    # Prevent duplicate handlers
    if logger.handlers:
        return logger

    formatter = logging.Formatter(
        '%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        datefmt='%Y-%m-%d %H:%M:%S'
    )

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(level)
    console_handler.setFormatter(formatter)
    logger.addHandler(console_handler)

    if log_file:
        log_path = Path(log_file)
        log_path.parent.mkdir(parents=True, exist_ok=True)

        file_handler = logging.FileHandler(log_file)
        file_handler.setLevel(level)
        file_handler.setFormatter(formatter)
        logger.addHandler(file_handler)

    return logger


def set_level(level: Union[int, str]) -> None:
    """
    Change the level of every logger created by setup_logger

    Args:
        level: New logging level (name or number)
    """
    if isinstance(level, str):
        level = getattr(logging, level.upper(), logging.INFO)

    for logger in logging.Logger.manager.loggerDict.values():
        if isinstance(logger, logging.Logger) and logger.name.startswith(("src", "scripts")):
            logger.setLevel(level)
            for handler in logger.handlers:
                handler.setLevel(level)
