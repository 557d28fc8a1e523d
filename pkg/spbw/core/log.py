"""
Logging for the engine and the spbw_run CLI.
Logging do motor e da CLI spbw_run.

Stream output goes to stderr: stdout belongs to the report.
A saida de stream vai para stderr: stdout pertence ao relatorio.
"""

import logging
import sys
from pathlib import Path
from typing import Optional, Union


LOG_FORMAT = "%(asctime)s | %(levelname)-8s | %(name)s | %(message)s"
DATE_FORMAT = "%Y-%m-%d %H:%M:%S"

# engine modules log under "spbw", the CLI under "spbw_run"
ROOT_LOGGERS = ("spbw", "spbw_run")

_session_handler: Optional[logging.FileHandler] = None


def _level(level: Union[int, str, None]) -> int:
    if level is None:
        return logging.INFO
    if isinstance(level, str):
        numeric = logging.getLevelName(level.upper())
        return numeric if isinstance(numeric, int) else logging.INFO
    return level


def _formatter() -> logging.Formatter:
    return logging.Formatter(fmt=LOG_FORMAT, datefmt=DATE_FORMAT)


def setup_file_logging(log_path: Path, level: Union[int, str, None] = None) -> None:
    """
    Mirrors every engine and CLI record into the run's session.log.
    Espelha os registros do motor e da CLI no session.log da execucao.

    Args:
        log_path: usually runs/<id>/logs/session.log
        level: SPBW_LOG_LEVEL value; INFO when unset.
    """
    global _session_handler

    threshold = _level(level)
    log_path.parent.mkdir(parents=True, exist_ok=True)

    _session_handler = logging.FileHandler(log_path, encoding="utf-8")
    _session_handler.setLevel(threshold)
    _session_handler.setFormatter(_formatter())

    for name in ROOT_LOGGERS:
        root = logging.getLogger(name)
        root.addHandler(_session_handler)
        if root.level == logging.NOTSET or root.level > threshold:
            root.setLevel(threshold)


def close_file_logging() -> None:
    """Detaches and closes session.log."""
    global _session_handler

    if _session_handler is None:
        return
    for name in ROOT_LOGGERS:
        logging.getLogger(name).removeHandler(_session_handler)
    _session_handler.close()
    _session_handler = None


def set_level(level: Union[int, str]) -> None:
    """Sets the level of the engine loggers and their stream handlers."""
    threshold = _level(level)
    for name in ROOT_LOGGERS:
        root = logging.getLogger(name)
        root.setLevel(threshold)
        for handler in root.handlers:
            if not isinstance(handler, logging.FileHandler):
                handler.setLevel(threshold)


def get_logger(name: str, level: Union[int, str, None] = None) -> logging.Logger:
    """
    Logger with a stderr handler in LOG_FORMAT, attached once.
    Logger com handler em stderr no formato LOG_FORMAT, anexado uma vez.

    Engine modules use logging.getLogger(__name__) and propagate to "spbw".
    """
    logger = logging.getLogger(name)

    if not logger.handlers:
        threshold = _level(level)
        logger.setLevel(threshold)

        stream = logging.StreamHandler(sys.stderr)
        stream.setLevel(threshold)
        stream.setFormatter(_formatter())
        logger.addHandler(stream)

    return logger
