"""Logging configuration for the spikyball package.

Records go to stderr; stdout is reserved for command output.
"""

import logging
import sys
from pathlib import Path
from typing import Dict, Iterable, Optional, Union

ROOT_LOGGER = "spikyball"

CONSOLE_FORMAT = "%(levelname)-8s %(name)-12s: %(message)s"
FILE_FORMAT = "%(asctime)s %(levelname)-8s %(name)-12s: %(message)s"
DATE_FORMAT = "%Y-%m-%d %H:%M:%S"


def _clear_handlers(logger: logging.Logger) -> None:
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
        handler.close()


def setup_logging(
    level: Optional[str] = None,
    log_file: Optional[Union[str, Path]] = None,
    module_levels: Optional[Dict[str, str]] = None,
    disabled: Union[bool, Iterable[str]] = False,
) -> logging.Logger:
    """Configure the ``spikyball`` logger tree.

    Args:
        level: Level name for the package. Defaults to SPIKYBALL_LOG_LEVEL.
        log_file: Optional file that receives a timestamped copy of every record
        module_levels: Per-module overrides, e.g. {"spikyball.coverings": "DEBUG"}
        disabled: True silences the package; a list of module names silences
            only those, e.g. ["spikyball.piercing.caps"]

    Safe to call repeatedly: existing handlers are replaced.
    """
    package_logger = logging.getLogger(ROOT_LOGGER)

    if disabled is True:
        package_logger.disabled = True
        return package_logger
    if disabled:
        for module in disabled:
            logging.getLogger(module).disabled = True

    if level is None:
        from spikyball.utils.config import get_settings

        level = get_settings().log_level

    package_logger.disabled = False
    package_logger.setLevel(level.upper())
    _clear_handlers(package_logger)

    console = logging.StreamHandler(sys.stderr)
    console.setFormatter(logging.Formatter(CONSOLE_FORMAT))
    package_logger.addHandler(console)

    if log_file:
        log_path = Path(log_file)
        log_path.parent.mkdir(parents=True, exist_ok=True)
        file_handler = logging.FileHandler(log_path)
        file_handler.setFormatter(logging.Formatter(FILE_FORMAT, datefmt=DATE_FORMAT))
        package_logger.addHandler(file_handler)

    for module, module_level in (module_levels or {}).items():
        logging.getLogger(module).setLevel(module_level.upper())

    package_logger.propagate = False
    return package_logger


def set_module_logging(module_name: str, enabled: bool) -> None:
    """Switch one logger, e.g. "spikyball.coverings.greedy", on or off."""
    logging.getLogger(module_name).disabled = not enabled


def disable_all_logging():
    set_module_logging(ROOT_LOGGER, False)


def enable_all_logging():
    set_module_logging(ROOT_LOGGER, True)


def disable_module_logging(module_name: str):
    set_module_logging(module_name, False)


def enable_module_logging(module_name: str):
    set_module_logging(module_name, True)
