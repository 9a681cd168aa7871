"""Shared utilities."""

from .config import Settings, default_tolerance, get_settings
from .logging import (
    disable_all_logging,
    disable_module_logging,
    enable_all_logging,
    enable_module_logging,
    set_module_logging,
    setup_logging,
)

__all__ = [
    "Settings",
    "get_settings",
    "default_tolerance",
    "setup_logging",
    "set_module_logging",
    "disable_all_logging",
    "enable_all_logging",
    "disable_module_logging",
    "enable_module_logging",
]
