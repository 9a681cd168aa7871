"""Persistence of instances, coverings, direction sets and bound tables."""

from .codecs import CodecManager, plugin_manager
from .types import BaseCodec, BasePlugin, PluginManager, read_json, write_json


def get_codec(name: str) -> BaseCodec:
    """Codec instance registered under ``name``.

    Raises:
        ValueError: if no codec has that name.
    """
    codec = plugin_manager.get_plugin(name)
    if codec is None:
        raise ValueError(f"Codec '{name}' not found")
    return codec


__all__ = [
    "BasePlugin",
    "BaseCodec",
    "PluginManager",
    "CodecManager",
    "plugin_manager",
    "get_codec",
    "read_json",
    "write_json",
]
