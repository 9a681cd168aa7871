"""Storage codecs."""

from ..types import PluginManager

from .csv_codecs import *
from .json_codecs import *


class CodecManager(PluginManager):
    """Manager for storage codec plugins."""

    def __init__(self):
        """Initialize codec manager."""
        super().__init__()


plugin_manager = CodecManager()
__all__ = ["CodecManager", "plugin_manager"]
for plugin in plugin_manager._plugin_registry:
    __all__.append(plugin.__name__)
    globals()[plugin.__name__] = plugin
