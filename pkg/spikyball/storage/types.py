import importlib
import inspect
import json
import pkgutil
from abc import ABC, abstractmethod
from pathlib import Path
from typing import Any, Dict, List, Optional, Type, Union

from spikyball.exceptions import GeometryError

PathLike = Union[str, Path]


def write_json(payload: Dict[str, Any], file_path: PathLike) -> Path:
    """Write ``payload`` deterministically: sorted keys, repr floats, final newline."""
    path = Path(file_path)
    path.parent.mkdir(parents=True, exist_ok=True)
    text = json.dumps(payload, sort_keys=True, indent=2, allow_nan=False)
    path.write_text(text + "\n", encoding="utf-8")
    return path


def read_json(file_path: PathLike) -> Dict[str, Any]:
    path = Path(file_path)
    if not path.exists():
        raise FileNotFoundError(f"File not found: {path}")
    try:
        payload = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise GeometryError(f"Malformed JSON in {path}: {e}")
    if not isinstance(payload, dict):
        raise GeometryError(f"Expected a JSON object in {path}")
    return payload


class BasePlugin(ABC):
    """Base class for all plugins of the storage layer."""

    name: str = ""

    @classmethod
    def get_plugin_type(cls) -> str:
        """Get the type of plugin (e.g., 'instancecodec')."""
        return cls.__name__.lower()


class BaseCodec(BasePlugin):
    """Reads and writes one kind of object.

    Subclasses convert between objects and JSON-compatible payloads; loading
    always rebuilds the object through its validating constructor.
    """

    supported_extensions: List[str] = [".json"]

    def check_extension(self, file_path: Path) -> None:
        if file_path.suffix.lower() not in self.supported_extensions:
            raise GeometryError(f"Unsupported file extension: {file_path.suffix}")

    @abstractmethod
    def to_payload(self, obj: Any) -> Dict[str, Any]:
        """Convert ``obj`` to a JSON-compatible dictionary."""

    @abstractmethod
    def from_payload(self, payload: Dict[str, Any], **kwargs) -> Any:
        """Rebuild and re-validate an object from its payload."""

    def load(self, file_path: PathLike, **kwargs) -> Any:
        """Load and re-validate an object.

        Raises:
            FileNotFoundError: missing file.
            GeometryError: unsupported extension, malformed payload or a
                violated invariant.
        """
        path = Path(file_path)
        if not path.exists():
            raise FileNotFoundError(f"File not found: {path}")
        self.check_extension(path)
        payload = read_json(path)
        try:
            return self.from_payload(payload, **kwargs)
        except GeometryError:
            raise
        except (KeyError, TypeError, ValueError) as e:
            raise GeometryError(f"Malformed {self.name} file {path}: {e!r}")

    def dump(self, obj: Any, file_path: PathLike) -> Path:
        path = Path(file_path)
        self.check_extension(path)
        return write_json(self.to_payload(obj), path)


class PluginManager(ABC):
    """Base class for plugin management."""

    def __init__(self):
        """Initialize plugin manager."""
        self.plugins: Dict[str, Type[BasePlugin]] = {}
        self._plugin_registry: List[Type[BasePlugin]] = []
        self._register_builtin_plugins()

    def register_plugin(self, plugin_class: Type[BasePlugin]) -> None:
        """Register a plugin class."""
        if not plugin_class.name:
            raise ValueError(f"Plugin {plugin_class.__name__} must have a name")
        if plugin_class.name in self.plugins:
            raise ValueError(f"Plugin '{plugin_class.name}' already exists")
        self.plugins[plugin_class.name] = plugin_class

    def _register_builtin_plugins(self) -> None:
        """Discover and register all plugins in the manager's package."""
        current_module = self.__class__.__module__
        package = importlib.import_module(current_module)
        package_path = getattr(package, "__path__", [])

        for _, module_name, _ in pkgutil.iter_modules(package_path):
            module = importlib.import_module(f"{current_module}.{module_name}")
            for _, obj in inspect.getmembers(module, inspect.isclass):
                if (
                    issubclass(obj, BasePlugin)
                    and not inspect.isabstract(obj)
                    and obj.name
                    # Only register plugins defined in this module
                    and obj.__module__ == module.__name__
                ):
                    self.register_plugin(obj)
                    self._plugin_registry.append(obj)

    def get_plugin(self, plugin_name: str) -> Optional[BasePlugin]:
        """Get plugin instance by name."""
        plugin_class = self.plugins.get(plugin_name)
        if plugin_class:
            return plugin_class()
        return None

    def list_plugins(self) -> List[str]:
        """List all registered plugin names."""
        return sorted(self.plugins)
