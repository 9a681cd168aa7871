"""CSV codec for the bound tables."""

from pathlib import Path
from typing import List

import pandas as pd

from spikyball.bounds import CSV_COLUMNS, BoundsRow, write_bounds_csv
from spikyball.exceptions import GeometryError

from ..types import BasePlugin, PathLike


class BoundsCSVCodec(BasePlugin):
    """Bound table rows, one dimension per line."""

    name = "bounds_csv"
    supported_extensions = [".csv"]

    def _check_extension(self, path: Path) -> None:
        if path.suffix.lower() not in self.supported_extensions:
            raise GeometryError(f"Unsupported file extension: {path.suffix}")

    def load(self, file_path: PathLike, **kwargs) -> pd.DataFrame:
        """Load a bound table, checking its columns."""
        path = Path(file_path)
        if not path.exists():
            raise FileNotFoundError(f"File not found: {path}")
        self._check_extension(path)
        try:
            frame = pd.read_csv(path, **kwargs)
        except Exception as e:
            raise GeometryError(f"Error loading bound table: {e}")
        if list(frame.columns) != CSV_COLUMNS:
            raise GeometryError(
                f"Bound table columns {list(frame.columns)} differ from {CSV_COLUMNS}"
            )
        if not frame["d"].is_monotonic_increasing:
            raise GeometryError("Bound table dimensions are not increasing")
        return frame

    def dump(self, obj: List[BoundsRow], file_path: PathLike) -> Path:
        path = Path(file_path)
        self._check_extension(path)
        return write_bounds_csv(obj, path)
