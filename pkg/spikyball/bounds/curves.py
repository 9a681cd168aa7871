"""Ratio curves of the illumination bounds and their dimension thresholds."""

import logging
import math
from dataclasses import asdict, dataclass
from functools import lru_cache
from pathlib import Path
from typing import Iterable, List, Union

import pandas as pd

from spikyball.exceptions import GeometryError

from .estimates import PI_4, PI_6, capbody_bound, dumer_bound, spiky_bound
from .omega import omega

logger = logging.getLogger(__name__)

# Smallest dimension where the covering estimate is defined (m = d - 2 >= 3)
MIN_DIMENSION = 5
SCAN_WINDOW = 200
CSV_COLUMNS = [
    "d",
    "omega_pi6",
    "omega_pi4",
    "dumer_pi6",
    "dumer_pi4",
    "spiky_bound",
    "capbody_bound",
    "f_ratio",
    "g_ratio",
]


@dataclass(frozen=True)
class BoundsRow:
    """One dimension of the bound tables (cap fractions use m = d - 2)."""

    d: int
    omega_pi6: float
    omega_pi4: float
    dumer_pi6: float
    dumer_pi4: float
    spiky_bound: float
    capbody_bound: float
    two_pow_d: float
    f_ratio: float
    g_ratio: float


def f_ratio(d: int) -> float:
    """spiky_bound(d) / (2^(d+1) d^(3/2) ln d)."""
    return spiky_bound(d) / (2.0 ** (d + 1) * d**1.5 * math.log(d))


def g_ratio(d: int) -> float:
    """capbody_bound(d) / 2^d."""
    return capbody_bound(d) / 2.0**d


RATIOS = {"spiky": f_ratio, "capbody": g_ratio}
# Ratios that increase before they decrease
PEAKED_RATIOS = frozenset({"spiky"})


def bounds_row(d: int) -> BoundsRow:
    if d < MIN_DIMENSION:
        raise GeometryError(f"Bounds are defined for d >= {MIN_DIMENSION}, got {d}")
    m = d - 2
    return BoundsRow(
        d=d,
        omega_pi6=omega(m, PI_6),
        omega_pi4=omega(m, PI_4),
        dumer_pi6=dumer_bound(m, PI_6, "exact"),
        dumer_pi4=dumer_bound(m, PI_4, "exact"),
        spiky_bound=spiky_bound(d),
        capbody_bound=capbody_bound(d),
        two_pow_d=2.0**d,
        f_ratio=f_ratio(d),
        g_ratio=g_ratio(d),
    )


def ratio_curves(d_range: Iterable[int]) -> List[BoundsRow]:
    """Bound table rows for every d in ``d_range``."""
    return [bounds_row(int(d)) for d in d_range]


def bounds_frame(rows: List[BoundsRow]) -> pd.DataFrame:
    frame = pd.DataFrame([asdict(row) for row in rows])
    return frame.reindex(columns=CSV_COLUMNS)


def write_bounds_csv(rows: List[BoundsRow], path: Union[str, Path]) -> Path:
    """Write the table with 17 significant digits."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    bounds_frame(rows).to_csv(
        path, index=False, float_format="%.17g", lineterminator="\n"
    )
    return path


def threshold_scan(kind: str, window: int = SCAN_WINDOW, d_max: int = 300) -> int:
    """Smallest d with ratio < 1 on all of [d, d + window], decreasing there.

    The capbody ratio must decrease strictly over the whole window. The spiky
    ratio first rises to a maximum near d = 14 and only then falls, so for it
    the strict decrease is checked from the peak of the window onward.

    Raises:
        GeometryError: unknown kind, or no threshold up to ``d_max``.
    """
    if kind not in RATIOS:
        raise GeometryError(f"Unknown bound kind {kind!r}; expected {sorted(RATIOS)}")
    ratio = lru_cache(maxsize=None)(RATIOS[kind])
    for d in range(MIN_DIMENSION, d_max + 1):
        span = [ratio(k) for k in range(d, d + window + 1)]
        if max(span) >= 1.0:
            continue
        start = span.index(max(span)) if kind in PEAKED_RATIOS else 0
        tail = span[start:]
        if all(b < a for a, b in zip(tail, tail[1:])):
            logger.info(f"{kind} threshold = {d}")
            return d
    raise GeometryError(f"No {kind} threshold found up to d = {d_max}")
