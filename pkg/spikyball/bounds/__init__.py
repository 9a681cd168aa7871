"""Cap fractions, covering estimates and illumination bound curves."""

from .curves import (
    CSV_COLUMNS,
    BoundsRow,
    bounds_frame,
    bounds_row,
    f_ratio,
    g_ratio,
    ratio_curves,
    threshold_scan,
    write_bounds_csv,
)
from .estimates import (
    OmegaVariant,
    capbody_bound,
    dumer_bound,
    spiky_bound,
    theorem_bound,
)
from .omega import omega, omega_closed_form, omega_lower_bound

__all__ = [
    "omega",
    "omega_closed_form",
    "omega_lower_bound",
    "OmegaVariant",
    "dumer_bound",
    "spiky_bound",
    "capbody_bound",
    "theorem_bound",
    "BoundsRow",
    "CSV_COLUMNS",
    "bounds_row",
    "ratio_curves",
    "bounds_frame",
    "write_bounds_csv",
    "f_ratio",
    "g_ratio",
    "threshold_scan",
]
