"""Tests for spikyball.bounds."""

import math

import pandas as pd
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spikyball.bounds import (
    CSV_COLUMNS,
    bounds_frame,
    bounds_row,
    capbody_bound,
    dumer_bound,
    f_ratio,
    g_ratio,
    omega,
    omega_closed_form,
    omega_lower_bound,
    ratio_curves,
    spiky_bound,
    theorem_bound,
    threshold_scan,
    write_bounds_csv,
)
from spikyball.constructions import IlluminationMethod
from spikyball.exceptions import GeometryError


class TestOmega:
    def test_circle(self):
        assert omega(1, math.pi / 4) == pytest.approx(0.25, rel=1e-12)

    def test_two_sphere(self):
        assert omega(2, math.pi / 6) == pytest.approx(
            (1 - math.cos(math.pi / 6)) / 2, rel=1e-10
        )
        assert omega(2, math.pi / 6) == pytest.approx(0.066987, abs=1e-6)

    def test_three_sphere(self):
        alpha = math.pi / 6
        expected = (alpha - math.sin(alpha) * math.cos(alpha)) / math.pi
        assert omega(3, alpha) == pytest.approx(expected, rel=1e-10)
        assert omega(3, alpha) == pytest.approx(0.028834, abs=1e-6)

    def test_hemisphere(self):
        for m in (1, 2, 5, 40):
            assert omega(m, math.pi / 2) == pytest.approx(0.5, rel=1e-10)

    @settings(max_examples=100, deadline=None)
    @given(
        st.integers(min_value=1, max_value=80),
        st.floats(min_value=0.05, max_value=math.pi / 2),
    )
    def test_closed_form_agrees(self, m, alpha):
        assert omega_closed_form(m, alpha) == pytest.approx(omega(m, alpha), rel=1e-8)

    def test_rejects_arguments(self):
        with pytest.raises(GeometryError):
            omega(0, 0.5)
        with pytest.raises(GeometryError):
            omega(2, 2.0)


class TestLowerBound:
    def test_value(self):
        assert omega_lower_bound(1, math.pi / 4) == pytest.approx(0.19947, abs=1e-5)

    def test_pi6_identity(self):
        for d in range(3, 30):
            expected = 1.0 / (2 ** (d - 2) * math.sqrt(2 * math.pi * (d - 1)))
            assert omega_lower_bound(d - 2, math.pi / 6) == pytest.approx(expected)

    @pytest.mark.parametrize("alpha", [math.pi / 6, math.pi / 4, 1.0])
    def test_strictly_below_exact(self, alpha):
        for m in range(1, 61):
            assert omega_lower_bound(m, alpha) < omega(m, alpha)


class TestEstimates:
    def test_dumer_three_sphere(self):
        assert dumer_bound(3, math.pi / 6) == pytest.approx(596.9, rel=1e-3)

    def test_lower_bound_variant_is_larger(self):
        for m in range(3, 20):
            assert dumer_bound(m, math.pi / 4, "lower_bound") > dumer_bound(
                m, math.pi / 4, "exact"
            )

    def test_dumer_needs_m3(self):
        with pytest.raises(GeometryError):
            dumer_bound(2, math.pi / 6)

    def test_spiky_five(self):
        comparator = 2**6 * 5**1.5 * math.log(5)
        assert spiky_bound(5) == pytest.approx(693.3, rel=1e-3)
        assert comparator == pytest.approx(1151.6, rel=1e-3)
        assert f_ratio(5) == pytest.approx(0.602, abs=1e-3)

    def test_capbody_twenty(self):
        assert capbody_bound(20) == pytest.approx(8.63e5, rel=2e-3)
        assert g_ratio(20) == pytest.approx(0.823, abs=1e-3)
        assert g_ratio(19) > 1

    def test_theorem_bounds(self):
        assert theorem_bound(IlluminationMethod.TWO_D, 2) == 3
        assert theorem_bound("3d", 3) == 5
        assert theorem_bound("unconditional", 7) == 28
        assert theorem_bound("general", 4, cover_size=20) == 23
        assert theorem_bound("symmetric", 4, cover_size=8) == 10
        with pytest.raises(GeometryError):
            theorem_bound("general", 4)
        with pytest.raises(GeometryError):
            theorem_bound("magic", 4)


class TestThresholds:
    def test_capbody(self):
        assert threshold_scan("capbody") == 20

    def test_spiky(self):
        assert threshold_scan("spiky") == 5

    def test_unknown_kind(self):
        with pytest.raises(GeometryError):
            threshold_scan("cube")

    def test_ratios_below_one_after_threshold(self):
        assert all(g_ratio(d) < 1 for d in range(20, 221))
        assert all(f_ratio(d) < 1 for d in range(5, 206))

    def test_capbody_ratio_decreasing(self):
        values = [g_ratio(d) for d in range(20, 221)]
        assert all(b < a for a, b in zip(values, values[1:]))

    def test_spiky_ratio_rises_then_falls(self):
        values = [f_ratio(d) for d in range(5, 206)]
        peak = values.index(max(values))
        assert 5 <= peak + 5 <= 20
        assert values[1] > values[0]
        tail = values[peak:]
        assert all(b < a for a, b in zip(tail, tail[1:]))

    def test_short_window(self):
        # On [5, 10] the spiky ratio is still rising, so only its peak is checked
        assert threshold_scan("spiky", window=5) == 5
        assert threshold_scan("capbody", window=5) == 20


class TestTables:
    def test_row(self):
        row = bounds_row(20)
        assert row.d == 20
        assert row.two_pow_d == 2.0**20
        assert row.g_ratio == pytest.approx(g_ratio(20))
        assert row.omega_pi4 == pytest.approx(omega(18, math.pi / 4))

    def test_row_needs_dimension_five(self):
        with pytest.raises(GeometryError):
            bounds_row(4)

    def test_frame_columns(self):
        frame = bounds_frame(ratio_curves(range(5, 10)))
        assert list(frame.columns) == CSV_COLUMNS
        assert list(frame["d"]) == [5, 6, 7, 8, 9]

    def test_write_csv(self, tmp_path):
        path = write_bounds_csv(ratio_curves(range(5, 26)), tmp_path / "out" / "b.csv")
        frame = pd.read_csv(path)
        assert list(frame.columns) == CSV_COLUMNS
        assert len(frame) == 21
        row = frame[frame["d"] == 20].iloc[0]
        assert row["g_ratio"] == pytest.approx(g_ratio(20), rel=1e-15)
