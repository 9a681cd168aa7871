"""Tests for spikyball.coverings."""

import math

import numpy as np
import numpy.testing as npt
import pytest

from spikyball.coverings import (
    CoveringSpec,
    CoverStatus,
    boundary_clearance,
    circle_points,
    fibonacci_sphere,
    greedy_cover,
    icosphere,
    known_cover,
    mesh_covering_radius,
    obtain_cover,
    rotate_cover_generic,
    verify_cover,
)
from spikyball.exceptions import GeometryError, RetryBudgetExceeded
from spikyball.geometry import SphericalCap, UnitVector


def cross_polytope(dim: int) -> np.ndarray:
    return np.vstack([np.eye(dim), -np.eye(dim)])


class TestCoveringSpec:
    def test_radius_range(self):
        with pytest.raises(GeometryError):
            CoveringSpec(1, 2.0, circle_points(4))

    def test_coordinate_count(self):
        with pytest.raises(GeometryError):
            CoveringSpec(2, 0.5, circle_points(4))

    def test_centers_must_be_unit(self):
        with pytest.raises(GeometryError):
            CoveringSpec(1, 0.5, [[2.0, 0.0]])

    def test_unverified_drops_status(self, circle_cover_pi4):
        assert circle_cover_pi4.unverified().status is CoverStatus.UNVERIFIED
        assert circle_cover_pi4.unverified().confidence is None

    def test_rotation_keeps_status(self, circle_cover_pi4):
        quarter = np.array([[0.0, -1.0], [1.0, 0.0]])
        rotated = circle_cover_pi4.rotated(quarter)
        assert rotated.status is CoverStatus.CERTIFIED
        npt.assert_allclose(rotated.centers[0], [0.0, 1.0], atol=1e-12)


class TestKnownCovers:
    def test_circle_quarter(self):
        spec = known_cover(1, math.pi / 4)
        assert spec.size == 4
        npt.assert_allclose(spec.centers, circle_points(4))
        assert spec.status is CoverStatus.UNVERIFIED
        result = verify_cover(spec)
        assert result.passed
        assert result.status is CoverStatus.CERTIFIED
        assert result.min_margin == pytest.approx(0.0, abs=1e-12)

    def test_circle_sixth(self, circle_cover_pi6):
        assert circle_cover_pi6.size == 6
        assert circle_cover_pi6.status is CoverStatus.CERTIFIED

    def test_no_closed_form_beyond_circle(self):
        assert known_cover(2, math.pi / 6) is None

    def test_rejects_radius(self):
        with pytest.raises(GeometryError):
            known_cover(1, 0.0)


class TestVerifyCover:
    def test_circle_gap_found(self):
        spec = CoveringSpec(1, math.pi / 4, circle_points(3))
        result = verify_cover(spec)
        assert not result.passed
        assert result.status is CoverStatus.UNVERIFIED
        assert result.min_margin < 0
        # The witness is the middle of a widest gap, far from every center.
        distances = np.arccos(np.clip(spec.centers @ result.witness, -1.0, 1.0))
        assert distances.min() > math.pi / 4
        assert "Status: FAILED" in result.summary

    def test_sphere_octahedron(self):
        # The octahedron vertices cover S^2 at radius arccos(1/sqrt(3)).
        radius = math.acos(1 / math.sqrt(3))
        assert verify_cover(CoveringSpec(2, radius + 0.02, cross_polytope(3))).passed
        failed = verify_cover(CoveringSpec(2, radius - 0.02, cross_polytope(3)))
        assert not failed.passed
        corner = np.full(3, 1 / math.sqrt(3))
        npt.assert_allclose(np.abs(failed.witness), corner, atol=0.02)

    def test_sampled_check(self):
        # The cross-polytope in E^4 has covering radius pi/3.
        spec = CoveringSpec(3, math.pi / 3 + 0.01, cross_polytope(4))
        result = verify_cover(spec, samples=100_000, rng_seed=3)
        assert result.passed
        assert result.status is CoverStatus.PROBABILISTIC
        assert result.spec.confidence == pytest.approx(0.999)
        assert result.details["uncovered_fraction_bound"] < 1e-4

    def test_sampled_check_finds_hole(self):
        spec = CoveringSpec(3, 1.0, cross_polytope(4))
        result = verify_cover(spec, samples=100_000, rng_seed=3)
        assert not result.passed
        assert result.spec.confidence is None


class TestGreedyCover:
    def test_circle(self):
        spec = greedy_cover(1, math.pi / 4)
        assert spec.size <= 5
        assert spec.status is CoverStatus.CERTIFIED

    def test_sphere_sixth(self, sphere_cover_pi6):
        assert sphere_cover_pi6.size <= 24
        assert sphere_cover_pi6.status is CoverStatus.CERTIFIED
        assert verify_cover(sphere_cover_pi6).passed

    def test_sphere_quarter(self, sphere_cover_pi4):
        assert sphere_cover_pi4.size <= 13
        assert sphere_cover_pi4.status is CoverStatus.CERTIFIED

    def test_three_sphere(self):
        spec = greedy_cover(3, math.pi / 3, rng_seed=1)
        assert spec.status is CoverStatus.PROBABILISTIC
        assert spec.confidence == pytest.approx(0.999)

    def test_seeded(self):
        first = greedy_cover(2, math.pi / 4, rng_seed=5)
        second = greedy_cover(2, math.pi / 4, rng_seed=5)
        npt.assert_array_equal(first.centers, second.centers)

    def test_rejects_bad_arguments(self):
        with pytest.raises(GeometryError):
            greedy_cover(0, math.pi / 4)
        with pytest.raises(GeometryError):
            greedy_cover(2, 0.0)

    def test_obtain_prefers_known(self):
        spec = obtain_cover(1, math.pi / 6)
        npt.assert_allclose(spec.centers, circle_points(6))


class TestMesh:
    def test_icosahedron(self):
        vertices, faces = icosphere(0)
        assert vertices.shape == (12, 3)
        assert faces.shape == (20, 3)

    def test_subdivision_counts(self):
        for level in range(3):
            vertices, faces = icosphere(level)
            assert faces.shape[0] == 20 * 4**level
            assert vertices.shape[0] == 10 * 4**level + 2
            npt.assert_allclose(np.linalg.norm(vertices, axis=1), 1.0)

    def test_covering_radius_shrinks(self):
        radii = [mesh_covering_radius(level) for level in range(4)]
        assert all(a > b for a, b in zip(radii, radii[1:]))
        # Circumradius of an icosahedron face seen from the center
        face = math.acos(math.sqrt((5 + 2 * math.sqrt(5)) / 15))
        assert radii[0] == pytest.approx(face)

    def test_negative_level(self):
        with pytest.raises(GeometryError):
            icosphere(-1)

    def test_fibonacci_points_are_unit(self):
        npt.assert_allclose(np.linalg.norm(fibonacci_sphere(500), axis=1), 1.0)

    def test_circle_points_offset(self):
        points = circle_points(2, math.pi / 2)
        npt.assert_allclose(points, [[0.0, 1.0], [0.0, -1.0]], atol=1e-12)


class TestRotation:
    def test_identity_without_constraints(self, circle_cover_pi4):
        spec = rotate_cover_generic(circle_cover_pi4, [])
        npt.assert_array_equal(spec.centers, circle_cover_pi4.centers)

    def test_center_on_boundary_is_moved(self, circle_cover_pi4, tol):
        # The cap boundary passes exactly through the center (1, 0).
        center = UnitVector([math.cos(math.pi / 4), math.sin(math.pi / 4)])
        cap = SphericalCap(center, math.pi / 4)
        assert boundary_clearance(circle_cover_pi4.centers, [cap]) < 1e-12
        spec = rotate_cover_generic(circle_cover_pi4, [cap], rng_seed=2)
        assert boundary_clearance(spec.centers, [cap]) >= tol.eps_geometry
        assert spec.status is CoverStatus.CERTIFIED
        assert verify_cover(spec).passed

    def test_accept_callback(self, circle_cover_pi4):
        with pytest.raises(RetryBudgetExceeded):
            rotate_cover_generic(
                circle_cover_pi4, [], max_attempts=5, accept=lambda s: False
            )

    def test_dimension_mismatch(self, circle_cover_pi4):
        cap = SphericalCap(UnitVector([0.0, 0.0, 1.0]), 0.3)
        with pytest.raises(GeometryError):
            rotate_cover_generic(circle_cover_pi4, [cap])
