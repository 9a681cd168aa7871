"""Tests for spikyball.piercing: arcs, caps, balls, stereographic reduction
and the set cover search underneath."""

import itertools
import math

import numpy as np
import numpy.testing as npt
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spikyball.coverings import CoverStatus, fibonacci_sphere, uniform_sphere
from spikyball.exceptions import ConstructionError, GeometryError
from spikyball.geometry import (
    EuclideanBall,
    SphericalCap,
    UnitVector,
    angular_distance,
    caps_intersect,
)
from spikyball.model import two_illuminable, vertex_caps
from spikyball.piercing import (
    boundary_intersections,
    cap_margins,
    certify_cap_piercing,
    exact_set_cover,
    greedy_set_cover,
    pierce_arcs_exact,
    pierce_balls_danzer,
    pierce_caps_exact,
    reduce_caps_via_stereographic,
)


def arc(theta: float, radius: float) -> SphericalCap:
    return SphericalCap(UnitVector([math.cos(theta), math.sin(theta)]), radius, True)


def piercing_caps(ball):
    return [pair.piercing_cap for pair in vertex_caps(ball)]


def brute_force_arcs(arcs) -> int:
    """Smallest number of arc right endpoints hitting every closed arc."""
    angles = [math.atan2(a.center.coords[1], a.center.coords[0]) for a in arcs]
    ends = [theta + a.radius for theta, a in zip(angles, arcs)]

    def hits(point, theta, radius):
        offset = (point - theta + math.pi) % (2 * math.pi) - math.pi
        return abs(offset) <= radius + 1e-12

    for k in range(1, len(arcs) + 1):
        for chosen in itertools.combinations(ends, k):
            if all(
                any(hits(p, theta, a.radius) for p in chosen)
                for theta, a in zip(angles, arcs)
            ):
                return k
    raise AssertionError("unreachable")


class TestSetCover:
    def test_small_instance(self):
        # Greedy takes the four-element set first and then needs two more.
        masks = [0b000111, 0b111000, 0b011110]
        assert greedy_set_cover(0b111111, masks) == [2, 0, 1]
        assert sorted(exact_set_cover(0b111111, masks)) == [0, 1]

    def test_infeasible(self):
        assert exact_set_cover(0b111, [0b001, 0b010]) is None
        assert greedy_set_cover(0b111, [0b001, 0b010]) is None

    @settings(max_examples=60, deadline=None)
    @given(
        st.lists(
            st.integers(min_value=1, max_value=(1 << 7) - 1), min_size=1, max_size=9
        )
    )
    def test_matches_brute_force(self, masks):
        universe = 0
        for mask in masks:
            universe |= mask
        best = None
        for k in range(1, len(masks) + 1):
            for chosen in itertools.combinations(masks, k):
                covered = 0
                for mask in chosen:
                    covered |= mask
                if covered == universe:
                    best = k
                    break
            if best is not None:
                break
        result = exact_set_cover(universe, masks)
        assert len(result) == best
        covered = 0
        for index in result:
            covered |= masks[index]
        assert covered == universe


class TestArcs:
    def test_single_arc(self):
        solution = pierce_arcs_exact([arc(1.0, 0.4)])
        assert solution.size == 1
        npt.assert_allclose(solution.points[0], [math.cos(1.0), math.sin(1.0)])
        assert solution.optimal

    def test_pairwise_intersecting_arcs_need_two(self, tol):
        for seed in range(1000, 1200):
            ball = two_illuminable(2, 1 + seed % 30, rng_seed=seed)
            solution = pierce_arcs_exact(piercing_caps(ball))
            assert solution.size <= 2
            assert solution.min_margin >= tol.eps_geometry
            assert len(solution.witnesses) == ball.n

    def test_point_on_shared_right_endpoint(self):
        # Arcs 0 and 1 end at the same angle; the sweep puts a point there.
        arcs = [arc(0.0, 0.5), arc(0.2, 0.3), arc(2.0, 0.4), arc(2.5, 0.5)]
        solution = pierce_arcs_exact(arcs)
        assert solution.size == 2
        assert sorted(set(solution.witnesses)) == [0, 1]
        for a, k in zip(arcs, solution.witnesses):
            assert angular_distance(a.center, solution.points[k]) < a.radius

    def test_wraparound(self):
        arcs = [arc(math.pi - 0.1, 0.3), arc(-math.pi + 0.1, 0.3)]
        assert pierce_arcs_exact(arcs).size == 1

    def test_matches_brute_force(self, rng):
        for _ in range(30):
            thetas = rng.uniform(-math.pi, math.pi, size=12)
            radii = rng.uniform(0.05, 1.0, size=12)
            arcs = [arc(float(t), float(r)) for t, r in zip(thetas, radii)]
            solution = pierce_arcs_exact(arcs)
            assert solution.size == brute_force_arcs(arcs)
            for a, k in zip(arcs, solution.witnesses):
                assert angular_distance(a.center, solution.points[k]) < a.radius

    def test_rejects_caps_on_sphere(self):
        cap = SphericalCap(UnitVector([0.0, 0.0, 1.0]), 0.3, open=True)
        with pytest.raises(GeometryError):
            pierce_arcs_exact([cap])

    def test_rejects_empty_family(self):
        with pytest.raises(GeometryError):
            pierce_arcs_exact([])


class TestCaps:
    north = UnitVector([0.0, 0.0, 1.0])

    def test_common_point(self, rng):
        caps = []
        for center in uniform_sphere(rng, 200, 3):
            distance = angular_distance(center, self.north)
            if distance < 1.3 and len(caps) < 6:
                caps.append(SphericalCap(UnitVector(center), distance + 0.1, True))
        assert len(caps) == 6
        solution = pierce_caps_exact(caps)
        assert solution.size == 1

    def test_boundary_intersections_lie_on_both_circles(self):
        c1 = SphericalCap(UnitVector([1.0, 0.0, 0.0]), 0.8)
        c2 = SphericalCap(UnitVector([0.0, 1.0, 0.0]), 0.9)
        points = boundary_intersections(c1, c2)
        assert len(points) == 2
        for p in points:
            assert angular_distance(c1.center, p) == pytest.approx(0.8)
            assert angular_distance(c2.center, p) == pytest.approx(0.9)

    def test_pairwise_intersecting_caps_need_at_most_four(self):
        for seed in range(8):
            caps = piercing_caps(two_illuminable(3, 10, rng_seed=seed))
            solution = pierce_caps_exact(caps)
            assert solution.size <= 4
            assert solution.min_margin >= 1e-7

    def test_grid_oracle(self, rng):
        grid = fibonacci_sphere(10_000)
        equal = 0
        for _ in range(15):
            centers = uniform_sphere(rng, 8, 3)
            radii = rng.uniform(0.3, 1.2, size=8)
            caps = [
                SphericalCap(UnitVector(c), float(r), open=True)
                for c, r in zip(centers, radii)
            ]
            inside = cap_margins(caps, grid) > 0
            masks = [sum(1 << int(i) for i in np.flatnonzero(col)) for col in inside.T]
            grid_size = len(exact_set_cover((1 << 8) - 1, masks))
            solution = pierce_caps_exact(caps)
            assert solution.size <= grid_size
            equal += solution.size == grid_size
        assert equal >= 10

    def test_too_many_caps(self):
        caps = [SphericalCap(self.north, 0.5, open=True)] * 21
        with pytest.raises(GeometryError):
            pierce_caps_exact(caps)

    def test_large_cap_rejected(self):
        with pytest.raises(GeometryError):
            pierce_caps_exact([SphericalCap(self.north, 2.0, open=True)])


class TestDanzer:
    def test_worked_example(self, circle_cover_pi6):
        assert circle_cover_pi6.size == 6
        balls = [
            EuclideanBall([0.0, 0.0], 1.0),
            EuclideanBall([2.0, 0.0], 1.0),
            EuclideanBall([1.0, 1.7], 1.0),
        ]
        solution = pierce_balls_danzer(balls, circle_cover_pi6)
        assert solution.size == 7
        assert not solution.optimal
        assert solution.details["anchor"] == 0
        assert solution.min_margin >= 0
        distances = np.linalg.norm(solution.points - [math.sqrt(3), 0.0], axis=1)
        assert distances.min() < 1e-9
        assert balls[1].contains([math.sqrt(3), 0.0])

    def test_concentric_balls(self, circle_cover_pi6):
        balls = [EuclideanBall([0.5, -0.5], r) for r in (1.0, 2.0, 3.0)]
        solution = pierce_balls_danzer(balls, circle_cover_pi6)
        assert solution.witnesses == [0, 0, 0]

    @pytest.mark.parametrize("dim", [2, 3])
    def test_random_families(self, dim, rng, circle_cover_pi6, sphere_cover_pi6):
        cover = circle_cover_pi6 if dim == 2 else sphere_cover_pi6
        families = 0
        while families < 200:
            n = int(rng.integers(2, 9))
            centers = rng.uniform(-2.0, 2.0, size=(n, dim))
            radii = rng.uniform(0.2, 2.0, size=n)
            balls = [EuclideanBall(c, float(r)) for c, r in zip(centers, radii)]
            if not all(a.intersects(b) for a, b in itertools.combinations(balls, 2)):
                continue
            solution = pierce_balls_danzer(balls, cover)
            assert solution.min_margin >= -1e-9
            families += 1

    def test_disjoint_balls(self, circle_cover_pi6):
        balls = [EuclideanBall([0.0, 0.0], 1.0), EuclideanBall([5.0, 0.0], 1.0)]
        with pytest.raises(GeometryError):
            pierce_balls_danzer(balls, circle_cover_pi6)

    def test_unverified_cover(self, circle_cover_pi6):
        balls = [EuclideanBall([0.0, 0.0], 1.0)]
        with pytest.raises(GeometryError):
            pierce_balls_danzer(balls, circle_cover_pi6.unverified())

    def test_cover_dimension(self, circle_cover_pi6):
        balls = [EuclideanBall([0.0, 0.0, 0.0], 1.0)]
        with pytest.raises(GeometryError):
            pierce_balls_danzer(balls, circle_cover_pi6)

    def test_cover_too_coarse(self, circle_cover_pi4):
        assert circle_cover_pi4.status is CoverStatus.CERTIFIED
        with pytest.raises(GeometryError):
            pierce_balls_danzer([EuclideanBall([0.0, 0.0], 1.0)], circle_cover_pi4)


class TestReduction:
    s = UnitVector([0.0, 0.0, 0.0, 1.0])

    def test_split_point_in_every_cap(self, rng):
        caps = [
            SphericalCap(UnitVector(c), angular_distance(c, self.s) + 0.2, open=True)
            for c in uniform_sphere(rng, 40, 4)
            if angular_distance(c, self.s) < 1.2
        ]
        reduction = reduce_caps_via_stereographic(caps, self.s)
        assert reduction.contains_s == list(range(len(caps)))
        assert reduction.ball_images == []

    def test_split_point_outside_every_cap(self, rng):
        caps = [
            SphericalCap(UnitVector(c), angular_distance(c, self.s) / 2, open=True)
            for c in uniform_sphere(rng, 10, 4)
        ]
        reduction = reduce_caps_via_stereographic(caps, self.s)
        assert reduction.contains_s == []
        assert len(reduction.ball_images) == len(caps)
        for ball in reduction.ball_images:
            assert float(np.dot(ball.center, self.s.coords)) == pytest.approx(-1.0)

    def test_boundary_is_rejected(self):
        cap = SphericalCap(UnitVector([1.0, 0.0, 0.0, 0.0]), math.pi / 2 - 1e-9)
        with pytest.raises(GeometryError):
            reduce_caps_via_stereographic([cap], self.s)

    def test_incidence_preserved(self, rng):
        compared = 0
        for _ in range(100):
            centers = uniform_sphere(rng, 2, 4)
            radii = rng.uniform(0.1, 1.0, size=2)
            if any(
                angular_distance(c, self.s) < r + 0.05 for c, r in zip(centers, radii)
            ):
                continue
            caps = [
                SphericalCap(UnitVector(c), float(r)) for c, r in zip(centers, radii)
            ]
            if abs(angular_distance(*centers) - radii.sum()) < 1e-3:
                continue
            images = reduce_caps_via_stereographic(caps, self.s).ball_images
            assert caps_intersect(*caps) == images[0].intersects(images[1])
            compared += 1
        assert compared > 10


class TestWitnesses:
    def test_unpierced_cap(self):
        caps = [SphericalCap(UnitVector([1.0, 0.0, 0.0]), 0.2, open=True)]
        with pytest.raises(ConstructionError):
            certify_cap_piercing(caps, np.array([[0.0, 1.0, 0.0]]))

    def test_summary_and_dict(self):
        solution = pierce_arcs_exact([arc(0.0, 0.5), arc(0.3, 0.5)])
        assert solution.size == 1
        assert "Points: 1" in solution.summary
        payload = solution.to_dict()
        assert payload["optimal"] is True
        assert len(payload["points"]) == 1
