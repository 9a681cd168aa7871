"""Tests for spikyball.storage codecs."""

import json
import math

import numpy as np
import numpy.testing as npt
import pytest

from spikyball.bounds import CSV_COLUMNS, ratio_curves
from spikyball.coverings import CoveringSpec, CoverStatus, circle_points
from spikyball.exceptions import GeometryError
from spikyball.geometry import SphericalCap, UnitVector
from spikyball.model import DirectionSet, gen_instance
from spikyball.storage import get_codec, plugin_manager, read_json, write_json


class TestRegistry:
    def test_list_plugins(self):
        assert plugin_manager.list_plugins() == [
            "bounds_csv",
            "caps",
            "covering",
            "directions",
            "instance",
        ]

    def test_unknown_codec(self):
        with pytest.raises(ValueError, match="not found"):
            get_codec("yaml")


class TestJson:
    def test_deterministic_output(self, tmp_path):
        path = write_json({"b": 1, "a": [0.1, 2.0]}, tmp_path / "x.json")
        text = path.read_text()
        assert text.endswith("\n")
        assert text.index('"a"') < text.index('"b"')
        assert read_json(path) == {"a": [0.1, 2.0], "b": 1}

    def test_nan_rejected(self, tmp_path):
        with pytest.raises(ValueError):
            write_json({"a": float("nan")}, tmp_path / "x.json")

    def test_malformed(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        with pytest.raises(GeometryError):
            read_json(path)

    def test_not_an_object(self, tmp_path):
        path = tmp_path / "list.json"
        path.write_text("[1, 2]")
        with pytest.raises(GeometryError):
            read_json(path)


class TestInstanceCodec:
    def test_round_trip(self, tmp_path):
        ball = gen_instance("symmetric", 3, 3, rng_seed=7)
        codec = get_codec("instance")
        loaded = codec.load(codec.dump(ball, tmp_path / "ball.json"))
        npt.assert_array_equal(loaded.vertices, ball.vertices)
        assert loaded.symmetry is ball.symmetry
        assert loaded.metadata == {"kind": "symmetric_cap_body", "seed": 7}

    def test_missing_file(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            get_codec("instance").load(tmp_path / "none.json")

    def test_wrong_extension(self, tmp_path):
        path = tmp_path / "ball.txt"
        path.write_text("{}")
        with pytest.raises(GeometryError):
            get_codec("instance").load(path)

    def test_missing_field(self, tmp_path):
        path = write_json({"dim": 2}, tmp_path / "ball.json")
        with pytest.raises(GeometryError, match="Malformed"):
            get_codec("instance").load(path)

    def test_short_vertex(self, tmp_path):
        path = write_json({"dim": 2, "vertices": [[0.5, 0.0]]}, tmp_path / "ball.json")
        with pytest.raises(GeometryError):
            get_codec("instance").load(path)

    def test_hidden_vertex(self, tmp_path):
        # The second vertex lies inside the spike of the first.
        payload = {"dim": 2, "vertices": [[3.0, 0.0], [1.5, 0.0]]}
        path = write_json(payload, tmp_path / "ball.json")
        with pytest.raises(GeometryError):
            get_codec("instance").load(path)

    def test_non_convex_cap_body(self, tmp_path):
        payload = {
            "dim": 3,
            "symmetry": "origin",
            "vertices": [[2.0, 0, 0], [-2.0, 0, 0], [0, 2.0, 0], [0, -2.0, 0]],
            "metadata": {"kind": "symmetric_cap_body"},
        }
        path = write_json(payload, tmp_path / "ball.json")
        with pytest.raises(GeometryError, match="not convex"):
            get_codec("instance").load(path)


class TestCoveringCodec:
    def test_round_trip_reverifies(self, tmp_path, circle_cover_pi4):
        codec = get_codec("covering")
        path = codec.dump(circle_cover_pi4, tmp_path / "cover.json")
        assert read_json(path)["verified"] == "certified"
        loaded = codec.load(path)
        assert loaded.status is CoverStatus.CERTIFIED
        npt.assert_allclose(loaded.centers, circle_cover_pi4.centers)

    def test_false_claim_rejected(self, tmp_path):
        spec = CoveringSpec(1, math.pi / 4, circle_points(3), CoverStatus.CERTIFIED)
        path = get_codec("covering").dump(spec, tmp_path / "cover.json")
        with pytest.raises(GeometryError, match="fails verification"):
            get_codec("covering").load(path)

    def test_unverified_kept(self, tmp_path):
        spec = CoveringSpec(1, math.pi / 4, circle_points(3))
        path = get_codec("covering").dump(spec, tmp_path / "cover.json")
        assert get_codec("covering").load(path).status is CoverStatus.UNVERIFIED


class TestOtherCodecs:
    def test_directions(self, tmp_path):
        dirs = DirectionSet(2, np.array([[1.0, 0.0], [0.0, 1.0], [-0.6, -0.8]]))
        codec = get_codec("directions")
        loaded = codec.load(codec.dump(dirs, tmp_path / "d.json"))
        npt.assert_array_equal(loaded.directions, dirs.directions)

    def test_caps(self, tmp_path):
        caps = [
            SphericalCap(UnitVector([1.0, 0.0, 0.0]), 0.5, open=True),
            SphericalCap(UnitVector([0.0, 1.0, 0.0]), 0.7, open=False),
        ]
        codec = get_codec("caps")
        loaded = codec.load(codec.dump(caps, tmp_path / "caps.json"))
        assert [cap.open for cap in loaded] == [True, False]
        assert loaded[1].radius == 0.7

    def test_caps_dimension_mismatch(self, tmp_path):
        payload = {"dim": 3, "caps": [{"center": [1.0, 0.0], "radius": 0.5}]}
        path = write_json(payload, tmp_path / "caps.json")
        with pytest.raises(GeometryError):
            get_codec("caps").load(path)

    def test_bounds_csv(self, tmp_path):
        codec = get_codec("bounds_csv")
        path = codec.dump(ratio_curves(range(5, 12)), tmp_path / "bounds.csv")
        frame = codec.load(path)
        assert list(frame.columns) == CSV_COLUMNS
        assert list(frame["d"]) == list(range(5, 12))

    def test_bounds_csv_columns_checked(self, tmp_path):
        path = tmp_path / "bounds.csv"
        path.write_text("d,x\n5,1\n")
        with pytest.raises(GeometryError):
            get_codec("bounds_csv").load(path)

    def test_bounds_csv_extension(self, tmp_path):
        with pytest.raises(GeometryError):
            get_codec("bounds_csv").dump(ratio_curves([5]), tmp_path / "b.json")

    def test_payload_is_plain_json(self, circle_cover_pi6):
        payload = get_codec("covering").to_payload(circle_cover_pi6)
        json.dumps(payload, allow_nan=False)
        assert payload["sphere_dim"] == 1
