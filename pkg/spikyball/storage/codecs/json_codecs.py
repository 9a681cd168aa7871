"""JSON codecs for instances, coverings, direction sets and cap families."""

import logging
from typing import Any, Dict, List

from spikyball.coverings import CoveringSpec, CoverStatus, verify_cover
from spikyball.exceptions import GeometryError
from spikyball.geometry import DEFAULT_TOLERANCE, SphericalCap, Tolerance, UnitVector
from spikyball.model import (
    DirectionSet,
    InstanceKind,
    SpikyBall,
    ensure_valid,
    is_convex,
    is_two_illuminable,
)

from ..types import BaseCodec

logger = logging.getLogger(__name__)

CAP_BODY_KINDS = {
    InstanceKind.SYMMETRIC_CAP_BODY.value,
    InstanceKind.UNCONDITIONAL_CAP_BODY.value,
}
TWO_ILLUMINABLE_KINDS = {
    InstanceKind.TWO_ILLUMINABLE.value,
    InstanceKind.PLANAR_LIFTED.value,
}


class InstanceCodec(BaseCodec):
    """{"dim", "symmetry", "vertices"} plus optional generator metadata."""

    name = "instance"

    def to_payload(self, obj: SpikyBall) -> Dict[str, Any]:
        payload = {
            "dim": obj.dim,
            "symmetry": obj.symmetry.value,
            "vertices": obj.vertices.tolist(),
        }
        if obj.metadata:
            payload["metadata"] = obj.metadata
        return payload

    def from_payload(
        self, payload: Dict[str, Any], tol: Tolerance = DEFAULT_TOLERANCE
    ) -> SpikyBall:
        ball = SpikyBall(
            dim=int(payload["dim"]),
            vertices=payload["vertices"],
            symmetry=payload.get("symmetry", "none"),
            metadata=payload.get("metadata", {}),
        )
        ensure_valid(ball, tol)
        kind = ball.metadata.get("kind")
        if kind in CAP_BODY_KINDS and not is_convex(ball, tol):
            raise GeometryError(f"Stored {kind} instance is not convex")
        if kind in TWO_ILLUMINABLE_KINDS and not is_two_illuminable(ball, tol):
            raise GeometryError(f"Stored {kind} instance is not 2-illuminable")
        return ball


class CoveringCodec(BaseCodec):
    """{"sphere_dim", "radius", "centers", "verified"}.

    A covering stored as certified or probabilistic is verified again on
    load unless ``verify=False``.
    """

    name = "covering"

    def to_payload(self, obj: CoveringSpec) -> Dict[str, Any]:
        payload = {
            "sphere_dim": obj.sphere_dim,
            "radius": obj.radius,
            "centers": obj.centers.tolist(),
            "verified": obj.status.value,
        }
        if obj.confidence is not None:
            payload["confidence"] = obj.confidence
        return payload

    def from_payload(
        self,
        payload: Dict[str, Any],
        tol: Tolerance = DEFAULT_TOLERANCE,
        verify: bool = True,
    ) -> CoveringSpec:
        spec = CoveringSpec(
            sphere_dim=int(payload["sphere_dim"]),
            radius=float(payload["radius"]),
            centers=payload["centers"],
            status=payload.get("verified", CoverStatus.UNVERIFIED.value),
            confidence=payload.get("confidence"),
        )
        if not verify or spec.status is CoverStatus.UNVERIFIED:
            return spec
        verification = verify_cover(spec.unverified(), tol)
        if not verification.passed:
            raise GeometryError(
                f"Stored covering claims {spec.status.value} but fails "
                f"verification (margin {verification.min_margin:.3e})"
            )
        if verification.status is not spec.status:
            logger.info(
                f"Stored covering re-verified as {verification.status.value}, "
                f"file says {spec.status.value}"
            )
        return verification.spec


class DirectionsCodec(BaseCodec):
    """{"dim", "directions"}."""

    name = "directions"

    def to_payload(self, obj: DirectionSet) -> Dict[str, Any]:
        return {"dim": obj.dim, "directions": obj.directions.tolist()}

    def from_payload(self, payload: Dict[str, Any]) -> DirectionSet:
        return DirectionSet(dim=int(payload["dim"]), directions=payload["directions"])


class CapFamilyCodec(BaseCodec):
    """{"dim", "caps": [{"center", "radius", "open"}]}."""

    name = "caps"

    def to_payload(self, obj: List[SphericalCap]) -> Dict[str, Any]:
        if not obj:
            raise GeometryError("Cannot store an empty cap family")
        return {
            "dim": obj[0].dim,
            "caps": [
                {
                    "center": cap.center.coords.tolist(),
                    "radius": cap.radius,
                    "open": cap.open,
                }
                for cap in obj
            ],
        }

    def from_payload(self, payload: Dict[str, Any]) -> List[SphericalCap]:
        dim = int(payload["dim"])
        caps = [
            SphericalCap(
                UnitVector(entry["center"]),
                float(entry["radius"]),
                open=bool(entry.get("open", True)),
            )
            for entry in payload["caps"]
        ]
        if not caps:
            raise GeometryError("Cap family is empty")
        for index, cap in enumerate(caps):
            if cap.dim != dim:
                raise GeometryError(f"Cap {index} has dimension {cap.dim}, not {dim}")
        return caps
