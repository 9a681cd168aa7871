"""Command-line entry point.

Exit codes: 0 success, 1 verification or construction failure, 2 usage or
validation error, 3 internal assertion failure.
"""

import argparse
import json
import logging
import sys
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Tuple, Type

from spikyball.bounds import bounds_frame, ratio_curves, threshold_scan
from spikyball.constructions import (
    IlluminationManager,
    IlluminationMethod,
    survey_two_d,
)
from spikyball.coverings import obtain_cover
from spikyball.exceptions import (
    ConstructionError,
    GeometryError,
    InvariantViolation,
    RetryBudgetExceeded,
)
from spikyball.geometry import Tolerance
from spikyball.model import InstanceKind, derive_seed, gen_instance, verify_illumination
from spikyball.piercing import pierce_arcs_exact, pierce_caps_exact
from spikyball.storage import get_codec, write_json
from spikyball.utils.config import get_settings
from spikyball.utils.logging import setup_logging

logger = logging.getLogger("spikyball.cli")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3
MAX_SEED = 2**64


@dataclass(frozen=True)
class RunConfig:
    """Everything one CLI invocation depends on."""

    command: str
    seed: int
    tol: Tolerance
    out: Optional[Path] = None
    fmt: Optional[str] = None
    options: Dict[str, Any] = field(default_factory=dict)

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        settings = get_settings()
        seed = settings.seed if args.seed is None else args.seed
        if not 0 <= seed < MAX_SEED:
            raise GeometryError(f"Seed must be a 64-bit unsigned integer, got {seed}")
        for flag, value in (
            ("--tol-predicate", args.tol_predicate),
            ("--tol-geometry", args.tol_geometry),
        ):
            if value is not None and not value > 0:
                raise GeometryError(f"{flag} must be positive, got {value}")
        eps_predicate, eps_geometry = args.tol_predicate, args.tol_geometry
        tol = Tolerance(
            eps_predicate=(
                settings.eps_predicate if eps_predicate is None else eps_predicate
            ),
            eps_geometry=(
                settings.eps_geometry if eps_geometry is None else eps_geometry
            ),
        )
        shared = {"command", "seed", "tol_predicate", "tol_geometry", "out"}
        shared |= {"format", "log_level", "handler"}
        options = {k: v for k, v in vars(args).items() if k not in shared}
        return cls(
            command=args.command,
            seed=seed,
            tol=tol,
            out=Path(args.out) if args.out else None,
            fmt=args.format,
            options=options,
        )


def _emit(config: RunConfig, payload: Dict[str, Any], summary: str = "") -> None:
    """Write ``payload`` to --out, or to stdout with the summary on stderr."""
    if config.out:
        write_json(payload, config.out)
        if summary:
            print(summary)
        print(f"Wrote {config.out}")
        return
    print(json.dumps(payload, sort_keys=True, indent=2, allow_nan=False))
    if summary:
        print(summary, file=sys.stderr)


def _require_json(config: RunConfig) -> None:
    if config.fmt not in (None, "json"):
        raise GeometryError(f"{config.command} only writes json, not {config.fmt}")


def cmd_gen(config: RunConfig) -> int:
    _require_json(config)
    codec = get_codec("instance")
    kind = InstanceKind.parse(config.options["kind"])
    count = config.options["count"]
    if count < 1:
        raise GeometryError(f"--count must be positive, got {count}")
    if count == 1:
        ball = gen_instance(
            kind,
            config.options["dim"],
            config.options["n"],
            config.seed,
            tol=config.tol,
        )
        _emit(config, codec.to_payload(ball))
        return EXIT_OK
    if config.out is None:
        raise GeometryError("--out must name a directory when --count > 1")
    for index in range(count):
        seed = derive_seed(config.seed, index)
        ball = gen_instance(
            kind, config.options["dim"], config.options["n"], seed, tol=config.tol
        )
        codec.dump(ball, config.out / f"{kind.value}_{index:04d}.json")
    print(f"Wrote {count} instances to {config.out}")
    return EXIT_OK


def cmd_illuminate(config: RunConfig) -> int:
    _require_json(config)
    ball = get_codec("instance").load(config.options["instance"], tol=config.tol)
    cover = None
    if config.options["cover"]:
        cover = get_codec("covering").load(config.options["cover"], tol=config.tol)
    manager = IlluminationManager()
    result = manager.run(
        ball, config.options["method"], cover=cover, seed=config.seed, tol=config.tol
    )
    directions = get_codec("directions").to_payload(result.directions)
    if config.out:
        write_json(directions, config.out)
        sidecar = config.out.with_suffix(".report.json")
        write_json(result.to_dict(), sidecar)
        print(result.summary)
        print(f"Wrote {config.out} and {sidecar}")
    else:
        _emit(config, {**directions, "report": result.to_dict()}, result.summary)
    return EXIT_OK if result.status else EXIT_FAILED


def cmd_verify(config: RunConfig) -> int:
    _require_json(config)
    ball = get_codec("instance").load(config.options["instance"], tol=config.tol)
    dirs = get_codec("directions").load(config.options["directions"])
    report = verify_illumination(ball, dirs, config.tol)
    _emit(config, report.to_dict(), report.summary)
    return EXIT_OK if report.verdict else EXIT_FAILED


def cmd_cover(config: RunConfig) -> int:
    _require_json(config)
    m, alpha = config.options["m"], config.options["alpha"]
    spec = obtain_cover(m, alpha, rng_seed=config.seed, tol=config.tol)
    summary = (
        f"Covering of S^{m}:\n"
        f"- Radius: {spec.radius:.17g}\n"
        f"- Centers: {spec.size}\n"
        f"- Verification: {spec.status.value}"
    )
    _emit(config, get_codec("covering").to_payload(spec), summary)
    return EXIT_OK


def cmd_pierce(config: RunConfig) -> int:
    _require_json(config)
    caps = get_codec("caps").load(config.options["input"])
    dim = caps[0].dim
    if dim == 2:
        solution = pierce_arcs_exact(caps, config.tol)
    elif dim == 3:
        solution = pierce_caps_exact(caps, tol=config.tol)
    else:
        raise GeometryError(
            f"Exact piercing is available on S^1 and S^2, not S^{dim - 1}"
        )
    _emit(config, solution.to_dict(), solution.summary)
    return EXIT_OK


def cmd_bounds(config: RunConfig) -> int:
    d_min, d_max = config.options["d_min"], config.options["d_max"]
    if d_max < d_min:
        raise GeometryError(f"Empty dimension range [{d_min}, {d_max}]")
    rows = ratio_curves(range(d_min, d_max + 1))
    thresholds = {kind: threshold_scan(kind) for kind in ("capbody", "spiky")}
    summary = "\n".join(f"{kind} threshold = {d}" for kind, d in thresholds.items())
    if (config.fmt or "csv") == "csv":
        if config.out:
            get_codec("bounds_csv").dump(rows, config.out)
            print(summary)
            print(f"Wrote {config.out}")
        else:
            sys.stdout.write(
                bounds_frame(rows).to_csv(
                    index=False, float_format="%.17g", lineterminator="\n"
                )
            )
            print(summary, file=sys.stderr)
        return EXIT_OK
    payload = {"rows": [asdict(row) for row in rows], "thresholds": thresholds}
    _emit(config, payload, summary)
    return EXIT_OK


def cmd_survey(config: RunConfig) -> int:
    _require_json(config)
    survey = survey_two_d(
        config.options["dim"], config.options["count"], config.seed, config.tol
    )
    payload = {
        "dim": survey.dim,
        "count": survey.count,
        "seed": survey.seed,
        "sizes": survey.sizes,
        "resolved_two_d": survey.resolved_two_d,
    }
    _emit(config, payload, survey.summary)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spikyball",
        description="Illumination of spiky balls and cap bodies",
    )
    parser.add_argument("--seed", type=int, default=None, help="64-bit RNG seed")
    parser.add_argument("--tol-predicate", type=float, default=None)
    parser.add_argument("--tol-geometry", type=float, default=None)
    parser.add_argument("--out", default=None, help="output path")
    parser.add_argument("--format", choices=["json", "csv"], default=None)
    parser.add_argument("--log-level", default=None, help="e.g. INFO or DEBUG")
    subparsers = parser.add_subparsers(dest="command", required=True)

    p_gen = subparsers.add_parser("gen", help="generate a seeded instance")
    p_gen.add_argument("kind", help=", ".join(kind.value for kind in InstanceKind))
    p_gen.add_argument("dim", type=int)
    p_gen.add_argument("n", type=int, nargs="?", default=None)
    p_gen.add_argument("--count", type=int, default=1)
    p_gen.set_defaults(handler=cmd_gen)

    p_ill = subparsers.add_parser("illuminate", help="build a verified direction set")
    p_ill.add_argument("instance")
    p_ill.add_argument(
        "--method",
        choices=[method.value for method in IlluminationMethod],
        default=IlluminationMethod.AUTO.value,
    )
    p_ill.add_argument("--cover", default=None, help="covering JSON to use")
    p_ill.set_defaults(handler=cmd_illuminate)

    p_ver = subparsers.add_parser("verify", help="check a direction set")
    p_ver.add_argument("instance")
    p_ver.add_argument("directions")
    p_ver.set_defaults(handler=cmd_verify)

    p_cov = subparsers.add_parser("cover", help="verified covering of S^m")
    p_cov.add_argument("m", type=int)
    p_cov.add_argument("alpha", type=float, help="cap radius in radians")
    p_cov.set_defaults(handler=cmd_cover)

    p_pie = subparsers.add_parser("pierce", help="minimum piercing of a cap family")
    p_pie.add_argument("input")
    p_pie.set_defaults(handler=cmd_pierce)

    p_bnd = subparsers.add_parser("bounds", help="bound table and thresholds")
    p_bnd.add_argument("d_min", type=int)
    p_bnd.add_argument("d_max", type=int)
    p_bnd.set_defaults(handler=cmd_bounds)

    p_sur = subparsers.add_parser(
        "survey", help="how often 2d coordinate directions suffice"
    )
    p_sur.add_argument("dim", type=int)
    p_sur.add_argument("count", type=int)
    p_sur.set_defaults(handler=cmd_survey)
    return parser


# Exceptions in order of precedence
EXIT_CODES: List[Tuple[Type[Exception], int]] = [
    (InvariantViolation, EXIT_INTERNAL),
    (GeometryError, EXIT_USAGE),
    (FileNotFoundError, EXIT_USAGE),
    (ValueError, EXIT_USAGE),
    (ConstructionError, EXIT_FAILED),
    (RetryBudgetExceeded, EXIT_FAILED),
]


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler: Callable[[RunConfig], int] = args.handler
    try:
        setup_logging(level=args.log_level)
        config = RunConfig.from_args(args)
        return handler(config)
    except tuple(exc for exc, _ in EXIT_CODES) as e:
        code = next(code for exc, code in EXIT_CODES if isinstance(e, exc))
        logger.error(f"{args.command} failed: {e}")
        print(f"error: {e}", file=sys.stderr)
        return code


if __name__ == "__main__":
    sys.exit(main())
