"""Command-line entry point: ``starsec {sweep,optimize,validate,show-config}``."""
import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

from ._internal.constants import (
    EXIT_CONFIG_ERROR,
    EXIT_IO_ERROR,
    EXIT_OK,
    EXIT_VALIDATION_FAILED,
    VERSION,
    Messages,
)
from ._internal.experiments import PRESETS
from ._internal.optimizer import grid_axis
from .client import SecrecyClient
from .errors import ConfigError, ConfigValueError, OutputError, StarSecError, ValidationFailure
from .types import EvePhaseModel, SweepSeries, SweepSpec, SweepVariable

logger = logging.getLogger("starsec")


def parse_values(text: str, field: str = "sweep.values") -> Tuple[float, ...]:
    """``"0:5:50"`` (start:step:stop, inclusive) or ``"10,20,40"``."""
    try:
        if ":" in text:
            start, step, stop = (float(part) for part in text.split(":"))
            return grid_axis(start, stop, step)
        return tuple(float(part) for part in text.split(",") if part.strip())
    except (ValueError, StarSecError) as exc:
        raise ConfigValueError(field, f"cannot parse {text!r}: {exc}") from exc


def parse_series(text: str) -> SweepSeries:
    """``NAME=v1,v2,...``."""
    name, sep, values = text.partition("=")
    if not sep:
        raise ConfigValueError("series", f"expected NAME=v1,v2,..., got {text!r}")
    return SweepSeries(name=name.strip(), values=parse_values(values, "series"))


def _common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", required=True, type=Path, help="scenario file (TOML)")
    parser.add_argument("--out", type=Path, default=Path("out"), help="output directory")
    parser.add_argument("--seed", type=int, help="Monte Carlo seed (unsigned 64-bit)")
    parser.add_argument("--trials", type=int, help="Monte Carlo trials")
    parser.add_argument("--with-mc", action="store_true", help="add Monte Carlo mean/SE columns")
    parser.add_argument(
        "--eve-model",
        choices=[m.value for m in EvePhaseModel],
        help="eavesdropper phase model used in simulation",
    )
    parser.add_argument("--debug", action="store_true", help="verbose logging")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="starsec",
        description="Ergodic secrecy analysis of UAV-mounted STAR-RIS NOMA downlinks.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {VERSION}")
    commands = parser.add_subparsers(dest="command", required=True)

    sweep = commands.add_parser("sweep", help="tabulate metrics over one swept variable")
    _common(sweep)
    sweep.add_argument("--preset", choices=sorted(PRESETS), help="named sweep with its default series")
    sweep.add_argument("--variable", choices=[v.value for v in SweepVariable], help="swept variable")
    sweep.add_argument("--values", help='"start:step:stop" or "v1,v2,..."')
    sweep.add_argument("--metrics", default="r_sec_r,r_sec_t,wssr", help="comma-separated metrics")
    sweep.add_argument("--series", help="NAME=v1,v2,... writes one CSV per value")

    optimize = commands.add_parser("optimize", help="joint UAV placement and power split")
    _common(optimize)

    validate = commands.add_parser("validate", help="run the validation suite")
    _common(validate)
    validate.add_argument("--spread-scale", type=float, default=1.0, help=argparse.SUPPRESS)

    show = commands.add_parser("show-config", help="print the resolved scenario")
    _common(show)
    return parser


def _sweep_request(args: argparse.Namespace) -> Tuple[SweepSpec, Optional[SweepSeries]]:
    series = parse_series(args.series) if args.series else None
    if args.preset:
        spec, preset_series = PRESETS[args.preset]
        return spec, series or preset_series
    if not args.variable or not args.values:
        raise ConfigValueError("sweep", "either --preset or both --variable and --values are required")
    spec = SweepSpec(
        variable=SweepVariable(args.variable),
        values=parse_values(args.values),
        outputs=tuple(m.strip() for m in args.metrics.split(",") if m.strip()),
    )
    return spec, series


def _run(args: argparse.Namespace) -> int:
    client = SecrecyClient(
        args.config,
        seed=args.seed,
        trials=args.trials,
        eve_model=EvePhaseModel(args.eve_model) if args.eve_model else None,
        debug=args.debug,
    )

    if args.command == "show-config":
        print(json.dumps(client.show_config(), indent=2))
        return EXIT_OK

    if args.command == "sweep":
        spec, series = _sweep_request(args)
        for path in client.sweep(spec, args.out, with_mc=args.with_mc, series=series):
            print(path)
        return EXIT_OK

    if args.command == "optimize":
        result = client.optimize(args.out)
        print(
            json.dumps(
                {
                    "uav_star": list(result.uav_star.as_tuple()),
                    "zeta_star": result.zeta_star,
                    "wssr_star": result.wssr_star,
                    "iterations": result.iterations,
                }
            )
        )
        return EXIT_OK

    passed, results, path = client.validate(args.out, spread_scale=args.spread_scale)
    print(path)
    if not passed:
        raise ValidationFailure(", ".join(r.check for r in results if not r.passed))
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.debug else logging.INFO,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        return _run(args)
    except ValidationFailure as exc:
        logger.error(Messages.VALIDATION_FAILED, exc)
        return EXIT_VALIDATION_FAILED
    except ConfigError as exc:
        logger.error(Messages.CONFIG_ERROR, exc)
        return EXIT_CONFIG_ERROR
    except (OutputError, OSError) as exc:
        logger.error(Messages.IO_ERROR, exc)
        return EXIT_IO_ERROR
    except StarSecError as exc:
        # geometry, numerical and optimizer failures share the usage exit code
        logger.error(Messages.RUN_ERROR, exc)
        return EXIT_CONFIG_ERROR


if __name__ == "__main__":
    sys.exit(main())
