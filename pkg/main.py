import argparse
import logging
import sys
from typing import Callable, Dict, List, Optional, TextIO

from bath.spec import ProbeKind
from config import settings
from config.run_config import FRAMES, STATISTICS_CHOICES, RunConfig, parse_beta_omega, parse_interval
from config.settings import validate_config
from errors import TaggingError, UsageError
from handlers.curve_handlers import CurveHandlers
from handlers.optimum_handlers import OptimumHandlers
from handlers.output import usage_failure
from handlers.rate_handlers import RateHandlers
from handlers.verify_handlers import VerifyHandlers

logger = logging.getLogger(__name__)


def configure_logging(level: str) -> None:
    """Logs go to stderr so that CSV on stdout stays clean."""
    logging.basicConfig(
        level=getattr(logging, level.upper()),
        format='[%(asctime)s] %(levelname)s %(name)s: %(message)s',
        datefmt='%Y-%m-%d %H:%M:%S',
        stream=sys.stderr,
        force=True,
    )


class BathTaggingCli:
    """
    Command dispatcher that delegates to specialized handlers.
    Handlers are organized by concern: rates, curves, optima and verification.
    """

    def __init__(self, stream: Optional[TextIO] = None, error_stream: Optional[TextIO] = None) -> None:
        self.rate_handler = RateHandlers(stream=stream, error_stream=error_stream)
        self.curve_handler = CurveHandlers(stream=stream, error_stream=error_stream)
        self.optimum_handler = OptimumHandlers(stream=stream, error_stream=error_stream)
        self.verify_handler = VerifyHandlers(stream=stream, error_stream=error_stream)

        self.commands: Dict[str, Callable[[RunConfig], int]] = {
            "rates": self.rate_handler.cmd_rates,
            "curve": self.curve_handler.cmd_curve,
            "state-temp": self.curve_handler.cmd_state_temp,
            "sweep-input": self.curve_handler.cmd_sweep_input,
            "optimal": self.optimum_handler.cmd_optimal,
            "best-temp": self.optimum_handler.cmd_best_temp,
            "verify": self.verify_handler.cmd_verify,
        }

    def run(self, command: str, config: RunConfig) -> int:
        logger.info(f"[BathTaggingCli] Running {command} with {config}")
        return self.commands[command](config)


def _common_arguments() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--probe", choices=[kind.value for kind in ProbeKind], default=None)
    common.add_argument("--statistics", choices=STATISTICS_CHOICES, default="both")
    temperature = common.add_mutually_exclusive_group()
    temperature.add_argument("--beta-omega", type=parse_beta_omega, default=None, help="beta*omega0, or 'inf'")
    temperature.add_argument("--inv-beta-omega", type=float, default=None, help="1/(beta*omega0), as on figure axes")
    common.add_argument("--gamma", type=float, default=settings.GAMMA)
    common.add_argument("--omega0", type=float, default=settings.OMEGA0)
    common.add_argument("--t-max", type=float, default=None)
    common.add_argument("--steps", type=int, default=201)
    common.add_argument("--input", default=None, help="excited | ground | bloch:sz,sx | coherent:amp | thermal:n | squeezed:r | displaced:amp")
    common.add_argument("--frame", choices=FRAMES, default="rotating")
    common.add_argument("--out", default=None, help="output file (default: stdout)")
    common.add_argument("--precision", type=int, default=settings.PRECISION)
    common.add_argument("--max-workers", type=int, default=settings.MAX_WORKERS)
    common.add_argument("--log-level", choices=settings.LOG_LEVELS, type=str.upper, default=settings.LOG_LEVEL.upper())
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_arguments()
    parser = argparse.ArgumentParser(
        prog="bath-tagging",
        description="Tells bosonic from fermionic thermal baths through the dynamics of a probe.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    commands.add_parser("rates", parents=[common], help="characteristic rates of the four pairings")
    curve = commands.add_parser("curve", parents=[common], help="Helstrom/Chernoff curves in time")
    curve.add_argument("--helstrom", action="store_true", help="request the Helstrom column (tls only)")
    optimal = commands.add_parser("optimal", parents=[common], help="analytic vs numerical optimal time")
    optimal.add_argument("--sweep", type=parse_interval, default=None, metavar="LO:HI", help="sweep 1/(beta*omega0)")
    commands.add_parser("best-temp", parents=[common], help="bath temperature of smallest Chernoff quantity")
    verify = commands.add_parser("verify", parents=[common], help="cross-check against the Fock-space oracle")
    verify.add_argument("--dim", type=int, default=None, help="fixed truncation (disables auto-doubling)")
    verify.add_argument("--dt", type=float, default=None)
    verify.add_argument("--cases", type=int, default=settings.ORACLE_CASES)
    verify.add_argument("--seed", type=int, default=settings.ORACLE_SEED)
    commands.add_parser("sweep-input", parents=[common], help="optimal input state")
    commands.add_parser("state-temp", parents=[common], help="inverse temperature of the evolving Gaussian state")
    return parser


def build_config(args: argparse.Namespace) -> RunConfig:
    beta_omega = args.beta_omega
    if args.inv_beta_omega is not None:
        if args.inv_beta_omega < 0:
            raise UsageError(f"--inv-beta-omega must be >= 0, got {args.inv_beta_omega}")
        beta_omega = float("inf") if args.inv_beta_omega == 0 else 1.0 / args.inv_beta_omega

    probe = ProbeKind(args.probe) if args.probe else ProbeKind.TLS
    probes = (probe,) if args.probe else (ProbeKind.TLS, ProbeKind.QHO)
    if args.command == "best-temp":
        probe = ProbeKind.QHO

    return RunConfig(
        probe=probe,
        beta_omega=beta_omega,
        statistics=args.statistics,
        gamma=args.gamma,
        omega0=args.omega0,
        t_max=args.t_max,
        steps=args.steps,
        input=args.input,
        out=args.out,
        precision=args.precision,
        frame=args.frame,
        helstrom=getattr(args, "helstrom", False),
        dim=getattr(args, "dim", None),
        dt=getattr(args, "dt", None),
        cases=getattr(args, "cases", settings.ORACLE_CASES),
        seed=getattr(args, "seed", settings.ORACLE_SEED),
        sweep=getattr(args, "sweep", None),
        max_workers=args.max_workers,
        probes=probes,
    )


def main(argv: Optional[List[str]] = None, stream: Optional[TextIO] = None, error_stream: Optional[TextIO] = None) -> int:
    """Parses the command line, runs one subcommand and returns its exit code."""
    validate_config()

    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    configure_logging(args.log_level)
    try:
        config = build_config(args)
    except TaggingError as e:
        return usage_failure("main", e, error_stream)
    return BathTaggingCli(stream=stream, error_stream=error_stream).run(args.command, config)


if __name__ == "__main__":
    sys.exit(main())
