"""
Command-line frontend.

.. code-block:: bash

    python -m crr zeros --lambda 1 --eta 0 --n 2
    python -m crr chain --lambda 1 --n-max 2 --format csv
    python -m crr coulomb --L 0 --eta 0 --w-grid 0.5:10:20 --check ode,recurrence --parallel 4

Records go to standard output (see :class:`~crr.cli.record.OutputRecord`), logging goes to
standard error.

Exit codes:
    - 0: success.
    - 2: a :class:`~crr.exceptions.DomainError`, with the violated precondition in the message.
    - 3: a :class:`~crr.exceptions.ConvergenceError` or
      :class:`~crr.exceptions.ConsistencyError`, or a ``--method both`` cross-check that
      exceeded its tolerance (the record is still printed).
    - 64: malformed flags.
"""

import argparse
import logging
import sys

from crr import ENVIRONMENT_VARIABLES as ENVS
from crr import config
from crr._typing import *
from crr.cli.commands import COMMANDS, parse_grid
from crr.cli.record import OutputRecord
from crr.exceptions import ConsistencyError, ConvergenceError, DomainError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_DOMAIN = 2
EXIT_NUMERICAL = 3
EXIT_USAGE = 64


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> NoReturn:  # type: ignore [override]
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


GRID_FLAGS = ("--x-grid", "--w-grid")
"""Flags whose values may start with a minus sign, e.g. ``--x-grid -10:10:50``."""


def _attach_grid_values(argv: Sequence[str]) -> List[str]:
    """
    Joins grid flags to their values, so argparse does not read ``-3:3:13`` as a flag.

    Examples:
        >>> _attach_grid_values(["eval-poly", "--x-grid", "-3:3:13", "--n", "2"])
        ['eval-poly', '--x-grid=-3:3:13', '--n', '2']
    """
    out: List[str] = []
    it = iter(argv)
    for token in it:
        if token in GRID_FLAGS:
            value = next(it, None)
            out.append(token if value is None else f"{token}={value}")
        else:
            out.append(token)
    return out


def grid(text: str) -> str:
    """argparse type for ``A:B:STEPS``; validates and keeps the text for the output record."""
    parse_grid(text)
    return text


def _add_b(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--lambda", dest="lam", type=float, required=True, help="λ = Re b")
    parser.add_argument("--eta", type=float, default=0.0, help="η = Im b (default: 0)")


def _common() -> argparse.ArgumentParser:
    # accepted before or after the subcommand name
    common = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    common.add_argument("--format", choices=("json", "csv"), help="output format (default: json)")
    common.add_argument(
        "--parallel",
        type=int,
        metavar="WORKERS",
        help="spread grid work over this many workers (kind from CRR_EXECUTOR_TYPE)",
    )
    common.add_argument("--verbose", action="store_true", help="debug logging on standard error")
    return common


def build_parser() -> argparse.ArgumentParser:
    # each parser gets its own copy, so set_defaults below cannot leak into the subcommands
    parser = _Parser(
        prog="crr", description="CRR polynomials, OPUC and Coulomb wave functions.", parents=[_common()]
    )
    parser.set_defaults(format="json", parallel=0, verbose=False)
    sub = parser.add_subparsers(dest="command", required=True)
    add = lambda name, help: sub.add_parser(name, help=help, parents=[_common()])

    p = add("eval-poly", "evaluate P_n(b;x) on a grid")
    _add_b(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--x-grid", type=grid, required=True, metavar="A:B:STEPS")
    p.add_argument("--method", choices=("recurrence", "hyper", "both"), default="recurrence")

    p = add("zeros", "zeros of P_n(b;.)")
    _add_b(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=("eigen", "electro", "both"), default="eigen")

    p = add("ortho", "orthogonality matrix by quadrature")
    _add_b(p)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--tol", type=float, default=1e-10)

    p = add("coulomb", "regular Coulomb wave function F_L(eta, w) on a grid")
    p.add_argument("--L", type=int, required=True)
    p.add_argument("--eta", type=float, default=0.0)
    p.add_argument("--w-grid", type=grid, required=True, metavar="A:B:STEPS")
    p.add_argument("--check", default="", help="comma separated: ode, recurrence")

    p = add("bessel", "Bessel function J_alpha(w) on a grid")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--w-grid", type=grid, required=True, metavar="A:B:STEPS")

    p = add("expand", "generating-function coefficients")
    _add_b(p)
    p.add_argument("--kind", choices=("appell", "weber", "sincos", "acoeffs"), required=True)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--x", type=float, default=0.0)
    p.add_argument("--w", type=float, default=None)

    p = add("chain", "chain sequence, parameter sequences and gamma")
    p.add_argument("--lambda", dest="lam", type=float, required=True)
    p.add_argument("--n-max", type=int, required=True)
    return parser


def _configure_logging(verbose: bool) -> None:
    level = logging.DEBUG if verbose or ENVS.DEBUG_MODE else logging.WARNING
    logging.basicConfig(stream=sys.stderr, level=level, format="%(levelname)s %(name)s: %(message)s")


def run(argv: Sequence[str], stdout: Optional[TextIO] = None) -> int:
    """
    Parses ``argv``, runs the subcommand and writes its record to ``stdout``.

    Returns:
        The exit code, see the module docstring.
    """
    stdout = sys.stdout if stdout is None else stdout
    try:
        args = build_parser().parse_args(_attach_grid_values(argv))
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE
    _configure_logging(args.verbose)
    executor = config.make_executor(config.EXECUTOR_TYPE, args.parallel) if args.parallel else None
    try:
        record, failed = COMMANDS[args.command](args, executor)
    except DomainError as e:
        logger.error("%s", e)
        return EXIT_DOMAIN
    except (ConvergenceError, ConsistencyError) as e:
        logger.error("%s: %s", type(e).__name__, e)
        return EXIT_NUMERICAL
    finally:
        if executor is not None:
            executor.shutdown()
    stdout.write(record.serialize(args.format))
    if failed:
        logger.error("%s: cross-check exceeded its tolerance", args.command)
        return EXIT_NUMERICAL
    return EXIT_OK


def main() -> None:
    sys.exit(run(sys.argv[1:]))


__all__ = ["OutputRecord", "build_parser", "run", "main"]
