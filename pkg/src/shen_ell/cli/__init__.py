"""Command-Line Interface: `shen-ell eval | periods | verify | table`."""


from argparse import ArgumentParser, Namespace
from collections.abc import Callable, Sequence
import logging
import sys
from typing import LiteralString, Optional

from ..errors import DomainError, PoleError, ShenEllError
from .._util.io import STDOUT
from .._util.log import configure_logging

from .commands import (EXIT_POLE, EXIT_USAGE, EXIT_VERIFY_FAILED,
                       cmd_eval, cmd_periods, cmd_table, cmd_verify)
from .config import (RunConfig, Suite,
                     default_tolerance, parse_complex, parse_real)


__all__: Sequence[LiteralString] = ('RunConfig', 'Suite', 'main', 'build_parser',
                                    'cmd_eval', 'cmd_periods', 'cmd_verify', 'cmd_table')


_LOGGER: logging.Logger = logging.getLogger(__name__)


PROG: LiteralString = 'shen-ell'

_COMMANDS: dict[str, Callable[[RunConfig], int]] = {
    'eval': cmd_eval,
    'periods': cmd_periods,
    'verify': cmd_verify,
    'table': cmd_table,
}


def build_parser() -> ArgumentParser:
    """Build the argument parser with one sub-command per operation."""
    common = ArgumentParser(add_help=False)
    common.add_argument('--tol', default=None,
                        help='tolerance (default: $SHEN_ELL_TOL, else 1e-8)')
    common.add_argument('--output', default=STDOUT, help='CSV output path (default: stdout)')
    common.add_argument('--jobs', type=int, default=1, help='worker threads')
    common.add_argument('--verbose', action='store_true', help='debug logging on stderr')

    modulus = ArgumentParser(add_help=False)
    modulus.add_argument('--signature', type=int, default=4, help='3 or 4')
    modulus.add_argument('--kappa2', default='0.5', help='squared modulus in (0, 1)')

    parser = ArgumentParser(prog=PROG,
                            description="Shen's elliptic functions dn3 & dn4 "
                                        'and their coperiodic Weierstrass functions')
    commands = parser.add_subparsers(dest='command', required=True)

    point = commands.add_parser('eval', parents=[common, modulus],
                                help='evaluate at a complex point')
    point.add_argument('--z', default='0', help='complex point a+bi')

    commands.add_parser('periods', parents=[common, modulus],
                        help='half-periods by series and by quadrature')

    verify = commands.add_parser('verify', parents=[common],
                                 help='run a verification suite')
    verify.add_argument('--suite', default=Suite.ALL.value,
                        choices=[suite.value for suite in Suite])

    table = commands.add_parser('table', parents=[common, modulus],
                                help='real-line values from both constructions')
    table.add_argument('--grid', type=int, default=101, help='number of rows (>= 2)')

    return parser


def _config(args: Namespace, /) -> RunConfig:
    return RunConfig(signature=getattr(args, 'signature', 4),
                     kappa2=parse_real(getattr(args, 'kappa2', '0.5')),
                     z=parse_complex(getattr(args, 'z', '0')),
                     grid=getattr(args, 'grid', 2),
                     tol=default_tolerance() if args.tol is None else parse_real(args.tol),
                     output=args.output,
                     suite=getattr(args, 'suite', Suite.ALL),
                     jobs=args.jobs,
                     verbose=args.verbose)


def main(argv: Optional[Sequence[str]] = None, /) -> int:
    """Run the command line; return the process exit code.

    0 success, 1 verification failure, 2 usage or domain error, 3 pole.
    """
    parser: ArgumentParser = build_parser()

    try:
        args: Namespace = parser.parse_args(argv)
    except SystemExit as exit_:
        return exit_.code if isinstance(exit_.code, int) else EXIT_USAGE

    configure_logging(args.verbose)

    try:
        cfg: RunConfig = _config(args)
        _LOGGER.debug('running %s with %r', args.command, cfg)
        return _COMMANDS[args.command](cfg)

    except PoleError as err:
        sys.stderr.write(f'{PROG}: pole: {err}\n')
        return EXIT_POLE

    except (DomainError, OSError) as err:
        sys.stderr.write(f'{PROG}: error: {err}\n')
        return EXIT_USAGE

    except ShenEllError as err:
        sys.stderr.write(f'{PROG}: numerical failure: {err}\n')
        return EXIT_VERIFY_FAILED
