"""Run Configuration."""


from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from enum import StrEnum
import math
import os
import re
from typing import LiteralString, Self

from ..errors import DomainError
from ..hypergeometric import Modulus, Signature
from .._util.io import STDOUT


__all__: Sequence[LiteralString] = ('DEFAULT_TOLERANCE', 'TOLERANCE_ENV_VAR',
                                    'Suite', 'RunConfig',
                                    'default_tolerance', 'parse_complex', 'parse_real')


DEFAULT_TOLERANCE: float = 1e-8
TOLERANCE_ENV_VAR: LiteralString = 'SHEN_ELL_TOL'

_IMAGINARY_UNIT: re.Pattern = re.compile(r'[ij]$')


class Suite(StrEnum):
    """Verification suites."""

    ALL: str = 'all'
    HYPERGEOMETRIC: str = 'hypergeometric'
    WEIERSTRASS: str = 'weierstrass'
    MODULAR: str = 'modular'
    SHEN: str = 'shen'


def parse_real(literal: str, /) -> float:
    """Parse a finite real number."""
    try:
        value: float = float(literal)
    except ValueError as err:
        raise DomainError(f'*** {literal!r} NOT A REAL NUMBER ***') from err

    if not math.isfinite(value):
        raise DomainError(f'*** {literal!r} NOT FINITE ***')

    return value


def parse_complex(literal: str, /) -> complex:
    """Parse `a+bi`, `a-bi`, `a` or `bi`, with optional whitespace.

    Decimal parts are rounded correctly, so values printed with 17
    significant digits parse back bit-exactly.
    """
    compact: str = ''.join(literal.split())
    compact = _IMAGINARY_UNIT.sub('j', compact)

    try:
        value: complex = complex(compact)
    except ValueError as err:
        raise DomainError(f'*** {literal!r} NOT A COMPLEX NUMBER OF THE FORM a+bi ***') from err

    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        raise DomainError(f'*** {literal!r} NOT FINITE ***')

    return value


def default_tolerance(environ: Mapping[str, str] = os.environ, /) -> float:
    """Tolerance from the SHEN_ELL_TOL environment variable, else 1e-8."""
    literal: str | None = environ.get(TOLERANCE_ENV_VAR)
    if literal is None:
        return DEFAULT_TOLERANCE

    tol: float = parse_real(literal)
    if tol <= 0:
        raise DomainError(f'*** {TOLERANCE_ENV_VAR}={literal} NOT POSITIVE ***')
    return tol


@dataclass(frozen=True)
class RunConfig:
    """Validated options of one command-line run."""

    signature: Signature = Signature.FOUR
    kappa2: float = 0.5
    z: complex = 0j
    grid: int = 2
    tol: float = DEFAULT_TOLERANCE
    output: str = STDOUT
    suite: Suite = Suite.ALL
    jobs: int = 1
    verbose: bool = False

    def __post_init__(self: Self, /) -> None:
        """Validate."""
        object.__setattr__(self, 'signature', Signature.from_label(self.signature))
        object.__setattr__(self, 'z', complex(self.z))

        if not (math.isfinite(self.kappa2) and 0 < self.kappa2 < 1):
            raise DomainError(f'*** kappa^2={self.kappa2} NOT IN (0, 1) ***')

        if self.grid < 2:
            raise DomainError(f'*** GRID SIZE {self.grid} BELOW 2 ***')

        if not (math.isfinite(self.tol) and self.tol > 0):
            raise DomainError(f'*** TOLERANCE {self.tol} NOT POSITIVE ***')

        if self.jobs < 1:
            raise DomainError(f'*** JOBS {self.jobs} BELOW 1 ***')

        try:
            object.__setattr__(self, 'suite', Suite(self.suite))
        except ValueError as err:
            raise DomainError(f'*** UNKNOWN SUITE {self.suite!r} ***') from err

    @property
    def modulus(self: Self, /) -> Modulus:
        """Modulus with kappa^2 kept exactly as given."""
        return Modulus.from_kappa2(self.kappa2)
