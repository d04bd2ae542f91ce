"""IO Utilities."""


from collections.abc import Iterator, Sequence
from contextlib import contextmanager
from pathlib import Path
import re
import sys
from typing import LiteralString, Optional, TextIO


__all__: Sequence[LiteralString] = 'STDOUT', 'open_output', 'format_real', 'format_threshold'


STDOUT: LiteralString = '-'

_EXPONENT_PADDING: re.Pattern = re.compile(r'e([+-])0*(\d)')


@contextmanager
def open_output(target: Optional[Path | str] = None, /) -> Iterator[TextIO]:
    """Yield a text stream for CSV output.

    `None` or `-` means standard output, which is never closed here.
    Files are opened with `\\n` newlines so records are byte-identical
    across platforms.
    """
    if target is None or str(target) == STDOUT:
        yield sys.stdout
        sys.stdout.flush()
        return

    with open(target, mode='w', encoding='utf-8', newline='') as stream:
        yield stream


def format_real(value: float, /) -> str:
    """Format a real number with 17 significant digits."""
    return f'{value:.17g}'


def format_threshold(value: float, /) -> str:
    """Format a tolerance compactly, e.g. `1e-8`."""
    return _EXPONENT_PADDING.sub(lambda match: f'e{match[1].lstrip("+")}{match[2]}',
                                 f'{value:g}')
