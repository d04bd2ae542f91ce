"""Logging Set-Up."""


from collections.abc import Sequence
import logging
import sys
from typing import LiteralString


__all__: Sequence[LiteralString] = ('configure_logging',)


_FORMAT: LiteralString = '%(asctime)s %(levelname)s %(name)s: %(message)s'


def configure_logging(verbose: bool = False, /) -> None:
    """Send package logs to the diagnostic stream.

    Only the `shen_ell` logger is touched so that library users keep
    control of the root logger.
    """
    logger: logging.Logger = logging.getLogger('shen_ell')
    logger.setLevel(logging.DEBUG if verbose else logging.WARNING)

    if not logger.handlers:
        handler = logging.StreamHandler(stream=sys.stderr)
        handler.setFormatter(logging.Formatter(_FORMAT))
        logger.addHandler(handler)
