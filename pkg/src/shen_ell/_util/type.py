"""Data Types."""


from collections.abc import Sequence
from typing import LiteralString


__all__: Sequence[LiteralString] = 'Num', 'ComplexValue'


Num: type = float | int

# rectangular-form complex numbers are plain builtin complex values
ComplexValue: type = complex
