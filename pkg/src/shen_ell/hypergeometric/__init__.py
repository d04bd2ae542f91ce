"""Hypergeometric Series, Integral & Inversion."""


from collections.abc import Sequence
from typing import LiteralString

from .integral import integrand, incomplete_integral, complete_K, invert_phi
from .modulus import Modulus
from .series import gauss_2f1
from .signature import Signature, THREE, FOUR


__all__: Sequence[LiteralString] = ('Signature', 'THREE', 'FOUR',
                                    'Modulus',
                                    'gauss_2f1',
                                    'integrand', 'incomplete_integral',
                                    'complete_K', 'invert_phi')
