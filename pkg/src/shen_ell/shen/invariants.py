"""Invariants of the Coperiodic Weierstrass Functions."""


from collections.abc import Sequence
from fractions import Fraction
from numbers import Real
from typing import LiteralString

from ..errors import DegenerateLatticeError
from ..hypergeometric import Modulus, Signature
from ..modular import TransformResult
from .._util.doc import formula_doc
from ..weierstrass import CubicRoots, Invariants


__all__: Sequence[LiteralString] = ('SPECIAL_VALUE',
                                    'signature_invariants',
                                    'exact_signature_invariants',
                                    'signature_invariants_complementary_form',
                                    'companion_invariants',
                                    'signature_four_roots')


# p_kappa(2 omega'/3) in signature three and p_kappa(omega') in signature four
SPECIAL_VALUE: Fraction = Fraction(-1, 3)


def _discriminant(sig: Signature, k2: Real, /) -> Real:
    # g2^3 - 27 g3^2 factored; positive for every kappa^2 in (0, 1)
    if sig is Signature.THREE:
        return Fraction(4096, 19683) * k2 ** 3 * (1 - k2)
    return k2 * k2 * (1 - k2)


def _polynomial_invariants(sig: Signature, k2: Real, /) -> Invariants:
    if sig is Signature.THREE:
        return Invariants(Fraction(4, 27) * (9 - 8 * k2),
                          Fraction(8, 729) * (27 - 36 * k2 + 8 * k2 * k2),
                          discriminant=_discriminant(sig, k2))
    return Invariants(Fraction(4, 3) - k2, Fraction(8, 27) - k2 / 3,
                      discriminant=_discriminant(sig, k2))


def _checked(sig: Signature, inv: Invariants, /) -> Invariants:
    if inv.is_degenerate:
        raise DegenerateLatticeError(f'*** {sig.name} INVARIANTS {inv} HAVE NON-POSITIVE '
                                     'DISCRIMINANT ***')
    return inv


@formula_doc("""
    THREE: g2 = 4/27 (9 - 8 kappa^2),  g3 = 8/729 (27 - 36 kappa^2 + 8 kappa^4)
    FOUR:  g2 = 4/3 - kappa^2,         g3 = 8/27 - kappa^2 / 3
""")
def signature_invariants(sig: Signature, m: Modulus, /) -> Invariants:
    """Invariants of p_kappa, the Weierstrass function coperiodic with dn3 / dn4."""
    return _checked(sig, _polynomial_invariants(sig, m.kappa2))


def exact_signature_invariants(sig: Signature, kappa2: Fraction, /) -> Invariants:
    """Same as `signature_invariants`, in exact rational arithmetic."""
    assert isinstance(kappa2, Fraction), TypeError(f'*** kappa2 {kappa2!r} NOT A FRACTION ***')
    assert 0 < kappa2 < 1, ValueError(f'*** kappa2={kappa2} NOT IN (0, 1) ***')

    return _checked(sig, _polynomial_invariants(sig, kappa2))


@formula_doc("""
    THREE: g2 = 4/27 (8 lambda^2 + 1),  g3 = 8/729 (8 lambda^4 + 20 lambda^2 - 1)
    FOUR:  g2 = lambda^2 + 1/3,         g3 = lambda^2 / 3 - 1/27
""")
def signature_invariants_complementary_form(sig: Signature, m: Modulus, /) -> Invariants:
    """Same invariants as `signature_invariants`, written in the complementary modulus."""
    l2: float = m.lam2

    if sig is Signature.THREE:
        inv = Invariants(4 / 27 * (8 * l2 + 1), 8 / 729 * (8 * l2 * l2 + 20 * l2 - 1),
                         discriminant=_discriminant(sig, m.kappa2))
    else:
        inv = Invariants(l2 + 1 / 3, l2 / 3 - 1 / 27, discriminant=_discriminant(sig, m.kappa2))

    return _checked(sig, inv)


@formula_doc("""
    THREE: h2 = 4/3 (1 + 8 kappa^2),  h3 = 8/27 (1 - 20 kappa^2 - 8 kappa^4)
    FOUR:  h2 = 4 (1/3 + kappa^2),    h3 = 8 (1/27 - kappa^2 / 3)
""")
def companion_invariants(sig: Signature, m: Modulus, /) -> TransformResult:
    """Closed forms of the invariants of q_kappa, the period-divided companion of p_kappa."""
    k2: float = m.kappa2

    if sig is Signature.THREE:
        return TransformResult(h2=4 / 3 * (1 + 8 * k2),
                               h3=8 / 27 * (1 - 20 * k2 - 8 * k2 * k2),
                               b=SPECIAL_VALUE)

    return TransformResult(h2=4 * (1 / 3 + k2),
                           h3=8 * (1 / 27 - k2 / 3),
                           b=SPECIAL_VALUE)


@formula_doc("""
    4t^3 - g2 t - g3 = 4 (t - 1/6 - lambda/2)(t - 1/6 + lambda/2)(t + 1/3)
""")
def signature_four_roots(m: Modulus, /) -> CubicRoots:
    """Closed-form roots of the signature-four invariant cubic."""
    return CubicRoots(1 / 6 + m.lam / 2, 1 / 6 - m.lam / 2, -1 / 3)
