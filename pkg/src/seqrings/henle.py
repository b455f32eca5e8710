"""The sequence ring modulo eventual agreement: a partially ordered ring.

Two sequences are identified when they agree from some index on, and
x <= y holds when {n : x(n) <= y(n)} is cofinite.  On the canonical
carrier the identification is structural equality, so elements need no
separate normal form; the order is decided from the sign spectrum of the
difference.  The ring has nonzero infinitesimals and zero divisors but no
nilpotent elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Union

from .seqrep import (
    Scalar,
    SeqRep,
    Sign,
    SignSpectrum,
    alternating,
    constant,
    eventually_zero,
    leading_exponents,
    sign_spectrum,
)

__all__ = [
    "HenleElem",
    "PartialOrder",
    "Classification",
    "eq_f",
    "cmp_f",
    "classify",
    "st_f",
    "zero_divisor_witness",
    "order_verdict",
]


class PartialOrder(Enum):
    EQUAL = "Equal"
    LESS = "Less"
    GREATER = "Greater"
    INCOMPARABLE = "Incomparable"


@dataclass(frozen=True)
class Classification:
    finite: bool
    infinitesimal: bool
    infinite: bool


@dataclass(frozen=True)
class HenleElem:
    rep: SeqRep

    def __add__(self, other: "HenleElem") -> "HenleElem":
        return HenleElem(self.rep + other.rep)

    def __sub__(self, other: "HenleElem") -> "HenleElem":
        return HenleElem(self.rep - other.rep)

    def __neg__(self) -> "HenleElem":
        return HenleElem(-self.rep)

    def __mul__(self, other: Union["HenleElem", Scalar]) -> "HenleElem":
        if isinstance(other, HenleElem):
            return HenleElem(self.rep * other.rep)
        return HenleElem(self.rep.scale(other))

    def __rmul__(self, other: Scalar) -> "HenleElem":
        return HenleElem(self.rep.scale(other))

    def __pow__(self, k: int) -> "HenleElem":
        return HenleElem(self.rep**k)


def eq_f(x: HenleElem, y: HenleElem) -> bool:
    """Equality modulo eventual agreement."""
    return eventually_zero(x.rep - y.rep)


def order_verdict(spectrum: SignSpectrum) -> PartialOrder:
    """Partial-order verdict for x vs y from the spectrum of y - x."""
    signs = set(spectrum.signs)
    if signs == {Sign.ZERO}:
        return PartialOrder.EQUAL
    if Sign.NEG not in signs:
        return PartialOrder.LESS
    if Sign.POS not in signs:
        return PartialOrder.GREATER
    return PartialOrder.INCOMPARABLE


def cmp_f(x: HenleElem, y: HenleElem) -> PartialOrder:
    """Compare under the cofinite order; Incomparable when the difference
    is eventually positive on one residue class and negative on another."""
    return order_verdict(sign_spectrum(y.rep - x.rep))


def classify(x: HenleElem) -> Classification:
    """Finite / infinitesimal / infinite flags from per-class leading exponents.

    Finite means -m <= x <= m eventually for some integer m, which on the
    carrier is a nonnegative leading exponent on every class; infinitesimal
    tightens that to strictly positive on every class that is not
    identically zero, matching -1/m <= x <= 1/m for every m.
    """
    leads = [e for e in leading_exponents(x.rep) if e is not None]
    return Classification(
        finite=all(e >= 0 for e in leads),
        infinitesimal=all(e > 0 for e in leads),
        infinite=any(e < 0 for e in leads),
    )


def st_f(x: HenleElem) -> Optional[Fraction]:
    """The unique rational infinitely close to x, when one exists.

    Requires x finite and the exponent-0 coefficient constant across
    residue classes; otherwise no single rational is within 1/m of x
    eventually for every m, and None is returned.
    """
    if any(t.exponent < 0 for t in x.rep.terms):
        return None
    r = Fraction(0)
    for t in x.rep.terms:
        if t.exponent == 0:
            if t.coeff.period != 1:
                return None
            r = t.coeff.values[0]
    return r


def zero_divisor_witness() -> tuple[HenleElem, HenleElem]:
    """A pair of nonzero elements whose product is zero: 1-(-1)**n and 1+(-1)**n."""
    a = constant(1) - alternating()
    b = constant(1) + alternating()
    return HenleElem(a), HenleElem(b)
