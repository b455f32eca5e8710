"""Bounded sequences modulo the ideal of terms vanishing faster than 1/n.

The ideal o consists of the sequences f with n * f(n) -> 0; on the
canonical carrier that is exactly the sums whose exponents all exceed 1,
so equality modulo o is structural equality of the exponent <= 1 part.
The quotient keeps nonzero infinitesimals but, unlike the cofinite
quotient, makes them nilpotent: a leading exponent a > 0 dies at the power
floor(1/a) + 1.

Little-oh polynomials are the elements whose surviving part is a constant
plus constant multiples of n**-a with 0 < a <= 1; they form a linearly
ordered subring with a total standard-part map.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .errors import NotLittleOh, UnboundedOperand
from .henle import PartialOrder, order_verdict
from .seqrep import (
    PeriodicCoeff,
    Scalar,
    SeqRep,
    Term,
    leading_exponents,
    normalize,
    sign_spectrum,
)

__all__ = [
    "FermatElem",
    "LittleOhDecomposition",
    "in_ideal_o",
    "strip_o",
    "o_part",
    "eq_o",
    "cmp_o",
    "is_little_oh",
    "decompose",
    "nilpotency_index",
    "st_o",
]


def in_ideal_o(x: SeqRep) -> bool:
    """Membership in o: every residue class is identically zero or has
    leading exponent > 1, hence n * x(n) -> 0."""
    return all(e is None or e > 1 for e in leading_exponents(x))


def strip_o(x: SeqRep) -> SeqRep:
    """The part of x outside o: terms with exponent <= 1."""
    return SeqRep(tuple(t for t in x.terms if t.exponent <= 1))


def o_part(x: SeqRep) -> SeqRep:
    """The part of x inside o: terms with exponent > 1."""
    return SeqRep(tuple(t for t in x.terms if t.exponent > 1))


@dataclass(frozen=True, eq=False)
class FermatElem:
    """A bounded sequence, compared modulo o.

    Equality and hashing follow the quotient: two elements are equal when
    their difference lies in o.
    """

    rep: SeqRep

    def __post_init__(self):
        if not self.rep.is_bounded():
            raise UnboundedOperand("representative has a growing term")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FermatElem):
            return NotImplemented
        return strip_o(self.rep) == strip_o(other.rep)

    def __hash__(self) -> int:
        return hash(strip_o(self.rep))

    def __add__(self, other: "FermatElem") -> "FermatElem":
        return FermatElem(self.rep + other.rep)

    def __sub__(self, other: "FermatElem") -> "FermatElem":
        return FermatElem(self.rep - other.rep)

    def __neg__(self) -> "FermatElem":
        return FermatElem(-self.rep)

    def __mul__(self, other: Union["FermatElem", Scalar]) -> "FermatElem":
        if isinstance(other, FermatElem):
            return FermatElem(self.rep * other.rep)
        return FermatElem(self.rep.scale(other))

    def __rmul__(self, other: Scalar) -> "FermatElem":
        return FermatElem(self.rep.scale(other))

    def __pow__(self, k: int) -> "FermatElem":
        return FermatElem(self.rep**k)


def eq_o(x: FermatElem, y: FermatElem) -> bool:
    """Equality modulo o."""
    return in_ideal_o(x.rep - y.rep)


def cmp_o(x: FermatElem, y: FermatElem) -> PartialOrder:
    """Order modulo o: x <= y iff x(n) <= y(n) + z(n) eventually for some z in o.

    Implemented by stripping the o-part from the difference and deciding as
    in the cofinite order: a z in o is o(1/n) and can never overturn a
    surviving term with exponent <= 1, while the stripped part itself is a
    valid witness z.
    """
    return order_verdict(sign_spectrum(strip_o(y.rep - x.rep)))


def is_little_oh(x: FermatElem) -> bool:
    """Whether x is a constant plus constant multiples of n**-a modulo o,
    i.e. every term with exponent <= 1 has a constant coefficient."""
    return all(t.coeff.period == 1 for t in x.rep.terms if t.exponent <= 1)


@dataclass(frozen=True)
class LittleOhDecomposition:
    """Standard part, infinitesimal (coefficient, exponent) pairs with
    0 < exponent <= 1, and the discarded o-part."""

    standard_part: Fraction
    infinitesimal_terms: tuple[tuple[Fraction, Fraction], ...]
    discarded: SeqRep

    def reconstruct(self) -> SeqRep:
        raw = list(self.discarded.terms)
        if self.standard_part != 0:
            raw.append(Term(PeriodicCoeff.of(self.standard_part), Fraction(0)))
        raw.extend(Term(PeriodicCoeff.of(alpha), a) for alpha, a in self.infinitesimal_terms)
        return normalize(raw)


def decompose(x: FermatElem) -> LittleOhDecomposition:
    """Split a little-oh polynomial into its canonical data."""
    if not is_little_oh(x):
        raise NotLittleOh("a term with exponent <= 1 has a non-constant coefficient")
    r = Fraction(0)
    infml = []
    for t in x.rep.terms:
        if t.exponent == 0:
            r = t.coeff.values[0]
        elif t.exponent <= 1:
            infml.append((t.coeff.values[0], t.exponent))
    return LittleOhDecomposition(r, tuple(infml), o_part(x.rep))


def nilpotency_index(x: FermatElem) -> Optional[int]:
    """Least k with x**k = 0 modulo o, or None when no power vanishes.

    A class with leading exponent 0 keeps a nonzero limit under every
    power, so no index exists.  Otherwise the smallest leading exponent
    a > 0 controls the index: k * a must exceed 1, giving floor(1/a) + 1.
    The zero element has index 1.
    """
    if in_ideal_o(x.rep):
        return 1
    if any(t.exponent == 0 for t in x.rep.terms):
        return None
    a_min = min(e for e in leading_exponents(x.rep) if e is not None)
    return int(Fraction(1) / a_min) + 1


def st_o(x: FermatElem) -> Optional[Fraction]:
    """The rational within every 1/m of x modulo o, when one exists.

    Defined exactly when the exponent-0 coefficient is constant across
    residue classes (and taken as 0 when absent); in particular total on
    little-oh polynomials.
    """
    r = Fraction(0)
    for t in x.rep.terms:
        if t.exponent == 0:
            if t.coeff.period != 1:
                return None
            r = t.coeff.values[0]
    return r
