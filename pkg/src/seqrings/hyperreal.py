"""A totally ordered field view of the sequence ring via residue selectors.

Quotienting by a nonprincipal ultrafilter makes the order total, but such a
filter cannot be exhibited.  On this carrier every order or equality
question reduces to picking one residue class of the difference's sign
spectrum, so the only ultrafilter decisions ever consumed are its choices
on the residue-class algebra.  A Selector records exactly those choices:
for every modulus P it elects the class of base mod P, with an optional
coherent table of explicit overrides.  Any nonprincipal ultrafilter
containing the elected arithmetic progressions makes the same decisions,
and ``selector_independent`` detects the verdicts all of them share.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Mapping, Optional, Union

from .errors import InfiniteElement
from .seqrep import (
    Scalar,
    SeqRep,
    Sign,
    residue_profiles,
    sign_spectrum,
    spectrum_modulus,
)

__all__ = ["Selector", "HyperElem", "TotalOrder", "cmp_u", "eq_u", "selector_independent", "st_u"]


class TotalOrder(Enum):
    LT = "Lt"
    EQ = "Eq"
    GT = "Gt"


class Selector:
    """A coherent choice of residue classes, one per modulus.

    ``residue(P)`` is ``overrides[P]`` when present and ``base % P``
    otherwise.  The override table must be coherent: whenever P divides Q
    and both are listed, the residues agree modulo P.
    """

    def __init__(self, base: int = 0, overrides: Optional[Mapping[int, int]] = None):
        if base < 0:
            raise ValueError("selector base must be nonnegative")
        self.base = base
        self.overrides = dict(overrides) if overrides else {}
        for p, r in self.overrides.items():
            if p < 1 or not 0 <= r < p:
                raise ValueError(f"override {r} mod {p} is not a residue class")
        mods = sorted(self.overrides)
        for i, p in enumerate(mods):
            for q in mods[i + 1:]:
                if q % p == 0 and self.overrides[q] % p != self.overrides[p]:
                    raise ValueError(f"overrides for moduli {p} and {q} are incoherent")

    def residue(self, modulus: int) -> int:
        if modulus < 1:
            raise ValueError("modulus must be positive")
        return self.overrides.get(modulus, self.base % modulus)

    def __repr__(self) -> str:
        if self.overrides:
            return f"Selector(base={self.base}, overrides={self.overrides!r})"
        return f"Selector(base={self.base})"


@dataclass(frozen=True)
class HyperElem:
    rep: SeqRep

    def __add__(self, other: "HyperElem") -> "HyperElem":
        return HyperElem(self.rep + other.rep)

    def __sub__(self, other: "HyperElem") -> "HyperElem":
        return HyperElem(self.rep - other.rep)

    def __neg__(self) -> "HyperElem":
        return HyperElem(-self.rep)

    def __mul__(self, other: Union["HyperElem", Scalar]) -> "HyperElem":
        if isinstance(other, HyperElem):
            return HyperElem(self.rep * other.rep)
        return HyperElem(self.rep.scale(other))

    def __rmul__(self, other: Scalar) -> "HyperElem":
        return HyperElem(self.rep.scale(other))

    def __pow__(self, k: int) -> "HyperElem":
        return HyperElem(self.rep**k)


def cmp_u(x: HyperElem, y: HyperElem, sel: Selector) -> TotalOrder:
    """Total comparison: the verdict of the selected residue class of y - x."""
    spectrum = sign_spectrum(y.rep - x.rep)
    entry = spectrum.signs[sel.residue(spectrum.modulus)]
    if entry is Sign.ZERO:
        return TotalOrder.EQ
    return TotalOrder.LT if entry is Sign.POS else TotalOrder.GT


def eq_u(x: HyperElem, y: HyperElem, sel: Selector) -> bool:
    return cmp_u(x, y, sel) is TotalOrder.EQ


def selector_independent(x: HyperElem, y: HyperElem) -> bool:
    """True when every selector compares x and y the same way, i.e. the
    difference has the same eventual sign on all residue classes."""
    return sign_spectrum(y.rep - x.rep).uniform()


def st_u(x: HyperElem, sel: Selector) -> Fraction:
    """Standard part along the selected classes.

    The selected class must be finite (leading exponent >= 0); the result
    is its exponent-0 coefficient, so that x minus the result is
    infinitesimal along every progression the selector elects.
    """
    profiles = residue_profiles(x.rep)
    prof = profiles[sel.residue(len(profiles))]
    if prof and prof[0][0] < 0:
        raise InfiniteElement("element is unbounded on the selected residue class")
    for a, c in prof:
        if a == 0:
            return c
    return Fraction(0)
