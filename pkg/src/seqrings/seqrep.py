"""Exact arithmetic on power sums with periodic rational coefficients.

A sequence is stored as a finite sum of terms ``p(n) * n**(-a)`` where ``p``
is a periodic pattern of rationals and the exponent ``a`` is rational; a
negative ``a`` denotes growth.  Sequences are indexed from ``n = 1``.  The
form is canonical: one term per exponent, exponents strictly increasing,
every pattern at its minimal period, no zero terms.  Two distinct canonical
representations denote sequences that disagree at infinitely many indices,
so structural equality is pointwise-eventual equality.

Asymptotic questions are settled per residue class modulo the lcm of the
coefficient periods: restricted to one class every coefficient is a single
rational, the class function is a plain power sum, and its eventual sign is
the sign of the coefficient at the smallest exponent present.  The table of
those signs (the sign spectrum) drives every order and ideal-membership
decision in the quotient views.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import lcm
from typing import Iterable, Optional, Union

Rational = Fraction
Scalar = Union[Fraction, int]

__all__ = [
    "Rational",
    "PeriodicCoeff",
    "Term",
    "SeqRep",
    "Sign",
    "SignSpectrum",
    "normalize",
    "sign_spectrum",
    "spectrum_modulus",
    "residue_profiles",
    "leading_exponents",
    "eventually_zero",
    "zero",
    "one",
    "constant",
    "nth_power",
    "alternating",
    "periodic_seq",
]


def _as_fraction(v: Scalar) -> Fraction:
    return v if isinstance(v, Fraction) else Fraction(v)


def _minimal_pattern(values: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
    """Shortest prefix of ``values`` that tiles it."""
    p = len(values)
    for d in range(1, p + 1):
        if p % d == 0 and all(values[i] == values[i % d] for i in range(p)):
            return values[:d]
    return values


@dataclass(frozen=True)
class PeriodicCoeff:
    """Periodic rational pattern; the value at index n is values[(n-1) % period]."""

    values: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.values:
            raise ValueError("pattern must have at least one value")
        if self.values != _minimal_pattern(self.values):
            raise ValueError("pattern is not at its minimal period")

    @staticmethod
    def of(*values: Scalar) -> "PeriodicCoeff":
        return PeriodicCoeff(_minimal_pattern(tuple(_as_fraction(v) for v in values)))

    @property
    def period(self) -> int:
        return len(self.values)

    def value_at(self, n: int) -> Fraction:
        return self.values[(n - 1) % len(self.values)]

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.values)

    def lifted(self, period: int) -> tuple[Fraction, ...]:
        """Values over a multiple of the own period."""
        if period % len(self.values) != 0:
            raise ValueError("can only lift to a multiple of the period")
        return tuple(self.values[i % len(self.values)] for i in range(period))

    def __add__(self, other: "PeriodicCoeff") -> "PeriodicCoeff":
        p = lcm(self.period, other.period)
        return PeriodicCoeff.of(*(a + b for a, b in zip(self.lifted(p), other.lifted(p))))

    def __mul__(self, other: "PeriodicCoeff") -> "PeriodicCoeff":
        p = lcm(self.period, other.period)
        return PeriodicCoeff.of(*(a * b for a, b in zip(self.lifted(p), other.lifted(p))))

    def __neg__(self) -> "PeriodicCoeff":
        return PeriodicCoeff(tuple(-v for v in self.values))

    def scale(self, c: Scalar) -> "PeriodicCoeff":
        return PeriodicCoeff.of(*(v * _as_fraction(c) for v in self.values))


@dataclass(frozen=True)
class Term:
    """One summand coeff(n) * n**(-exponent); the coefficient is never identically zero."""

    coeff: PeriodicCoeff
    exponent: Fraction

    def __post_init__(self):
        object.__setattr__(self, "exponent", _as_fraction(self.exponent))
        if self.coeff.is_zero():
            raise ValueError("term coefficient must not be identically zero")


@dataclass(frozen=True)
class SeqRep:
    """Canonical finite sum of terms, strictly increasing by exponent."""

    terms: tuple[Term, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))
        exps = [t.exponent for t in self.terms]
        if any(a >= b for a, b in zip(exps, exps[1:])):
            raise ValueError("terms must be strictly increasing by exponent")

    def is_zero(self) -> bool:
        return not self.terms

    def is_bounded(self) -> bool:
        return all(t.exponent >= 0 for t in self.terms)

    def __add__(self, other: "SeqRep") -> "SeqRep":
        if not isinstance(other, SeqRep):
            return NotImplemented
        return normalize(self.terms + other.terms)

    def __sub__(self, other: "SeqRep") -> "SeqRep":
        if not isinstance(other, SeqRep):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "SeqRep":
        return SeqRep(tuple(Term(-t.coeff, t.exponent) for t in self.terms))

    def __mul__(self, other: Union["SeqRep", Scalar]) -> "SeqRep":
        if isinstance(other, SeqRep):
            raw = []
            for t in self.terms:
                for u in other.terms:
                    prod = t.coeff * u.coeff
                    if not prod.is_zero():
                        raw.append(Term(prod, t.exponent + u.exponent))
            return normalize(raw)
        return self.scale(other)

    def __rmul__(self, other: Scalar) -> "SeqRep":
        return self.scale(other)

    def __pow__(self, k: int) -> "SeqRep":
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        acc, base = one(), self
        while k:
            if k & 1:
                acc = acc * base
            k >>= 1
            if k:
                base = base * base
        return acc

    def scale(self, c: Scalar) -> "SeqRep":
        c = _as_fraction(c)
        if c == 0:
            return SeqRep()
        return SeqRep(tuple(Term(t.coeff.scale(c), t.exponent) for t in self.terms))


def normalize(raw: Iterable[Term]) -> SeqRep:
    """Merge equal exponents pointwise, drop vanished terms, sort ascending."""
    merged: dict[Fraction, PeriodicCoeff] = {}
    for t in raw:
        prev = merged.get(t.exponent)
        merged[t.exponent] = t.coeff if prev is None else prev + t.coeff
    kept = [Term(c, e) for e, c in merged.items() if not c.is_zero()]
    kept.sort(key=lambda t: t.exponent)
    return SeqRep(tuple(kept))


# ---------------------------------------------------------------------------
# Factories

def zero() -> SeqRep:
    return SeqRep()


def one() -> SeqRep:
    return constant(1)


def constant(c: Scalar) -> SeqRep:
    c = _as_fraction(c)
    if c == 0:
        return SeqRep()
    return SeqRep((Term(PeriodicCoeff.of(c), Fraction(0)),))


def nth_power(s: Scalar) -> SeqRep:
    """The sequence n**s (so nth_power(-1) is 1/n)."""
    return SeqRep((Term(PeriodicCoeff.of(1), -_as_fraction(s)),)) if s != 0 else one()


def alternating() -> SeqRep:
    """The sequence (-1)**n."""
    return periodic_seq(-1, 1)


def periodic_seq(*values: Scalar) -> SeqRep:
    """The periodic sequence taking values[0] at n = 1, values[1] at n = 2, ..."""
    c = PeriodicCoeff.of(*values)
    if c.is_zero():
        return SeqRep()
    return SeqRep((Term(c, Fraction(0)),))


# ---------------------------------------------------------------------------
# Per-residue-class analysis

class Sign(Enum):
    NEG = "Neg"
    ZERO = "Zero"
    POS = "Pos"


@dataclass(frozen=True)
class SignSpectrum:
    """Eventual pointwise sign on each residue class mod ``modulus``.

    Entry r describes the indices n with n % modulus == r.
    """

    modulus: int
    signs: tuple[Sign, ...]

    def __post_init__(self):
        if self.modulus < 1 or len(self.signs) != self.modulus:
            raise ValueError("spectrum needs one sign per residue class")

    def all_zero(self) -> bool:
        return all(s is Sign.ZERO for s in self.signs)

    def uniform(self) -> bool:
        return len(set(self.signs)) == 1


def spectrum_modulus(x: SeqRep) -> int:
    return lcm(*(t.coeff.period for t in x.terms)) if x.terms else 1


Profile = tuple[tuple[Fraction, Fraction], ...]


def residue_profiles(x: SeqRep) -> tuple[Profile, ...]:
    """Per residue class r mod spectrum_modulus, the (exponent, coefficient)
    pairs with nonzero coefficient on that class, ascending by exponent."""
    p = spectrum_modulus(x)
    out = []
    for r in range(p):
        prof = []
        for t in x.terms:
            v = t.coeff.values[(r - 1) % t.coeff.period]
            if v != 0:
                prof.append((t.exponent, v))
        out.append(tuple(prof))
    return tuple(out)


def leading_exponents(x: SeqRep) -> tuple[Optional[Fraction], ...]:
    """Smallest exponent alive on each class; None on identically-zero classes."""
    return tuple(prof[0][0] if prof else None for prof in residue_profiles(x))


def _sign_of(v: Fraction) -> Sign:
    if v > 0:
        return Sign.POS
    if v < 0:
        return Sign.NEG
    return Sign.ZERO


def sign_spectrum(x: SeqRep) -> SignSpectrum:
    """Eventual sign per residue class: on each class the restriction is a
    plain power sum, dominated by its smallest live exponent."""
    profiles = residue_profiles(x)
    signs = tuple(_sign_of(prof[0][1]) if prof else Sign.ZERO for prof in profiles)
    return SignSpectrum(len(profiles), signs)


def eventually_zero(x: SeqRep) -> bool:
    """Whether x vanishes from some index on.

    On canonical representations this coincides with being the zero sum: a
    surviving term is nonzero on a whole residue class.
    """
    return sign_spectrum(x).all_zero()
