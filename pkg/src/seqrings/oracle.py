"""Numeric cross-checks by direct evaluation at concrete indices.

Evaluation is exact rational arithmetic whenever every exponent is an
integer.  Fractional powers are approximated by scaled integer roots with a
guaranteed relative error below 2**-64 per term (the working scale is
2**80); every approximate sample carries an absolute error bound, and signs
are only certified when the value clears its bound.  The empirical verdicts
here corroborate the symbolic engine from the outside; nothing computed
here feeds back into it.

Fixed sampling constants: 8 tail samples per residue class for sign
estimation, a 10**-6 decay cutoff and a 10**6 growth cutoff for the
n * x(n) trend.  ``conclusive_sample_size`` returns an N large enough that
both empirical verdicts operate in the asymptotic regime of the given
sequence (leading terms dominating their tails by a factor of 32).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional

from .errors import InconclusiveSample
from .seqrep import SeqRep, Sign, SignSpectrum, residue_profiles, spectrum_modulus

__all__ = [
    "Sample",
    "Trend",
    "eval_at",
    "empirical_spectrum",
    "empirical_limit_nx",
    "conclusive_sample_size",
    "REL_ERROR_BITS",
    "TAIL_SAMPLES",
    "DECAY_CUTOFF",
    "GROWTH_CUTOFF",
]

REL_ERROR_BITS = 64             # guaranteed per-term relative error is 2**-64
_SCALE_BITS = 80                # internal root precision (stronger than the guarantee)
_SCALE = 1 << _SCALE_BITS
TAIL_SAMPLES = 8
DECAY_CUTOFF = Fraction(1, 10**6)
GROWTH_CUTOFF = Fraction(10**6)
_LADDER_RUNGS = 8


def _iroot(m: int, q: int) -> int:
    """Floor of the q-th root of m >= 0."""
    if m < 0 or q < 1:
        raise ValueError("root of a negative number or nonpositive degree")
    if m == 0:
        return 0
    if q == 1:
        return m
    x = 1 << (-(-m.bit_length() // q))
    while True:
        y = ((q - 1) * x + m // x ** (q - 1)) // q
        if y >= x:
            return x
        x = y


def _pow_at(n: int, a: Fraction) -> tuple[Fraction, bool, Fraction]:
    """n**a as (value, exact, relative error bound)."""
    p, q = a.numerator, a.denominator
    if q == 1:
        v = Fraction(n**p) if p >= 0 else Fraction(1, n ** (-p))
        return v, True, Fraction(0)
    t = n ** abs(p)
    r = _iroot(t << (q * _SCALE_BITS), q)
    exact = r**q == t << (q * _SCALE_BITS)
    v = Fraction(r, _SCALE)
    rel = Fraction(0) if exact else Fraction(2, r)
    if p < 0:
        v = 1 / v
    return v, exact, rel


@dataclass(frozen=True)
class Sample:
    """One evaluation x(n); ``error`` is an absolute bound, 0 when exact."""

    n: int
    value: Fraction
    exact: bool
    error: Fraction


def eval_at(x: SeqRep, n: int) -> Sample:
    """Evaluate the sum at index n >= 1."""
    if n < 1:
        raise ValueError("sequences are indexed from n = 1")
    total = Fraction(0)
    err = Fraction(0)
    exact = True
    for t in x.terms:
        c = t.coeff.value_at(n)
        if c == 0:
            continue
        base, term_exact, rel = _pow_at(n, -t.exponent)
        total += c * base
        if not term_exact:
            exact = False
            err += abs(c * base) * rel
    return Sample(n, total, exact, err)


def _certified_sign(s: Sample) -> Optional[Sign]:
    if s.value > s.error:
        return Sign.POS
    if s.value < -s.error:
        return Sign.NEG
    if s.exact or s.error == 0:
        return Sign.ZERO
    return None


def _class_members_desc(N: int, modulus: int, residue: int, count: int) -> list[int]:
    """The ``count`` largest indices n <= N with n % modulus == residue, n >= 1."""
    top = N - ((N - residue) % modulus)
    out = [top - i * modulus for i in range(count)]
    if out[-1] < 1:
        raise InconclusiveSample(
            f"N = {N} leaves fewer than {count} samples in class {residue} mod {modulus}"
        )
    return out


def empirical_spectrum(x: SeqRep, N: int) -> SignSpectrum:
    """Sampled sign per residue class, from the 8 largest class members <= N.

    The samples must be unanimous and sign-certified, otherwise
    InconclusiveSample is raised.  For the entries to equal the eventual
    signs, N must be past the point where each class's leading term
    dominates; ``conclusive_sample_size`` computes such an N.
    """
    p = spectrum_modulus(x)
    signs = []
    for r in range(p):
        seen = set()
        for n in _class_members_desc(N, p, r, TAIL_SAMPLES):
            s = _certified_sign(eval_at(x, n))
            if s is None:
                raise InconclusiveSample(f"sign at n = {n} is below the error bound")
            seen.add(s)
        if len(seen) != 1:
            raise InconclusiveSample(f"mixed signs in the tail of class {r} mod {p}")
        signs.append(seen.pop())
    return SignSpectrum(p, tuple(signs))


class Trend(Enum):
    TENDS_TO_ZERO = "TendsToZero"
    BOUNDED_AWAY = "BoundedAway"
    DIVERGES = "Diverges"
    INCONCLUSIVE = "Inconclusive"


def _class_trend(mags: list[Fraction]) -> Trend:
    if all(m == 0 for m in mags):
        return Trend.TENDS_TO_ZERO
    if all(b <= a for a, b in zip(mags, mags[1:])) and mags[-1] < DECAY_CUTOFF:
        return Trend.TENDS_TO_ZERO
    if mags[-1] > GROWTH_CUTOFF and mags[-1] >= mags[0]:
        return Trend.DIVERGES
    tail = [m for m in mags[-4:] if m > 0]
    if mags[-1] >= DECAY_CUTOFF and tail and max(tail) <= 4 * min(tail):
        return Trend.BOUNDED_AWAY
    return Trend.INCONCLUSIVE


def empirical_limit_nx(x: SeqRep, N: int) -> Trend:
    """Trend of n * x(n) along a geometric ladder up to N, per residue class.

    TendsToZero requires monotone decay below 10**-6 on every class.  The
    overall verdict prefers Diverges, then BoundedAway, then Inconclusive.
    """
    p = spectrum_modulus(x)
    verdicts = []
    for r in range(p):
        first = r if r >= 1 else p
        rungs: list[int] = []
        for k in range(_LADDER_RUNGS - 1, -1, -1):
            target = max(first, N >> k)
            n = target - ((target - r) % p)
            if n >= 1 and (not rungs or n > rungs[-1]):
                rungs.append(n)
        if len(rungs) < 2:
            verdicts.append(Trend.INCONCLUSIVE)
            continue
        mags = [abs(n * eval_at(x, n).value) for n in rungs]
        verdicts.append(_class_trend(mags))
    if any(v is Trend.DIVERGES for v in verdicts):
        return Trend.DIVERGES
    if any(v is Trend.BOUNDED_AWAY for v in verdicts):
        return Trend.BOUNDED_AWAY
    if any(v is Trend.INCONCLUSIVE for v in verdicts):
        return Trend.INCONCLUSIVE
    return Trend.TENDS_TO_ZERO


def _ceil_root(bound: Fraction, g: Fraction) -> int:
    """Least integer n >= 1 with n**g >= bound, for g > 0."""
    if bound <= 1:
        return 1
    u, v = g.numerator, g.denominator
    t = bound**v
    target = -(-t.numerator // t.denominator)
    r = _iroot(target, u)
    if r**u < target:
        r += 1
    return r


def conclusive_sample_size(x: SeqRep) -> int:
    """An N past the asymptotic regime of every residue class of x.

    Beyond N / 2**7 (the bottom of the sampling ladder) each class's leading
    term exceeds the rest of its class by a factor of 32, and n * x(n) has
    cleared the decay or growth cutoff wherever the leading exponent is not
    exactly 1.
    """
    p = spectrum_modulus(x)
    floor = max(10 * p, TAIL_SAMPLES * p + p, 79)
    for prof in residue_profiles(x):
        if not prof:
            continue
        a_star, c_star = prof[0]
        if len(prof) > 1:
            gap = min(a - a_star for a, _ in prof[1:])
            tail_mass = sum(abs(c) for _, c in prof[1:])
            floor = max(floor, _ceil_root(32 * tail_mass / abs(c_star), gap))
        if a_star > 1:
            floor = max(floor, _ceil_root(2 * abs(c_star) / DECAY_CUTOFF, a_star - 1))
        elif a_star < 1:
            floor = max(floor, _ceil_root(2 * GROWTH_CUTOFF / abs(c_star), 1 - a_star))
    return max(10**4, floor << 7)
