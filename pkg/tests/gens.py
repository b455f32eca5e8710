"""Shared element generators: hypothesis strategies and seeded-random builders."""

from __future__ import annotations

import random
from fractions import Fraction

from hypothesis import strategies as st

from seqrings.fermat import FermatElem
from seqrings.henle import HenleElem
from seqrings.hyperreal import Selector
from seqrings.seqrep import PeriodicCoeff, SeqRep, Term, normalize

EXP_DENOMS = (1, 2, 3, 4)


# ---------------------------------------------------------------------------
# hypothesis strategies

def rationals(lo: int = -9, hi: int = 9, max_den: int = 9) -> st.SearchStrategy[Fraction]:
    return st.builds(Fraction, st.integers(lo, hi), st.integers(1, max_den))


def coeffs(max_period: int = 4) -> st.SearchStrategy[PeriodicCoeff]:
    return (
        st.lists(rationals(), min_size=1, max_size=max_period)
        .map(lambda vs: PeriodicCoeff.of(*vs))
        .filter(lambda c: not c.is_zero())
    )


def exponents(lo: int = -6, hi: int = 10, denoms=EXP_DENOMS) -> st.SearchStrategy[Fraction]:
    return st.builds(lambda n, d: Fraction(n, d), st.integers(lo, hi), st.sampled_from(denoms))


def terms(exps=None) -> st.SearchStrategy[Term]:
    return st.builds(Term, coeffs(), exps if exps is not None else exponents())


def seq_reps(max_terms: int = 3, exps=None) -> st.SearchStrategy[SeqRep]:
    return st.lists(terms(exps), min_size=0, max_size=max_terms).map(normalize)


def nonzero_seq_reps(max_terms: int = 3, exps=None) -> st.SearchStrategy[SeqRep]:
    return seq_reps(max_terms, exps).filter(lambda x: not x.is_zero())


def integer_exp_reps(max_terms: int = 3) -> st.SearchStrategy[SeqRep]:
    return seq_reps(max_terms, exps=exponents(denoms=(1,)))


def bounded_reps(max_terms: int = 3) -> st.SearchStrategy[SeqRep]:
    return seq_reps(max_terms, exps=exponents(lo=0))


def little_oh_reps() -> st.SearchStrategy[SeqRep]:
    """r + sum of alpha*n^-a with 0 < a <= 1, plus a periodic o-part."""
    unit_exps = st.tuples(st.integers(1, 4), st.integers(1, 4)).map(
        lambda t: Fraction(min(t[0], t[1]), t[1])
    )
    surviving = st.lists(st.tuples(rationals(), unit_exps), min_size=0, max_size=2)
    header = rationals()
    o_tail = seq_reps(max_terms=1, exps=exponents(lo=5, hi=12, denoms=(1, 2, 4)))

    def build(r, pairs, tail):
        raw = [Term(PeriodicCoeff.of(r), Fraction(0))] if r != 0 else []
        raw += [Term(PeriodicCoeff.of(al), a) for al, a in pairs if al != 0]
        return normalize(raw) + tail

    return st.builds(build, header, surviving, o_tail)


# ---------------------------------------------------------------------------
# seeded-random builders (for counted acceptance runs)

def rand_rational(rng: random.Random, lo: int = -9, hi: int = 9, max_den: int = 9,
                  nonzero: bool = False) -> Fraction:
    while True:
        q = Fraction(rng.randint(lo, hi), rng.randint(1, max_den))
        if q != 0 or not nonzero:
            return q


def rand_coeff(rng: random.Random, max_period: int = 4) -> PeriodicCoeff:
    while True:
        values = [rand_rational(rng) for _ in range(rng.randint(1, max_period))]
        c = PeriodicCoeff.of(*values)
        if not c.is_zero():
            return c


def rand_exponent(rng: random.Random, lo: int = -6, hi: int = 10, denoms=EXP_DENOMS) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.choice(denoms))


def rand_seqrep(rng: random.Random, max_terms: int = 3, max_period: int = 4,
                lo: int = -6, hi: int = 10, denoms=EXP_DENOMS) -> SeqRep:
    raw = [
        Term(rand_coeff(rng, max_period), rand_exponent(rng, lo, hi, denoms))
        for _ in range(rng.randint(0, max_terms))
    ]
    return normalize(raw)


def rand_nonzero_henle(rng: random.Random, max_terms: int = 2, max_period: int = 3) -> HenleElem:
    while True:
        x = rand_seqrep(rng, max_terms=max_terms, max_period=max_period, denoms=(1, 2, 3))
        if not x.is_zero():
            return HenleElem(x)


def rand_finite_henle(rng: random.Random) -> HenleElem:
    return HenleElem(rand_seqrep(rng, lo=0))


def rand_bounded(rng: random.Random, max_terms: int = 3) -> FermatElem:
    return FermatElem(rand_seqrep(rng, max_terms=max_terms, lo=0))


def rand_little_oh(rng: random.Random, infinitesimal: bool = False) -> FermatElem:
    raw = []
    if not infinitesimal and rng.random() < 0.7:
        r = rand_rational(rng, nonzero=True)
        raw.append(Term(PeriodicCoeff.of(r), Fraction(0)))
    for _ in range(rng.randint(0 if raw else 1, 2)):
        if rng.random() < 0.8:
            den = rng.choice((1, 2, 3, 4))
            a = Fraction(rng.randint(1, den), den)
            raw.append(Term(PeriodicCoeff.of(rand_rational(rng, nonzero=True)), a))
        else:
            a = Fraction(rng.randint(5, 12), rng.choice((1, 2, 4)))
            raw.append(Term(rand_coeff(rng), a))
    rep = normalize(raw)
    if infinitesimal and rep.is_zero():
        return rand_little_oh(rng, infinitesimal=True)
    return FermatElem(rep)


def rand_in_o(rng: random.Random, nonzero: bool = False) -> SeqRep:
    """A member of the ideal: every exponent > 1."""
    raw = [
        Term(rand_coeff(rng), rand_exponent(rng, lo=5, hi=12, denoms=(1, 2, 4)))
        for _ in range(rng.randint(0, 2))
    ]
    x = normalize(raw)
    if nonzero and x.is_zero():
        return rand_in_o(rng, nonzero=True)
    return x


def rand_selector(rng: random.Random, with_overrides: bool = True) -> Selector:
    base = rng.randint(0, 10**6)
    if with_overrides and rng.random() < 0.4:
        hidden = rng.randint(0, 10**6)
        mods = rng.sample((2, 3, 4, 6, 8, 12), k=rng.randint(1, 3))
        return Selector(base, {p: hidden % p for p in mods})
    return Selector(base)


def cancelling_junk(rng: random.Random) -> list[Term]:
    """Raw terms that denote the zero sequence without being structurally empty."""
    t = Term(rand_coeff(rng), rand_exponent(rng))
    return [t, Term(-t.coeff, t.exponent)]
