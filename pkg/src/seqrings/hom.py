"""Canonical maps between the quotient views, with law-checking harnesses.

The coset-reinterpretation maps are induced by ideal inclusions: the
eventually-zero sequences sit inside o, so a finite element of the
cofinite quotient determines an element of the bounded quotient (map i);
and every cofinite set is ultrafilter-large, so any element determines a
hyperreal (map j).  The reverse direction fails: o is strictly coarser, so
re-reading a bounded-quotient coset in the cofinite quotient is not
well-defined, and ``reverse_map_witness`` exhibits the failure.

``check_hom`` verifies additivity, multiplicativity, preservation of 1 and
(non-strict) order preservation on supplied sample pairs, for i, j and the
two standard-part maps.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Optional, Union

from .errors import DomainViolation, InfiniteElement
from .fermat import FermatElem, cmp_o, eq_o, st_o
from .henle import HenleElem, PartialOrder, cmp_f, st_f
from .hyperreal import HyperElem, Selector, TotalOrder, cmp_u, eq_u
from .seqrep import nth_power, one

__all__ = ["HomReport", "Counterexample", "map_i", "map_j", "check_hom", "reverse_map_witness"]


def map_i(x: HenleElem) -> FermatElem:
    """Reinterpret a finite element in the bounded quotient."""
    if any(t.exponent < 0 for t in x.rep.terms):
        raise InfiniteElement("map i is only defined on finite elements")
    return FermatElem(x.rep)


def map_j(x: HenleElem) -> HyperElem:
    """Reinterpret an element in the hyperreal view."""
    return HyperElem(x.rep)


@dataclass(frozen=True)
class Counterexample:
    law: str
    inputs: tuple[str, str]
    outputs: tuple[str, str]


@dataclass(frozen=True)
class HomReport:
    additivity_ok: bool
    multiplicativity_ok: bool
    unit_ok: bool
    order_preserved_ok: bool
    counterexample: Optional[Counterexample]

    @property
    def all_ok(self) -> bool:
        return (
            self.additivity_ok
            and self.multiplicativity_ok
            and self.unit_ok
            and self.order_preserved_ok
        )


Elem = Union[HenleElem, FermatElem]


@dataclass(frozen=True)
class _MapSpec:
    in_domain: Callable[[Elem], bool]
    apply: Callable[[Elem], object]
    eq: Callable[[object, object], bool]
    le_domain: Callable[[Elem, Elem], bool]
    le_codomain: Callable[[object, object], bool]
    one_domain: Elem
    one_codomain: object


def _le_f(x: HenleElem, y: HenleElem) -> bool:
    return cmp_f(x, y) in (PartialOrder.LESS, PartialOrder.EQUAL)


def _le_o(x: FermatElem, y: FermatElem) -> bool:
    return cmp_o(x, y) in (PartialOrder.LESS, PartialOrder.EQUAL)


def _spec_for(name: str, selector: Selector) -> _MapSpec:
    henle_one = HenleElem(one())
    if name == "i":
        return _MapSpec(
            in_domain=lambda x: all(t.exponent >= 0 for t in x.rep.terms),
            apply=map_i,
            eq=eq_o,
            le_domain=_le_f,
            le_codomain=_le_o,
            one_domain=henle_one,
            one_codomain=FermatElem(one()),
        )
    if name == "j":
        return _MapSpec(
            in_domain=lambda x: True,
            apply=map_j,
            eq=lambda a, b: eq_u(a, b, selector),
            le_domain=_le_f,
            le_codomain=lambda a, b: cmp_u(a, b, selector) in (TotalOrder.LT, TotalOrder.EQ),
            one_domain=henle_one,
            one_codomain=HyperElem(one()),
        )
    if name in ("stF", "st_f"):
        return _MapSpec(
            in_domain=lambda x: st_f(x) is not None,
            apply=st_f,
            eq=lambda a, b: a == b,
            le_domain=_le_f,
            le_codomain=lambda a, b: a <= b,
            one_domain=henle_one,
            one_codomain=Fraction(1),
        )
    if name in ("stO", "st_o"):
        return _MapSpec(
            in_domain=lambda x: st_o(x) is not None,
            apply=st_o,
            eq=lambda a, b: a == b,
            le_domain=_le_o,
            le_codomain=lambda a, b: a <= b,
            one_domain=FermatElem(one()),
            one_codomain=Fraction(1),
        )
    raise ValueError(f"unknown map {name!r}; expected one of i, j, stF, stO")


def check_hom(
    name: str,
    samples: Iterable[tuple[Elem, Elem]],
    selector: Optional[Selector] = None,
) -> HomReport:
    """Verify the ring-homomorphism and order laws of a map on sample pairs.

    Raises DomainViolation when a sample breaks the map's precondition.
    The first failing law is recorded as the counterexample.
    """
    spec = _spec_for(name, selector if selector is not None else Selector(0))
    flags = {"additivity": True, "multiplicativity": True, "unit": True, "order": True}
    counterexample: Optional[Counterexample] = None

    def show(v) -> str:
        from .parser import format_seq

        return format_seq(v.rep) if hasattr(v, "rep") else str(v)

    def record(law: str, x, y, lhs, rhs):
        nonlocal counterexample
        flags[law] = False
        if counterexample is None:
            counterexample = Counterexample(law, (show(x), show(y)), (show(lhs), show(rhs)))

    if not spec.eq(spec.apply(spec.one_domain), spec.one_codomain):
        record("unit", spec.one_domain, spec.one_domain, spec.apply(spec.one_domain), spec.one_codomain)

    for x, y in samples:
        if not (spec.in_domain(x) and spec.in_domain(y)):
            raise DomainViolation(f"sample outside the domain of map {name}")
        fx, fy = spec.apply(x), spec.apply(y)
        lhs, rhs = spec.apply(x + y), fx + fy
        if not spec.eq(lhs, rhs):
            record("additivity", x, y, lhs, rhs)
        lhs, rhs = spec.apply(x * y), fx * fy
        if not spec.eq(lhs, rhs):
            record("multiplicativity", x, y, lhs, rhs)
        if spec.le_domain(x, y) and not spec.le_codomain(fx, fy):
            record("order", x, y, fx, fy)
        elif spec.le_domain(y, x) and not spec.le_codomain(fy, fx):
            record("order", y, x, fy, fx)

    return HomReport(
        additivity_ok=flags["additivity"],
        multiplicativity_ok=flags["multiplicativity"],
        unit_ok=flags["unit"],
        order_preserved_ok=flags["order"],
        counterexample=counterexample,
    )


def reverse_map_witness() -> tuple[FermatElem, FermatElem]:
    """Two representatives equal modulo o but not modulo eventual agreement:
    1/n and 1/n + 1/n**2.  No map sending bounded-quotient cosets to
    cofinite-quotient cosets can be well-defined on this pair."""
    a = nth_power(-1)
    return FermatElem(a), FermatElem(a + nth_power(-2))
