# app/polynomials.py
"""
Sparse multivariate polynomials with coefficients in a CoefficientRing.

Monomials are exponent tuples, one entry per ring variable (variables listed from
largest to smallest). A Polynomial keeps its terms strictly decreasing under the
ring's monomial order and never stores a zero coefficient.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, NamedTuple, Union

from .errors import DimensionMismatchError, NonDivisibleError, UnknownVariableError, ZeroInputError
from .rings import CoefficientRing, RingElement, power_factor, render_sum

Monomial = tuple[int, ...]


class Comparison(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


@lru_cache(maxsize=1 << 16)
def _grevlex_key(mono: Monomial) -> tuple:
    return sum(mono), tuple(-e for e in reversed(mono))


class MonomialOrder(str, enum.Enum):
    LEX = "lex"
    GREVLEX = "grevlex"

    def key(self, mono: Monomial) -> tuple:
        """Sort key: larger monomial, larger key."""
        if self is MonomialOrder.LEX:
            return mono
        return _grevlex_key(mono)


def _check_lengths(a: Monomial, b: Monomial) -> None:
    if len(a) != len(b):
        raise DimensionMismatchError(f"monomials of length {len(a)} and {len(b)}")


def mono_compare(order: MonomialOrder, a: Monomial, b: Monomial) -> Comparison:
    _check_lengths(a, b)
    ka, kb = order.key(a), order.key(b)
    if ka == kb:
        return Comparison.EQUAL
    return Comparison.LESS if ka < kb else Comparison.GREATER


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    _check_lengths(a, b)
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    _check_lengths(a, b)
    return all(x <= y for x, y in zip(a, b))


def mono_div(b: Monomial, a: Monomial) -> Monomial:
    """b / a."""
    if not mono_divides(a, b):
        raise NonDivisibleError(f"monomial {a} does not divide {b}")
    return tuple(y - x for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    _check_lengths(a, b)
    return tuple(max(x, y) for x, y in zip(a, b))


def minimal_monomial_generators(monos: Iterable[Monomial]) -> frozenset[Monomial]:
    """Minimal generating set of the monomial ideal spanned by monos."""
    kept: list[Monomial] = []
    for m in sorted(set(monos), key=lambda m: (sum(m), m)):
        if not any(mono_divides(k, m) for k in kept):
            kept.append(m)
    return frozenset(kept)


class Term(NamedTuple):
    mono: Monomial
    coeff: RingElement


@dataclass(frozen=True)
class PolyRing:
    names: tuple[str, ...]
    order: MonomialOrder
    coeff: CoefficientRing

    @property
    def nvars(self) -> int:
        return len(self.names)

    @property
    def one_mono(self) -> Monomial:
        return (0,) * len(self.names)

    def key(self, mono: Monomial) -> tuple:
        return self.order.key(mono)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise UnknownVariableError(f"unknown variable {name!r}") from None

    def zero(self) -> "Polynomial":
        return Polynomial(self, ())

    def monomial(self, mono: Monomial, coeff: RingElement = None) -> "Polynomial":
        if len(mono) != self.nvars:
            raise DimensionMismatchError(f"monomial {mono} in a ring of {self.nvars} variables")
        c = self.coeff.one if coeff is None else coeff
        return self.zero() if self.coeff.is_zero(c) else Polynomial(self, (Term(tuple(mono), c),))

    def constant(self, c: RingElement) -> "Polynomial":
        return self.monomial(self.one_mono, c)

    def one(self) -> "Polynomial":
        return self.constant(self.coeff.one)

    def gen(self, var: Union[str, int]) -> "Polynomial":
        i = self.index(var) if isinstance(var, str) else var
        return self.monomial(tuple(1 if j == i else 0 for j in range(self.nvars)))

    def from_dict(self, terms: Mapping[Monomial, RingElement]) -> "Polynomial":
        is_zero = self.coeff.is_zero
        kept = [Term(m, c) for m, c in terms.items() if not is_zero(c)]
        kept.sort(key=lambda t: self.order.key(t.mono), reverse=True)
        return Polynomial(self, tuple(kept))

    def mono_factors(self, mono: Monomial) -> list[str]:
        return [power_factor(n, e) for n, e in zip(self.names, mono) if e]

    def format_monomial(self, mono: Monomial) -> str:
        return "*".join(self.mono_factors(mono)) or "1"

    def format(self, p: "Polynomial") -> str:
        items = []
        for mono, c in p.terms:
            tail = self.mono_factors(mono)
            for q, aux in self.coeff.expand(c):
                items.append((q, [power_factor(n, e) for n, e in aux] + tail))
        return render_sum(items)

    def format_term(self, t: Term) -> str:
        return self.format(Polynomial(self, (t,)))


class Polynomial:
    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: tuple[Term, ...]):
        self.ring = ring
        self.terms = terms

    # ---- leading data ----
    def _head(self) -> Term:
        if not self.terms:
            raise ZeroInputError("the zero polynomial has no leading term")
        return self.terms[0]

    @property
    def LT(self) -> Term:
        return self._head()

    @property
    def LM(self) -> Monomial:
        return self._head().mono

    @property
    def LC(self) -> RingElement:
        return self._head().coeff

    def tail(self) -> "Polynomial":
        return Polynomial(self.ring, self.terms[1:])

    # ---- arithmetic ----
    def _same_ring(self, other: "Polynomial") -> None:
        if other.ring != self.ring:
            raise DimensionMismatchError("polynomials from different rings")

    def _combine(self, other: "Polynomial", sign: int) -> "Polynomial":
        self._same_ring(other)
        acc = dict(self.terms)
        zero = self.ring.coeff.zero
        for m, c in other.terms:
            acc[m] = acc.get(m, zero) + c if sign > 0 else acc.get(m, zero) - c
        return self.ring.from_dict(acc)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        return self._combine(other, 1)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self._combine(other, -1)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.ring, tuple(Term(m, -c) for m, c in self.terms))

    def scale(self, c: RingElement) -> "Polynomial":
        return self.term_mul(c, self.ring.one_mono)

    def term_mul(self, coeff: RingElement, mono: Monomial) -> "Polynomial":
        """coeff * x^mono * self. Monomial shifts keep the term order."""
        if self.ring.coeff.is_zero(coeff):
            return self.ring.zero()
        is_zero = self.ring.coeff.is_zero
        out = []
        for m, c in self.terms:
            cc = coeff * c
            if not is_zero(cc):
                out.append(Term(mono_mul(m, mono), cc))
        return Polynomial(self.ring, tuple(out))

    def sub_multiples(self, items: Iterable[tuple[RingElement, Monomial, "Polynomial"]]) -> "Polynomial":
        """self - sum of k * x^shift * g over the (k, shift, g) items."""
        acc = dict(self.terms)
        zero = self.ring.coeff.zero
        is_zero = self.ring.coeff.is_zero
        for k, shift, g in items:
            if is_zero(k):
                continue
            self._same_ring(g)
            for m, c in g.terms:
                key = mono_mul(m, shift)
                acc[key] = acc.get(key, zero) - k * c
        return self.ring.from_dict(acc)

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, Polynomial) and other.ring == self.ring:
            acc: dict[Monomial, RingElement] = {}
            zero = self.ring.coeff.zero
            for m1, c1 in self.terms:
                for m2, c2 in other.terms:
                    key = mono_mul(m1, m2)
                    acc[key] = acc.get(key, zero) + c1 * c2
            return self.ring.from_dict(acc)
        return self.scale(other)

    def __rmul__(self, other) -> "Polynomial":
        return self.scale(other)

    # ---- protocol ----
    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[Term]:
        return iter(self.terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.terms)

    def __str__(self) -> str:
        return self.ring.format(self)

    def __repr__(self) -> str:
        return f"Polynomial({self.ring.format(self)!r})"
