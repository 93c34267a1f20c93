# app/rings.py
"""
Effective coefficient rings.

Every backend offers exact arithmetic on its elements (through the elements' own
operators), a zero test, and the three ideal operations the algorithms rely on:

  - lin_decomp(gens, k): a witness (l_1..l_s) with k = sum l_i * gens_i, or None
  - sat_ideal(gens, k):  generators of <gens> : <k>
  - canonical_associate(k): (unit, unit * k) with a fixed representative per class

Backends:
  IntegerRing                 Z        (PID, Euclidean)
  RationalField               Q        (field)
  UnivariatePolynomialRing    Q[t]     (PID, Euclidean; sympy sparse polynomials)
  MultivariatePolynomialRing  Q[t,u..] (experimental; bootstrapped on app.field_engine)
"""
from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, Literal, Optional, Sequence
import re

from sympy.polys.domains import QQ
from sympy.polys.rings import ring as sympy_ring

from .errors import (
    NonDivisibleError,
    ParseError,
    UnknownVariableError,
    UnsupportedRingError,
    ZeroInputError,
)

RingElement = Any
RingKind = Literal["int", "rat", "unipoly", "multipoly"]

_DESCRIPTOR_RE = re.compile(r"^\s*(int|rat|unipoly|multipoly)\s*(?:\(([^)]*)\))?\s*$")


@dataclass(frozen=True)
class RingDescriptor:
    kind: RingKind
    aux_vars: tuple[str, ...] = ()

    @property
    def is_pid(self) -> bool:
        return self.kind in ("int", "unipoly")

    @property
    def is_field(self) -> bool:
        return self.kind == "rat"

    @property
    def is_experimental(self) -> bool:
        return self.kind == "multipoly"

    @classmethod
    def parse(cls, text: str) -> "RingDescriptor":
        m = _DESCRIPTOR_RE.match(text or "")
        if not m:
            raise ParseError(f"unknown ring {text!r}; expected int, rat, unipoly(t) or multipoly(t,u)")
        kind, args = m.group(1), m.group(2)
        names = tuple(a.strip() for a in args.split(",") if a.strip()) if args else ()
        if kind in ("int", "rat") and names:
            raise ParseError(f"ring {kind} takes no variables")
        if kind == "unipoly" and len(names) != 1:
            raise ParseError("unipoly needs exactly one coefficient variable, e.g. unipoly(t)")
        if kind == "multipoly" and not names:
            raise ParseError("multipoly needs at least one coefficient variable, e.g. multipoly(t,u)")
        if len(set(names)) != len(names):
            raise ParseError(f"repeated coefficient variable in {text!r}")
        return cls(kind, names)  # type: ignore[arg-type]

    def __str__(self) -> str:
        return f"{self.kind}({','.join(self.aux_vars)})" if self.aux_vars else self.kind


def render_sum(items: Iterable[tuple[Fraction, Sequence[str]]]) -> str:
    """Render sum of scalar * product-of-factors in the parse grammar ("3*x*y - y^2")."""
    out: list[str] = []
    for scalar, factors in items:
        neg = scalar < 0
        mag = -scalar if neg else scalar
        if factors:
            body = "*".join(factors) if mag == 1 else f"{mag}*" + "*".join(factors)
        else:
            body = str(mag)
        if not out:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out) or "0"


def power_factor(name: str, exp: int) -> str:
    return name if exp == 1 else f"{name}^{exp}"


class CoefficientRing(ABC):
    descriptor: RingDescriptor

    # ---- arithmetic plumbing ----
    @property
    @abstractmethod
    def zero(self) -> RingElement: ...

    @property
    @abstractmethod
    def one(self) -> RingElement: ...

    def is_zero(self, a: RingElement) -> bool:
        return not a

    @abstractmethod
    def from_fraction(self, q: Fraction) -> RingElement:
        """Embed a rational literal; ValueError when the ring has no such element."""

    def aux_gen(self, name: str) -> RingElement:
        raise UnknownVariableError(f"unknown variable {name!r}")

    @abstractmethod
    def expand(self, a: RingElement) -> list[tuple[Fraction, tuple[tuple[str, int], ...]]]:
        """Rational scalar times aux-variable power products, summing to a."""

    @abstractmethod
    def exact_quotient(self, a: RingElement, b: RingElement) -> RingElement:
        """a / b when b divides a; NonDivisibleError otherwise."""

    def format(self, a: RingElement) -> str:
        parts = self.expand(a)
        text = render_sum((q, [power_factor(n, e) for n, e in f]) for q, f in parts)
        return text if len(parts) <= 1 else f"({text})"

    # ---- ideal operations ----
    @abstractmethod
    def lin_decomp(self, gens: Sequence[RingElement], k: RingElement) -> Optional[list[RingElement]]: ...

    @abstractmethod
    def sat_ideal(self, gens: Sequence[RingElement], k: RingElement) -> list[RingElement]: ...

    @abstractmethod
    def canonical_associate(self, k: RingElement) -> tuple[RingElement, RingElement]: ...

    def reduce_coefficient(
        self, gens: Sequence[RingElement], k: RingElement
    ) -> tuple[list[RingElement], RingElement]:
        """
        (factors, r) with k = sum factors_j gens_j + r. r is zero when k lies in the
        ideal of gens; Euclidean rings also shrink k modulo the gcd of gens.
        """
        found = self.lin_decomp(gens, k)
        if found is not None:
            return found, self.zero
        return [self.zero] * len(gens), k

    def gcd_lcm(self, a: RingElement, b: RingElement) -> tuple[RingElement, RingElement]:
        raise UnsupportedRingError(f"gcd/lcm is not available over {self.descriptor}")

    def divides(self, a: RingElement, b: RingElement) -> Optional[RingElement]:
        """Cofactor q with a*q = b, or None."""
        if self.is_zero(a):
            return self.zero if self.is_zero(b) else None
        found = self.lin_decomp([a], b)
        return None if found is None else found[0]

    def _nonzero_positions(self, gens: Sequence[RingElement]) -> list[int]:
        return [i for i, g in enumerate(gens) if not self.is_zero(g)]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, CoefficientRing) and self.descriptor == other.descriptor

    def __hash__(self) -> int:
        return hash(self.descriptor)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.descriptor})"


class EuclideanRing(CoefficientRing):
    """Shared machinery for Euclidean domains: extended gcd and back-substitution."""

    def _divmod(self, a: RingElement, b: RingElement) -> tuple[RingElement, RingElement]:
        return divmod(a, b)

    def _gcd(self, a: RingElement, b: RingElement) -> RingElement:
        while not self.is_zero(b):
            a, b = b, self._divmod(a, b)[1]
        return a

    def _egcd(self, a: RingElement, b: RingElement) -> tuple[RingElement, RingElement, RingElement]:
        old_r, r = a, b
        old_s, s = self.one, self.zero
        old_t, t = self.zero, self.one
        while not self.is_zero(r):
            q, rem = self._divmod(old_r, r)
            old_r, r = r, rem
            old_s, s = s, old_s - q * s
            old_t, t = t, old_t - q * t
        return old_r, old_s, old_t

    def exact_quotient(self, a: RingElement, b: RingElement) -> RingElement:
        if self.is_zero(b):
            raise ZeroDivisionError("division by zero in the coefficient ring")
        q, r = self._divmod(a, b)
        if not self.is_zero(r):
            raise NonDivisibleError(f"{self.format(b)} does not divide {self.format(a)}")
        return q

    def _divides_raw(self, d: RingElement, k: RingElement) -> bool:
        return self.is_zero(self._divmod(k, d)[1])

    def _reduce_multiplier(self, a: RingElement, d: RingElement) -> tuple[RingElement, RingElement]:
        """(q, r) with a = q*d + r and r small next to d."""
        return self._divmod(a, d)

    def _bezout(self, gens: Sequence[RingElement], positions: Sequence[int]) -> tuple[RingElement, dict[int, RingElement]]:
        """gcd g of gens over positions and factors v with sum v_j gens_j = g."""
        g = gens[positions[0]]
        factors = {positions[0]: self.one}
        for i in positions[1:]:
            g, s, t = self._egcd(g, gens[i])
            factors = {j: s * v for j, v in factors.items()}
            factors[i] = t
        return g, factors

    def _shrink(self, gens: Sequence[RingElement], result: list[RingElement], last: int) -> list[RingElement]:
        """
        Keep sum result_j gens_j fixed while reducing each result_j, j != last, modulo
        gens_last / gcd(gens_j, gens_last); the quotients move onto result_last.
        """
        for j, v in enumerate(result):
            if j == last or self.is_zero(v) or self.is_zero(gens[j]):
                continue
            h = self._gcd(gens[j], gens[last])
            q, rem = self._reduce_multiplier(v, self.exact_quotient(gens[last], h))
            if self.is_zero(q):
                continue
            result[j] = rem
            result[last] = result[last] + q * self.exact_quotient(gens[j], h)
        return result

    def lin_decomp(self, gens: Sequence[RingElement], k: RingElement) -> Optional[list[RingElement]]:
        result = [self.zero] * len(gens)
        if self.is_zero(k):
            return result
        pos = self._nonzero_positions(gens)
        if not pos:
            return None

        # shortest suffix of the generator list whose gcd already divides k
        suffix: list[RingElement] = [self.zero] * len(pos)
        acc = self.zero
        for n in reversed(range(len(pos))):
            acc = self._gcd(acc, gens[pos[n]])
            suffix[n] = acc
        start = next((n for n in reversed(range(len(pos))) if self._divides_raw(suffix[n], k)), None)
        if start is None:
            return None

        g, factors = self._bezout(gens, pos[start:])
        q = self.exact_quotient(k, g)
        for j, v in factors.items():
            result[j] = v * q
        return self._shrink(gens, result, pos[-1])

    def reduce_coefficient(
        self, gens: Sequence[RingElement], k: RingElement
    ) -> tuple[list[RingElement], RingElement]:
        result = [self.zero] * len(gens)
        pos = self._nonzero_positions(gens)
        if self.is_zero(k) or not pos:
            return result, k
        g, factors = self._bezout(gens, pos)
        q, rem = self._reduce_multiplier(k, g)
        if self.is_zero(q):
            return result, k
        for j, v in factors.items():
            result[j] = v * q
        return self._shrink(gens, result, pos[-1]), rem

    def sat_ideal(self, gens: Sequence[RingElement], k: RingElement) -> list[RingElement]:
        if self.is_zero(k):
            raise ZeroInputError("SatIdeal needs a nonzero element")
        pos = self._nonzero_positions(gens)
        if not pos:
            return []
        g = self.zero
        for i in pos:
            g = self._gcd(g, gens[i])
        c = self.exact_quotient(g, self._gcd(g, k))
        return [self.canonical_associate(c)[1]]

    def gcd_lcm(self, a: RingElement, b: RingElement) -> tuple[RingElement, RingElement]:
        if self.is_zero(a) and self.is_zero(b):
            raise ZeroInputError("gcd of two zeros")
        g = self.canonical_associate(self._gcd(a, b))[1]
        if self.is_zero(a) or self.is_zero(b):
            return g, self.zero
        return g, self.canonical_associate(self.exact_quotient(a * b, g))[1]


class IntegerRing(EuclideanRing):
    descriptor = RingDescriptor("int")

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def from_fraction(self, q: Fraction) -> int:
        if q.denominator != 1:
            raise ValueError(f"{q} is not an integer")
        return int(q)

    def expand(self, a: int):
        return [(Fraction(a), ())] if a else []

    def canonical_associate(self, k: int) -> tuple[int, int]:
        if not k:
            raise ZeroInputError("zero has no canonical associate")
        return (-1, -k) if k < 0 else (1, k)

    def _reduce_multiplier(self, a: int, d: int) -> tuple[int, int]:
        # symmetric remainder, |r| <= |d| / 2
        q, r = divmod(a, d)
        if 2 * abs(r) > abs(d):
            q, r = q + 1, r - d
        return q, r


class RationalField(CoefficientRing):
    descriptor = RingDescriptor("rat")

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def from_fraction(self, q: Fraction) -> Fraction:
        return Fraction(q)

    def expand(self, a: Fraction):
        return [(Fraction(a), ())] if a else []

    def exact_quotient(self, a: Fraction, b: Fraction) -> Fraction:
        if not b:
            raise ZeroDivisionError("division by zero in the coefficient ring")
        return Fraction(a) / b

    def lin_decomp(self, gens, k):
        result = [self.zero] * len(gens)
        if not k:
            return result
        pos = self._nonzero_positions(gens)
        if not pos:
            return None
        last = pos[-1]
        result[last] = Fraction(k) / gens[last]
        return result

    def sat_ideal(self, gens, k):
        if not k:
            raise ZeroInputError("SatIdeal needs a nonzero element")
        return [self.one] if self._nonzero_positions(gens) else []

    def canonical_associate(self, k):
        if not k:
            raise ZeroInputError("zero has no canonical associate")
        return 1 / Fraction(k), self.one

    def gcd_lcm(self, a, b):
        if not a and not b:
            raise ZeroInputError("gcd of two zeros")
        return self.one, (self.one if a and b else self.zero)


class UnivariatePolynomialRing(EuclideanRing):
    def __init__(self, var: str):
        self.descriptor = RingDescriptor("unipoly", (var,))
        self._ring, self._gen = sympy_ring(var, QQ)

    @property
    def zero(self):
        return self._ring.zero

    @property
    def one(self):
        return self._ring.one

    def from_fraction(self, q: Fraction):
        return self._ring.ground_new(QQ(q.numerator, q.denominator))

    def aux_gen(self, name: str):
        if name != self.descriptor.aux_vars[0]:
            return super().aux_gen(name)
        return self._gen

    def expand(self, a):
        var = self.descriptor.aux_vars[0]
        return [
            (Fraction(int(c.numerator), int(c.denominator)), ((var, e[0]),) if e[0] else ())
            for e, c in a.terms()
        ]

    def canonical_associate(self, k):
        if not k:
            raise ZeroInputError("zero has no canonical associate")
        unit = self._ring.ground_new(QQ.one / k.LC)
        return unit, unit * k


class MultivariatePolynomialRing(CoefficientRing):
    """Q[y_1..y_k] as coefficients; ideal operations go through Groebner bases over Q."""

    def __init__(self, names: Sequence[str]):
        from .polynomials import MonomialOrder, PolyRing

        self.descriptor = RingDescriptor("multipoly", tuple(names))
        self._inner = PolyRing(tuple(names), MonomialOrder.GREVLEX, RationalField())

    @property
    def inner(self):
        return self._inner

    @property
    def zero(self):
        return self._inner.zero()

    @property
    def one(self):
        return self._inner.one()

    def from_fraction(self, q: Fraction):
        return self._inner.constant(Fraction(q))

    def aux_gen(self, name: str):
        return self._inner.gen(name)

    def expand(self, a):
        names = self._inner.names
        return [(Fraction(c), tuple((n, e) for n, e in zip(names, mono) if e)) for mono, c in a.terms]

    def exact_quotient(self, a, b):
        from .field_engine import divide_exact

        return divide_exact(a, b)

    def lin_decomp(self, gens, k):
        from .field_engine import lift

        result = [self.zero] * len(gens)
        if not k:
            return result
        pos = self._nonzero_positions(gens)
        # later generators first, as in the Euclidean backends
        for start in reversed(range(len(pos))):
            found = lift([gens[i] for i in pos[start:]], k)
            if found is not None:
                for i, l in zip(pos[start:], found):
                    result[i] = l
                return result
        return None

    def sat_ideal(self, gens, k):
        from .field_engine import colon_ideal

        if not k:
            raise ZeroInputError("SatIdeal needs a nonzero element")
        pos = self._nonzero_positions(gens)
        if not pos:
            return []
        out: list = []
        for c in colon_ideal([gens[i] for i in pos], k):
            canon = self.canonical_associate(c)[1]
            if canon not in out:
                out.append(canon)
        return out

    def canonical_associate(self, k):
        if not k:
            raise ZeroInputError("zero has no canonical associate")
        unit = 1 / Fraction(k.LC)
        return self._inner.constant(unit), k * unit


def make_ring(descriptor: RingDescriptor, experimental: bool = False) -> CoefficientRing:
    if descriptor.kind == "int":
        return IntegerRing()
    if descriptor.kind == "rat":
        return RationalField()
    if descriptor.kind == "unipoly":
        return UnivariatePolynomialRing(descriptor.aux_vars[0])
    if not experimental:
        raise UnsupportedRingError(
            f"ring {descriptor} is experimental; enable it with --experimental-ufd or EXPERIMENTAL_UFD=1"
        )
    return MultivariatePolynomialRing(descriptor.aux_vars)
