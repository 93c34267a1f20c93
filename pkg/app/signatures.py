# app/signatures.py
"""
Signatures and signature-aware reduction.

A signature is a module term k * x^a * e_i. Module monomials compare
position-over-term: component index first, then the monomial order. Coefficients
never take part in comparisons ("similar" signatures share monomial and index).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional, Sequence, Union

from .errors import UnsupportedRingError
from .polynomials import (
    Comparison,
    Monomial,
    MonomialOrder,
    Polynomial,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
)
from .rings import CoefficientRing, RingElement
from .weak_gb import top_reduction_step


class ModuleMonomial(NamedTuple):
    mono: Monomial
    index: int


@dataclass(frozen=True)
class Signature:
    coeff: RingElement
    mono: Monomial
    index: int

    @property
    def module_monomial(self) -> ModuleMonomial:
        return ModuleMonomial(self.mono, self.index)

    def similar(self, other: Union["Signature", ModuleMonomial]) -> bool:
        return self.mono == other.mono and self.index == other.index

    def shifted(self, mono: Monomial, k: RingElement = None) -> "Signature":
        coeff = self.coeff if k is None else k * self.coeff
        return Signature(coeff, mono_mul(self.mono, mono), self.index)


@dataclass(frozen=True)
class LabeledPoly:
    value: Polynomial
    sig: Signature


@dataclass(frozen=True)
class RegularSaturatedSet:
    indices: tuple[int, ...]
    lcm_mono: Monomial
    presig: ModuleMonomial
    sig_index: int

    @property
    def others(self) -> tuple[int, ...]:
        return tuple(j for j in self.indices if j != self.sig_index)


def module_key(order: MonomialOrder, mm: Union[Signature, ModuleMonomial]) -> tuple:
    return mm.index, order.key(mm.mono)


def sig_compare(
    a: Union[Signature, ModuleMonomial], b: Union[Signature, ModuleMonomial], order: MonomialOrder
) -> Comparison:
    ka, kb = module_key(order, a), module_key(order, b)
    if ka == kb:
        return Comparison.EQUAL
    return Comparison.LESS if ka < kb else Comparison.GREATER


def sig_divides(a: Signature, b: Signature, ring: CoefficientRing) -> Optional[tuple[RingElement, Monomial]]:
    """(k, m) with k * m * a = b, or None."""
    if a.index != b.index or not mono_divides(a.mono, b.mono):
        return None
    found = ring.lin_decomp([a.coeff], b.coeff)
    if found is None:
        return None
    return found[0], mono_div(b.mono, a.mono)


def _shifted_key(order: MonomialOrder, sig: Signature, shift: Monomial) -> tuple:
    return sig.index, order.key(mono_mul(sig.mono, shift))


def regular_reduce(p: LabeledPoly, G: Sequence[LabeledPoly]) -> LabeledPoly:
    """Weak top-reduction of p by reducers whose shifted signature is strictly below sig(p)."""
    r = p.value
    if not r:
        return p
    order = r.ring.order
    bound = module_key(order, p.sig)
    while r:
        m = r.LM
        reducers = []
        for g in G:
            lm = g.value.LM
            if mono_divides(lm, m) and _shifted_key(order, g.sig, mono_div(m, lm)) < bound:
                reducers.append(g.value)
        if not reducers:
            break
        nxt = top_reduction_step(r, reducers)
        if nxt is None:
            break
        r = nxt
    return p if r is p.value else LabeledPoly(r, p.sig)


def is_1_singular_reducible(p: LabeledPoly, G: Sequence[LabeledPoly]) -> bool:
    """
    Some single g with LM(g) | LM(p), (LM(p)/LM(g)) sig(g) similar to sig(p), and the
    coefficient of sig(g) dividing that of sig(p).
    """
    if not p.value:
        return False
    m = p.value.LM
    coeffs = p.value.ring.coeff
    for g in G:
        lm = g.value.LM
        if not mono_divides(lm, m):
            continue
        shift = mono_div(m, lm)
        if g.sig.index != p.sig.index or mono_mul(g.sig.mono, shift) != p.sig.mono:
            continue
        try:
            if sig_divides(g.sig, p.sig, coeffs) is not None:
                return True
        except UnsupportedRingError:
            continue
    return False


def _lcm_of(indices: Iterable[int], G: Sequence[LabeledPoly]) -> Monomial:
    indices = list(indices)
    lcm = tuple(0 for _ in G[indices[0] - 1].value.LM)
    for j in indices:
        lcm = mono_lcm(lcm, G[j - 1].value.LM)
    return lcm


def _shifted_at(M: Monomial, j: int, G: Sequence[LabeledPoly]) -> ModuleMonomial:
    g = G[j - 1]
    return ModuleMonomial(mono_mul(mono_div(M, g.value.LM), g.sig.mono), g.sig.index)


def presignature(
    J: Iterable[int], G: Sequence[LabeledPoly], order: MonomialOrder
) -> tuple[ModuleMonomial, tuple[int, ...]]:
    """Largest shifted signature over J at M(J), and the indices attaining it."""
    indices = sorted(J)
    M = _lcm_of(indices, G)
    shifted = {j: _shifted_at(M, j, G) for j in indices}
    top = max(shifted.values(), key=lambda mm: module_key(order, mm))
    return top, tuple(j for j in indices if shifted[j] == top)


def regularize(J: Iterable[int], G: Sequence[LabeledPoly], order: MonomialOrder) -> list[RegularSaturatedSet]:
    """
    Regular saturated sets with lcm M(J), one per possible signature index tau: tau
    together with every j whose leading monomial divides M(J) and whose shifted
    signature there lies strictly below that of tau. Indices tied with tau are left
    out. Single-element sets and sets whose own lcm is below M(J) are dropped; the
    latter come back when their own lcm is enumerated.

    tau need not attain the presignature of J: an index above it at M(J) does not
    belong to its set, and the S-polynomial of that smaller set is still needed.
    """
    indices = sorted(J)
    if len(indices) < 2:
        return []
    M = _lcm_of(indices, G)
    shifted = {
        j: _shifted_at(M, j, G) for j in range(1, len(G) + 1) if mono_divides(G[j - 1].value.LM, M)
    }
    keys = {j: module_key(order, mm) for j, mm in shifted.items()}
    found = []
    for tau in indices:
        members = tuple(j for j in sorted(shifted) if j == tau or keys[j] < keys[tau])
        if len(members) < 2 or _lcm_of(members, G) != M:
            continue
        found.append(RegularSaturatedSet(members, M, shifted[tau], tau))
    return sorted(
        found,
        key=lambda R: (module_key(order, R.presig), order.key(R.lcm_mono), R.indices),
    )
