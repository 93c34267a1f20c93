# app/weak_gb.py
"""
Moeller's weak Groebner basis algorithm over an effective coefficient ring.

Indices into a basis are 1-based throughout, matching how sets are written
({1,3,4,5}).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from . import config
from .errors import ComputationError, InputError, IterationCeilingError, ZeroInputError
from .logging_setup import get_logger
from .models import RunStats
from .polynomials import (
    Monomial,
    MonomialOrder,
    PolyRing,
    Polynomial,
    mono_div,
    mono_divides,
    mono_lcm,
)

logger = get_logger("weakgb.moeller")


@dataclass(frozen=True)
class SaturatedSet:
    indices: tuple[int, ...]
    lcm_mono: Monomial

    def __contains__(self, index: int) -> bool:
        return index in self.indices

    def __len__(self) -> int:
        return len(self.indices)


@dataclass
class GBState:
    ring: PolyRing
    basis: list[Polynomial] = field(default_factory=list)
    stats: RunStats = field(default_factory=RunStats)
    sets_processed: int = 0

    @property
    def order(self) -> MonomialOrder:
        return self.ring.order

    def lms(self) -> list[Monomial]:
        return [g.LM for g in self.basis]


def saturate(m: Monomial, lms: Sequence[Monomial]) -> SaturatedSet:
    """All indices whose leading monomial divides m, with the lcm of those monomials."""
    indices = tuple(i for i, lm in enumerate(lms, 1) if mono_divides(lm, m))
    lcm = tuple(0 for _ in m)
    for i in indices:
        lcm = mono_lcm(lcm, lms[i - 1])
    return SaturatedSet(indices, lcm)


def enumerate_saturated_sets(
    lms: Sequence[Monomial],
    required_index: int,
    order: MonomialOrder,
    limit: Optional[int] = None,
) -> list[SaturatedSet]:
    """
    Saturated subsets of {1..limit} (limit defaults to required_index) that contain
    required_index and have at least two elements, ascending by lcm then by indices.

    Every such set is Sat(m) for m the lcm of LM(required_index) with some subset of
    the other leading monomials, so the candidates are the closure of that lcm.
    """
    limit = required_index if limit is None else limit
    prefix = list(lms[:limit])
    candidates = {prefix[required_index - 1]}
    for j, lm in enumerate(prefix, 1):
        if j != required_index:
            candidates |= {mono_lcm(c, lm) for c in candidates}

    found = []
    for m in candidates:
        s = saturate(m, prefix)
        if len(s) >= 2:
            found.append(s)
    found.sort(key=lambda s: (order.key(s.lcm_mono), s.indices))
    return found


def top_reduction_step(r: Polynomial, reducers: Sequence[Polynomial]) -> Optional[Polynomial]:
    """
    One weak top-reduction: r - sum k_j (LM(r)/LM(g_j)) g_j with LC(r) = sum k_j LC(g_j).
    Every reducer's LM must divide LM(r). None when LC(r) is not in the ideal of their LCs.
    """
    m = r.LM
    ks = r.ring.coeff.lin_decomp([g.LC for g in reducers], r.LC)
    if ks is None:
        return None
    return r.sub_multiples((k, mono_div(m, g.LM), g) for k, g in zip(ks, reducers))


def weak_reduce(p: Polynomial, basis: Sequence[Polynomial]) -> Polynomial:
    """Weak top-reduction of p modulo basis until the leading term is out of reach."""
    r = p
    while r:
        m = r.LM
        divisors = [g for g in basis if mono_divides(g.LM, m)]
        if not divisors:
            break
        nxt = top_reduction_step(r, divisors)
        if nxt is None:
            break
        r = nxt
    return r


def reduce_tail(p: Polynomial, basis: Sequence[Polynomial]) -> Polynomial:
    """
    p with every non-leading coefficient cut down modulo the leading coefficients of
    the basis elements whose leading monomial divides that term. LT(p) is untouched,
    so the result generates the same ideal together with basis.
    """
    if not p:
        return p
    coeffs = p.ring.coeff
    kept = []
    r = p.tail()
    while r:
        m, c = r.LT
        divisors = [g for g in basis if mono_divides(g.LM, m)]
        if divisors:
            ks, _ = coeffs.reduce_coefficient([g.LC for g in divisors], c)
            if any(not coeffs.is_zero(k) for k in ks):
                r = r.sub_multiples((k, mono_div(m, g.LM), g) for k, g in zip(ks, divisors))
        if r and r.LM == m:
            kept.append(r.LT)
            r = r.tail()
    return Polynomial(p.ring, (p.LT, *kept))


def reduces_to_zero(f: Polynomial, basis: Sequence[Polynomial]) -> bool:
    return not weak_reduce(f, basis)


def weak_s_polynomials(J: SaturatedSet, pivot: int, basis: Sequence[Polynomial]) -> list[Polynomial]:
    """
    One S-polynomial per generator c of <LC(g_j) : j in J, j != pivot> : LC(g_pivot):
    c (M/LM_pivot) g_pivot - sum b_j (M/LM_j) g_j, whose leading terms cancel.
    """
    if pivot not in J:
        raise ValueError(f"pivot {pivot} is not in {J.indices}")
    coeffs = basis[0].ring.coeff
    head = basis[pivot - 1]
    others = [j for j in J.indices if j != pivot]
    lcs = [basis[j - 1].LC for j in others]
    head_shift = mono_div(J.lcm_mono, head.LM)

    out = []
    for c in coeffs.sat_ideal(lcs, head.LC):
        bs = coeffs.lin_decomp(lcs, c * head.LC)
        if bs is None:
            raise ComputationError(f"colon generator {coeffs.format(c)} has no decomposition")
        out.append(
            head.term_mul(c, head_shift).sub_multiples(
                (b, mono_div(J.lcm_mono, basis[j - 1].LM), basis[j - 1]) for j, b in zip(others, bs)
            )
        )
    return out


def check_inputs(F: Sequence[Polynomial]) -> None:
    if not F:
        raise InputError("at least one input polynomial is required")
    for i, f in enumerate(F, 1):
        if not f:
            raise ZeroInputError(f"input polynomial {i} is zero")


def moeller_weak(F: Sequence[Polynomial], max_sets: Optional[int] = None) -> GBState:
    """Weak Groebner basis of <F>; F must be nonzero polynomials of one ring."""
    check_inputs(F)
    ceiling = config.MAX_QUEUE_POPS if max_sets is None else max_sets
    state = GBState(F[0].ring, list(F))
    order = state.order

    sigma = 0
    while sigma < len(state.basis):
        sigma += 1
        sets = enumerate_saturated_sets(state.lms(), sigma, order)
        state.stats.saturated_sets_considered += len(sets)
        for J in sets:
            state.sets_processed += 1
            if state.sets_processed > ceiling:
                raise IterationCeilingError(ceiling)
            for p in weak_s_polynomials(J, sigma, state.basis):
                state.stats.s_polynomials_reduced += 1
                r = weak_reduce(p, state.basis)
                if not r:
                    state.stats.reductions_to_zero += 1
                    continue
                r = reduce_tail(r, state.basis)
                state.basis.append(r)
                if logger.isEnabledFor(10):  # DEBUG
                    logger.debug(
                        "BASIS_APPEND",
                        extra={"index": len(state.basis), "set": J.indices, "lt": state.ring.format_term(r.LT)},
                    )

    state.stats.basis_size = len(state.basis)
    return state


def is_weak_gb(basis: Sequence[Polynomial], exhaustive: bool = False) -> bool:
    """
    Check the weak Groebner basis property.

    Default: for each s, every S-polynomial of every saturated subset of {1..s} containing s, with
    pivot s, weak-reduces to zero. With exhaustive, saturated sets are taken over the
    whole basis and every member serves as pivot once.
    """
    basis = list(basis)
    if len(basis) < 2:
        return True
    order = basis[0].ring.order
    lms = [g.LM for g in basis]
    seen: set[tuple[tuple[int, ...], int]] = set()
    for sigma in range(1, len(basis) + 1):
        limit = len(basis) if exhaustive else sigma
        for J in enumerate_saturated_sets(lms, sigma, order, limit=limit):
            pivots = J.indices if exhaustive else (sigma,)
            for pivot in pivots:
                if (J.indices, pivot) in seen:
                    continue
                seen.add((J.indices, pivot))
                for p in weak_s_polynomials(J, pivot, basis):
                    if weak_reduce(p, basis):
                        return False
    return True
