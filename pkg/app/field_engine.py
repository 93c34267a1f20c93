# app/field_engine.py
"""
Classical Groebner machinery over a field: multivariate division, Buchberger's
algorithm (optionally tracking cofactors), ideal membership with witness and
colon ideals by elimination.

Independent of app.weak_gb: this is the oracle the weak algorithms are checked
against, and the engine behind the multivariate-coefficient ring backend.
"""
from __future__ import annotations

import heapq
import itertools
from typing import Optional, Sequence

from .errors import NonDivisibleError, UnsupportedRingError, ZeroInputError
from .polynomials import MonomialOrder, PolyRing, Polynomial, mono_div, mono_divides, mono_lcm, mono_mul

ELIMINATION_VAR = "_w"


def _require_field(ring: PolyRing) -> None:
    if not ring.coeff.descriptor.is_field:
        raise UnsupportedRingError(f"field algorithms need field coefficients, not {ring.coeff.descriptor}")


def divide(f: Polynomial, divisors: Sequence[Polynomial]) -> tuple[list[Polynomial], Polynomial]:
    """Quotients q and remainder r with f = sum q_i * divisors_i + r, no term of r divisible by any LM."""
    ring = f.ring
    _require_field(ring)
    coeffs = ring.coeff
    quotients: list[dict] = [{} for _ in divisors]
    remainder: dict = {}
    p = f
    while p:
        m, c = p.LM, p.LC
        for i, g in enumerate(divisors):
            if g and mono_divides(g.LM, m):
                t = coeffs.exact_quotient(c, g.LC)
                shift = mono_div(m, g.LM)
                quotients[i][shift] = quotients[i].get(shift, coeffs.zero) + t
                p = p.sub_multiples([(t, shift, g)])
                break
        else:
            remainder[m] = c
            p = p.tail()
    return [ring.from_dict(q) for q in quotients], ring.from_dict(remainder)


def divide_exact(f: Polynomial, g: Polynomial) -> Polynomial:
    if not g:
        raise ZeroDivisionError("division by the zero polynomial")
    (q,), r = divide(f, [g])
    if r:
        raise NonDivisibleError(f"{g} does not divide {f}")
    return q


def _buchberger(F: Sequence[Polynomial], track: bool):
    """Groebner basis of F; with track, also the cofactor rows expressing each element in F."""
    if not F:
        raise ZeroInputError("Buchberger needs at least one polynomial")
    ring = F[0].ring
    _require_field(ring)
    coeffs = ring.coeff
    n = len(F)
    zero = ring.zero()

    basis: list[Polynomial] = []
    rows: list[list[Polynomial]] = []
    for i, f in enumerate(F):
        if f:
            basis.append(f)
            if track:
                rows.append([ring.one() if j == i else zero for j in range(n)])

    counter = itertools.count()
    pairs: list = []

    def push(i: int, j: int) -> None:
        lcm = mono_lcm(basis[i].LM, basis[j].LM)
        heapq.heappush(pairs, (ring.key(lcm), next(counter), i, j))

    for j in range(len(basis)):
        for i in range(j):
            push(i, j)

    while pairs:
        _, _, i, j = heapq.heappop(pairs)
        fi, fj = basis[i], basis[j]
        lcm = mono_lcm(fi.LM, fj.LM)
        if lcm == mono_mul(fi.LM, fj.LM):
            continue  # coprime leading monomials
        ci = coeffs.exact_quotient(coeffs.one, fi.LC)
        cj = coeffs.exact_quotient(coeffs.one, fj.LC)
        si, sj = mono_div(lcm, fi.LM), mono_div(lcm, fj.LM)
        spoly = fi.term_mul(ci, si) - fj.term_mul(cj, sj)
        quotients, r = divide(spoly, basis)
        if not r:
            continue
        if track:
            row = [a.term_mul(ci, si) - b.term_mul(cj, sj) for a, b in zip(rows[i], rows[j])]
            for q, qrow in zip(quotients, rows):
                if q:
                    row = [x - q * y for x, y in zip(row, qrow)]
            rows.append(row)
        basis.append(r)
        for k in range(len(basis) - 1):
            push(k, len(basis) - 1)
    return basis, (rows if track else None)


def buchberger(F: Sequence[Polynomial]) -> list[Polynomial]:
    return _buchberger(F, track=False)[0]


def groebner_with_cofactors(F: Sequence[Polynomial]) -> tuple[list[Polynomial], list[list[Polynomial]]]:
    basis, rows = _buchberger(F, track=True)
    return basis, rows


def lift(gens: Sequence[Polynomial], f: Polynomial) -> Optional[list[Polynomial]]:
    """Cofactors l with f = sum l_i * gens_i, or None when f is outside <gens>."""
    ring = f.ring
    if not f:
        return [ring.zero() for _ in gens]
    if not any(gens):
        return None
    basis, rows = groebner_with_cofactors(gens)
    quotients, r = divide(f, basis)
    if r:
        return None
    out = [ring.zero() for _ in gens]
    for q, row in zip(quotients, rows):
        if q:
            out = [acc + q * x for acc, x in zip(out, row)]
    return out


def colon_ideal(gens: Sequence[Polynomial], k: Polynomial) -> list[Polynomial]:
    """Generators of <gens> : <k>, from <gens> intersected with <k> by eliminating an auxiliary variable."""
    if not k:
        raise ZeroInputError("colon by the zero polynomial")
    gens = [g for g in gens if g]
    if not gens:
        return []
    ring = k.ring
    ext = PolyRing((ELIMINATION_VAR,) + ring.names, MonomialOrder.LEX, ring.coeff)

    def embed(p: Polynomial) -> Polynomial:
        return ext.from_dict({(0,) + m: c for m, c in p.terms})

    w = ext.gen(0)
    system = [w * embed(g) for g in gens] + [(ext.one() - w) * embed(k)]
    out: list[Polynomial] = []
    for h in buchberger(system):
        if h.LM[0]:
            continue
        q = divide_exact(ring.from_dict({m[1:]: c for m, c in h.terms}), k)
        if q not in out:
            out.append(q)
    return out
