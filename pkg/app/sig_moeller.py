# app/sig_moeller.py
"""
Signature-based weak Groebner basis algorithm (SigMoeller).

Inputs are processed one at a time. After each input, regular saturated sets are
popped in increasing presignature order until the queue is empty; an S-polynomial
whose signature is caught by an enabled criterion is skipped before any reduction.
"""
from __future__ import annotations

import enum
import heapq
import itertools
import time
from dataclasses import dataclass, field
from typing import Optional, Sequence

from . import config
from .errors import ComputationError, InputError, IterationCeilingError, SignatureOrderError
from .logging_setup import get_logger
from .models import RunStats
from .polynomials import Comparison, PolyRing, Polynomial, mono_div, mono_divides, mono_mul
from .rings import CoefficientRing
from .signatures import (
    LabeledPoly,
    RegularSaturatedSet,
    Signature,
    is_1_singular_reducible,
    module_key,
    regular_reduce,
    regularize,
    sig_compare,
)
from .trace import SigObserver
from .weak_gb import check_inputs, enumerate_saturated_sets

logger = get_logger("weakgb.sigmoller")

CRITERIA = ("syzygy", "f5", "singular")


@dataclass(frozen=True)
class CriteriaFlags:
    syzygy: bool = False
    f5: bool = False
    singular: bool = False

    @classmethod
    def parse(cls, text: Optional[str]) -> "CriteriaFlags":
        """'all', 'none' or a comma list of syzygy,f5,singular."""
        text = (text or "none").strip().lower()
        if text == "all":
            return cls(True, True, True)
        if text in ("none", ""):
            return cls()
        names = {n.strip() for n in text.split(",") if n.strip()}
        unknown = names - set(CRITERIA)
        if unknown:
            raise InputError(f"unknown criteria {sorted(unknown)}; choose from {', '.join(CRITERIA)}")
        return cls(**{n: True for n in names})

    @property
    def enabled(self) -> list[str]:
        return [n for n in CRITERIA if getattr(self, n)]


class SyzygyOrigin(str, enum.Enum):
    KOSZUL = "koszul"
    REDUCTION = "reduction-to-zero"


@dataclass(frozen=True)
class SyzygySignature:
    sig: Signature
    origin: SyzygyOrigin


@dataclass
class SigState:
    ring: PolyRing
    flags: CriteriaFlags = field(default_factory=CriteriaFlags)
    basis: list[LabeledPoly] = field(default_factory=list)
    queue: list = field(default_factory=list)
    syzygy_sigs: list[SyzygySignature] = field(default_factory=list)
    stats: RunStats = field(default_factory=RunStats)
    seen: set[tuple[int, ...]] = field(default_factory=set)
    queue_pops: int = 0
    _ticket: itertools.count = field(default_factory=itertools.count, repr=False)

    def values(self) -> list[Polynomial]:
        return [g.value for g in self.basis]


def regular_s_polynomial(J: RegularSaturatedSet, c, G: Sequence[LabeledPoly]) -> LabeledPoly:
    """c (M/LM_tau) g_tau - sum b_j (M/LM_j) g_j, signed c (M/LM_tau) sig(g_tau)."""
    tau = G[J.sig_index - 1]
    coeffs = tau.value.ring.coeff
    others = J.others
    lcs = [G[j - 1].value.LC for j in others]
    bs = coeffs.lin_decomp(lcs, c * tau.value.LC)
    if bs is None:
        raise ComputationError(f"colon generator {coeffs.format(c)} has no decomposition")
    shift = mono_div(J.lcm_mono, tau.value.LM)
    value = tau.value.term_mul(c, shift).sub_multiples(
        (b, mono_div(J.lcm_mono, G[j - 1].value.LM), G[j - 1].value) for j, b in zip(others, bs)
    )
    return LabeledPoly(value, tau.sig.shifted(shift, c))


def koszul_signature(i: int, j: int, G: Sequence[LabeledPoly]) -> Signature:
    """Signature LT(g_i) sig(g_j) of the relation g_i g_j - g_j g_i; needs index(g_i) < index(g_j)."""
    a, b = G[i - 1], G[j - 1]
    if a.sig.index >= b.sig.index:
        raise ValueError(f"g{i} and g{j} do not lie in increasing components")
    return Signature(a.value.LC * b.sig.coeff, mono_mul(a.value.LM, b.sig.mono), b.sig.index)


def syzygy_criterion(sig: Signature, Z: Sequence[SyzygySignature], ring: CoefficientRing) -> bool:
    """coeff(sig) lies in the ideal of the coefficients of the known syzygy signatures dividing it."""
    coeffs = [z.sig.coeff for z in Z if z.sig.index == sig.index and mono_divides(z.sig.mono, sig.mono)]
    if not coeffs:
        return False
    return ring.lin_decomp(coeffs, sig.coeff) is not None


def f5_criterion(sig: Signature, G: Sequence[LabeledPoly]) -> bool:
    """The term coeff(sig) x^mono(sig) is weakly top-reducible by the basis of earlier components."""
    reducers = [g.value for g in G if g.sig.index < sig.index and mono_divides(g.value.LM, sig.mono)]
    if not reducers:
        return False
    coeffs = reducers[0].ring.coeff
    return coeffs.lin_decomp([g.LC for g in reducers], sig.coeff) is not None


def singular_criterion(sig: Signature, G: Sequence[LabeledPoly]) -> bool:
    return any(g.sig == sig for g in G)


def enqueue_regular_sets(state: SigState, new_index: int) -> int:
    """Queue the not yet seen regular saturated sets containing new_index; returns how many."""
    order = state.ring.order
    lms = [g.value.LM for g in state.basis]
    sets = enumerate_saturated_sets(lms, new_index, order)
    state.stats.saturated_sets_considered += len(sets)
    added = 0
    for J in sets:
        for R in regularize(J.indices, state.basis, order):
            if new_index not in R.indices or R.indices in state.seen:
                continue
            state.seen.add(R.indices)
            key = (module_key(order, R.presig), order.key(R.lcm_mono), R.indices)
            heapq.heappush(state.queue, (key, next(state._ticket), R))
            added += 1
    return added


def _first_criterion(state: SigState, sig: Signature) -> Optional[str]:
    flags = state.flags
    if flags.syzygy and syzygy_criterion(sig, state.syzygy_sigs, state.ring.coeff):
        return "syzygy"
    if flags.f5 and f5_criterion(sig, state.basis):
        return "f5"
    if flags.singular and singular_criterion(sig, state.basis):
        return "singular"
    return None


def _record_zero(state: SigState, sig: Signature, observer: SigObserver) -> None:
    state.stats.reductions_to_zero += 1
    state.syzygy_sigs.append(SyzygySignature(sig, SyzygyOrigin.REDUCTION))
    observer.reduced_to_zero(sig)


def _append(state: SigState, element: LabeledPoly, observer: SigObserver) -> None:
    order = state.ring.order
    if state.basis and sig_compare(state.basis[-1].sig, element.sig, order) is Comparison.GREATER:
        raise SignatureOrderError(
            f"signature of g{len(state.basis) + 1} is smaller than that of g{len(state.basis)}"
        )
    state.basis.append(element)
    k = len(state.basis)
    observer.element_added(k, element)
    if logger.isEnabledFor(10):  # DEBUG
        logger.debug(
            "BASIS_APPEND",
            extra={"index": k, "lt": state.ring.format_term(element.value.LT), "component": element.sig.index},
        )
    for i, g in enumerate(state.basis[:-1], 1):
        if g.sig.index < element.sig.index:
            state.syzygy_sigs.append(SyzygySignature(koszul_signature(i, k, state.basis), SyzygyOrigin.KOSZUL))
    enqueue_regular_sets(state, k)


def _process(state: SigState, J: RegularSaturatedSet, observer: SigObserver) -> None:
    coeffs = state.ring.coeff
    tau = state.basis[J.sig_index - 1]
    lcs = [state.basis[j - 1].value.LC for j in J.others]
    for c in coeffs.sat_ideal(lcs, tau.value.LC):
        p = regular_s_polynomial(J, c, state.basis)
        observer.s_polynomial(p.sig)

        crit = _first_criterion(state, p.sig)
        if crit is not None:
            setattr(state.stats, f"discarded_{crit}", getattr(state.stats, f"discarded_{crit}") + 1)
            observer.criterion(crit, p.sig)
            if logger.isEnabledFor(10):  # DEBUG
                logger.debug("CRITERION_FIRED", extra={"criterion": crit, "set": J.indices})
            continue

        state.stats.s_polynomials_reduced += 1
        r = regular_reduce(p, state.basis)
        if not r.value:
            _record_zero(state, r.sig, observer)
            continue
        if is_1_singular_reducible(r, state.basis):
            state.stats.discarded_1singular += 1
            observer.dropped_1singular(r.sig)
            continue
        _append(state, r, observer)


def sig_moeller(
    F: Sequence[Polynomial],
    flags: Optional[CriteriaFlags] = None,
    observer: Optional[SigObserver] = None,
    max_pops: Optional[int] = None,
) -> tuple[SigState, list[LabeledPoly]]:
    """Signature weak Groebner basis of <F>; input i starts with signature 1*e_i."""
    check_inputs(F)
    ring = F[0].ring
    observer = observer or SigObserver()
    ceiling = config.MAX_QUEUE_POPS if max_pops is None else max_pops
    state = SigState(ring, flags or CriteriaFlags())
    t0 = time.perf_counter()

    for i, f in enumerate(F, 1):
        start = LabeledPoly(f, Signature(ring.coeff.one, ring.one_mono, i))
        r = regular_reduce(start, state.basis)
        if not r.value:
            _record_zero(state, r.sig, observer)
            continue
        _append(state, r, observer)

        while state.queue:
            state.queue_pops += 1
            if state.queue_pops > ceiling:
                raise IterationCeilingError(ceiling)
            _, _, J = heapq.heappop(state.queue)
            observer.set_popped(J)
            if logger.isEnabledFor(10):  # DEBUG
                logger.debug("SET_POPPED", extra={"set": J.indices, "sig_index": J.sig_index})
            _process(state, J, observer)

        logger.debug(
            "INPUT_DONE",
            extra={
                "input": i,
                "basis_size": len(state.basis),
                "elapsed_ms": round((time.perf_counter() - t0) * 1000),
            },
        )

    state.stats.basis_size = len(state.basis)
    return state, list(state.basis)
