# app/trace.py
"""Observer hooks of the signature driver, and the recorder that turns them into trace lines."""
from __future__ import annotations

from typing import Callable, Iterable, Optional

from .polynomials import PolyRing
from .signatures import LabeledPoly, ModuleMonomial, RegularSaturatedSet, Signature


def format_index_set(indices: Iterable[int], starred: Optional[int] = None) -> str:
    return "{" + ",".join(f"{j}*" if j == starred else str(j) for j in indices) + "}"


def format_module_monomial(mm: ModuleMonomial, ring: PolyRing) -> str:
    return "*".join(ring.mono_factors(mm.mono) + [f"e{mm.index}"])


def format_signature(sig: Signature, ring: PolyRing) -> str:
    return "*".join([ring.coeff.format(sig.coeff)] + ring.mono_factors(sig.mono) + [f"e{sig.index}"])


class SigObserver:
    """No-op base; the driver calls these in processing order."""

    def set_popped(self, J: RegularSaturatedSet) -> None:
        pass

    def s_polynomial(self, sig: Signature) -> None:
        pass

    def criterion(self, name: str, sig: Signature) -> None:
        pass

    def element_added(self, k: int, element: LabeledPoly) -> None:
        pass

    def dropped_1singular(self, sig: Signature) -> None:
        pass

    def reduced_to_zero(self, sig: Signature) -> None:
        pass


class TraceRecorder(SigObserver):
    def __init__(self, ring: PolyRing, sink: Optional[Callable[[str], None]] = None):
        self.ring = ring
        self.sink = sink
        self.lines: list[str] = []

    def _emit(self, line: str) -> None:
        self.lines.append(line)
        if self.sink is not None:
            self.sink(line)

    def set_popped(self, J: RegularSaturatedSet) -> None:
        self._emit(
            f"POP {format_index_set(J.indices, J.sig_index)} "
            f"presig={format_module_monomial(J.presig, self.ring)}"
        )

    def s_polynomial(self, sig: Signature) -> None:
        self._emit(f"SPOL sig={format_signature(sig, self.ring)}")

    def criterion(self, name: str, sig: Signature) -> None:
        self._emit(f"CRIT {name} sig={format_signature(sig, self.ring)}")

    def element_added(self, k: int, element: LabeledPoly) -> None:
        self._emit(
            f"ADD g{k} lt={self.ring.format_term(element.value.LT)} "
            f"sig={format_signature(element.sig, self.ring)}"
        )

    def dropped_1singular(self, sig: Signature) -> None:
        self._emit(f"DROP 1SING sig={format_signature(sig, self.ring)}")

    def reduced_to_zero(self, sig: Signature) -> None:
        self._emit(f"ZERO sig={format_signature(sig, self.ring)}")
