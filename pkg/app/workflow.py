# app/workflow.py
from datetime import datetime, timezone
from typing import Callable, List, Optional, Sequence
import time
import uuid

from . import config
from .errors import UnsupportedRingError, WeakGBError
from .field_engine import buchberger
from .logging_setup import get_logger, run_id_var
from .polynomials import Polynomial
from .problems import ProblemFile
from .schema import Algorithm, BasisEntry, StatsReport
from .sig_moeller import CriteriaFlags, sig_moeller
from .trace import SigObserver, TraceRecorder, format_signature
from .weak_gb import is_weak_gb, moeller_weak, reduces_to_zero

logger = get_logger("weakgb.workflow")


def verify_basis(inputs: Sequence[Polynomial], basis: Sequence[Polynomial]) -> bool:
    """basis is a weak Groebner basis and every input lies in the ideal it generates."""
    return is_weak_gb(basis) and all(reduces_to_zero(f, basis) for f in inputs)


def buchberger_field_oracle(problem: ProblemFile) -> List[Polynomial]:
    if not problem.ring.is_field:
        raise UnsupportedRingError(f"the Buchberger oracle needs field coefficients, not {problem.ring}")
    ring = problem.poly_ring()
    return buchberger(problem.polynomials(ring))


def run(
    problem: ProblemFile,
    algorithm: Algorithm = "sigmoeller",
    criteria: Optional[CriteriaFlags] = None,
    verify: bool = False,
    trace: bool = False,
    experimental: Optional[bool] = None,
    on_trace: Optional[Callable[[str], None]] = None,
    max_pops: Optional[int] = None,
) -> StatsReport:
    """
    Runs one problem end to end:
    - build the polynomial ring and parse the generators
    - compute the basis with the selected algorithm
    - optionally verify it
    - assemble the report
    """
    run_id = uuid.uuid4().hex[:8]
    token = run_id_var.set(run_id)
    criteria = criteria if criteria is not None else CriteriaFlags.parse(config.DEFAULT_CRITERIA)
    experimental = config.EXPERIMENTAL_UFD if experimental is None else experimental

    def X(**fields):
        # correlation + common fields
        return {"run_id": run_id, "problem": problem.name, "algorithm": algorithm, **fields}

    logger.info("RUN_START", extra=X(step="start", ring=str(problem.ring), criteria=criteria.enabled))
    t0 = time.perf_counter()

    try:
        # --- Parse ---
        t_parse = time.perf_counter()
        ring = problem.poly_ring(experimental)
        inputs = problem.polynomials(ring)
        logger.info(
            "PARSE_OK",
            extra=X(step="parse", generators=len(inputs), elapsed_ms=round((time.perf_counter() - t_parse) * 1000)),
        )

        # --- Compute ---
        t_compute = time.perf_counter()
        recorder = TraceRecorder(ring, on_trace) if trace else None
        if algorithm == "moeller":
            state = moeller_weak(inputs, max_sets=max_pops)
            stats, queue_pops = state.stats, state.sets_processed
            values = list(state.basis)
            entries = [BasisEntry(polynomial=ring.format(g), leading_term=ring.format_term(g.LT)) for g in values]
        else:
            sstate, labeled = sig_moeller(inputs, criteria, recorder or SigObserver(), max_pops=max_pops)
            stats, queue_pops = sstate.stats, sstate.queue_pops
            values = [g.value for g in labeled]
            entries = [
                BasisEntry(
                    polynomial=ring.format(g.value),
                    leading_term=ring.format_term(g.value.LT),
                    signature=format_signature(g.sig, ring),
                )
                for g in labeled
            ]
        logger.info(
            "COMPUTE_OK",
            extra=X(
                step="compute",
                basis_size=stats.basis_size,
                s_polynomials=stats.s_polynomials_reduced,
                reductions_to_zero=stats.reductions_to_zero,
                queue_pops=queue_pops,
                elapsed_ms=round((time.perf_counter() - t_compute) * 1000),
            ),
        )

        # --- Verify ---
        verified: Optional[bool] = None
        if verify:
            t_verify = time.perf_counter()
            verified = verify_basis(inputs, values)
            log = logger.info if verified else logger.warning
            log(
                "VERIFY_PASS" if verified else "VERIFY_FAIL",
                extra=X(step="verify", elapsed_ms=round((time.perf_counter() - t_verify) * 1000)),
            )

        report = StatsReport(
            run_id=run_id,
            problem=problem.name,
            algorithm=algorithm,
            criteria=criteria.enabled if algorithm == "sigmoeller" else [],
            stats=stats,
            queue_pops=queue_pops,
            wall_time_ms=round((time.perf_counter() - t0) * 1000, 3),
            generated_at=datetime.now(timezone.utc),
            basis=entries,
            verified=verified,
            trace=recorder.lines if recorder else [],
        )
        logger.info("RUN_SUCCESS", extra=X(step="done", total_ms=report.wall_time_ms))
        return report

    except WeakGBError as e:
        logger.exception("RUN_FAILED", extra=X(step="error", handled=True, error=type(e).__name__))
        raise
    except Exception as e:
        logger.exception("RUN_FAILED", extra=X(step="error", handled=False, error=type(e).__name__))
        raise
    finally:
        run_id_var.reset(token)
