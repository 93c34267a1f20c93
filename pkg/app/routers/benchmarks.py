# app/routers/benchmarks.py
from typing import List

from fastapi import APIRouter, Depends

from ..problems import BENCHMARKS, bundled_benchmark
from ..schema import ProblemIn, RunOptions, StatsReport
from ..sig_moeller import CriteriaFlags
from ..workflow import run

router = APIRouter(prefix="/benchmarks", tags=["benchmarks"])


@router.get("", response_model=List[str])
def list_benchmarks() -> List[str]:
    return list(BENCHMARKS)


@router.get("/{name}", response_model=ProblemIn)
def get_benchmark(name: str) -> ProblemIn:
    problem = bundled_benchmark(name)
    return ProblemIn(
        ring=str(problem.ring),
        variables=list(problem.variables),
        order=problem.order.value,
        generators=list(problem.generators),
    )


@router.post("/{name}/run", response_model=StatsReport)
def run_benchmark(name: str, options: RunOptions = Depends()) -> StatsReport:
    """Run options come from the query string, e.g. ?criteria=none&verify=true."""
    return run(
        bundled_benchmark(name),
        algorithm=options.algorithm,
        criteria=CriteriaFlags.parse(options.criteria),
        verify=options.verify,
        trace=options.trace,
    )
