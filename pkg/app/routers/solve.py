# app/routers/solve.py
from fastapi import APIRouter

from ..logging_setup import get_logger
from ..problems import problem_from_request
from ..schema import SolveIn, StatsReport
from ..sig_moeller import CriteriaFlags
from ..workflow import run

logger = get_logger("weakgb.routes.solve")

router = APIRouter(tags=["solve"])


@router.post("/solve", response_model=StatsReport)
def solve(body: SolveIn) -> StatsReport:
    problem = problem_from_request(body)
    logger.info("SOLVE_REQUEST", extra={"generators": len(body.generators), "algorithm": body.algorithm})
    return run(
        problem,
        algorithm=body.algorithm,
        criteria=CriteriaFlags.parse(body.criteria),
        verify=body.verify,
        trace=body.trace,
    )
