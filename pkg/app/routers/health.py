from fastapi import APIRouter

from .. import config
from ..logging_setup import get_logger
from ..problems import BENCHMARKS

logger = get_logger("weakgb.routes.health")

router = APIRouter(tags=["health"])


@router.get("/health")
def health():
    logger.debug("HEALTH_CHECK")
    return {"status": "ok"}


@router.get("/")
def read_root():
    return {
        "service": "weakgb",
        "algorithms": ["moeller", "sigmoeller"],
        "benchmarks": list(BENCHMARKS),
        "experimental_ufd": config.EXPERIMENTAL_UFD,
    }
