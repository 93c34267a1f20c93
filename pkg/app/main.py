# app/main.py
from fastapi import FastAPI

from .logging_setup import setup_logging, get_logger
from .middleware import RequestContextMiddleware
from .exception_handling import register_exception_handlers

from .routers import benchmarks, health, solve


setup_logging()  # <-- set up logging ASAP
logger = get_logger("weakgb.main")

app = FastAPI(title="weakgb", version="0.1.0")
app.add_middleware(RequestContextMiddleware)

register_exception_handlers(app)

app.include_router(health.router)
app.include_router(solve.router)
app.include_router(benchmarks.router)
