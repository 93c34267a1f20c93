# app/exception_handling.py
from __future__ import annotations

from fastapi import FastAPI, HTTPException, Request
from fastapi.responses import JSONResponse

from .errors import ComputationError, InputError, UnknownBenchmarkError, UnsupportedRingError
from .logging_setup import get_logger

logger = get_logger("weakgb.exceptions")


async def http_exception_handler(request: Request, exc: HTTPException):
    logger.warning(
        "HTTP_EXCEPTION",
        extra={"handled": True, "path": str(request.url.path), "status_code": exc.status_code},
    )
    return JSONResponse({"detail": exc.detail}, status_code=exc.status_code)


def _handled(status_code: int):
    async def handler(request: Request, exc: Exception):
        logger.warning(
            "HANDLED_EXCEPTION",
            extra={
                "handled": True,
                "path": str(request.url.path),
                "status_code": status_code,
                "error": type(exc).__name__,
            },
        )
        return JSONResponse({"detail": str(exc), "error": type(exc).__name__}, status_code=status_code)

    return handler


async def unhandled_exception_handler(request: Request, exc: Exception):
    logger.exception(
        "UNHANDLED_EXCEPTION",
        extra={"handled": False, "path": str(request.url.path)},
    )
    return JSONResponse({"detail": "Internal Server Error"}, status_code=500)


def register_exception_handlers(app: FastAPI) -> None:
    """
    Register all exception handlers in one place.
    Call from app/main.py after creating the FastAPI app.
    """
    app.add_exception_handler(HTTPException, http_exception_handler)
    app.add_exception_handler(UnknownBenchmarkError, _handled(404))
    app.add_exception_handler(InputError, _handled(422))
    app.add_exception_handler(UnsupportedRingError, _handled(400))
    app.add_exception_handler(ComputationError, _handled(500))
    app.add_exception_handler(Exception, unhandled_exception_handler)
