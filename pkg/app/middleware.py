# app/middleware.py
import time
import uuid
from typing import Optional

from starlette.middleware.base import BaseHTTPMiddleware
from starlette.requests import Request
from starlette.responses import Response

from .logging_setup import get_logger, run_id_var

logger = get_logger("weakgb.http")

REQUEST_ID_HEADER = "X-Request-ID"


class RequestContextMiddleware(BaseHTTPMiddleware):
    """Tags each request with an id (log run slot + response header) and logs its timing."""

    async def dispatch(self, request: Request, call_next):
        req_id = uuid.uuid4().hex[:12]
        token = run_id_var.set(req_id)
        fields = {"method": request.method, "path": request.url.path, "request_id": req_id}

        start = time.perf_counter()
        response: Optional[Response] = None
        try:
            logger.info("REQUEST_START", extra=fields)
            response = await call_next(request)
            response.headers[REQUEST_ID_HEADER] = req_id
            return response
        except Exception:
            logger.exception("REQUEST_EXCEPTION", extra={**fields, "handled": False})
            raise
        finally:
            logger.info(
                "REQUEST_END",
                extra={
                    **fields,
                    "status_code": getattr(response, "status_code", 500),
                    "elapsed_ms": round((time.perf_counter() - start) * 1000, 1),
                },
            )
            run_id_var.reset(token)
