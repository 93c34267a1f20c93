# app/logging_setup.py
import logging
from logging.config import dictConfig
from logging import LogRecord
from pathlib import Path
import contextvars
import os

# ---- Correlation ID (set per run by the workflow, per request by the middleware) ----
run_id_var: contextvars.ContextVar[str] = contextvars.ContextVar("run_id", default="-")

class RunIdFilter(logging.Filter):
    def filter(self, record: LogRecord) -> bool:
        record.run_id = run_id_var.get()
        return True

# ---- Paths & levels ----
BASE_DIR = Path(__file__).resolve().parents[1]  # project root (folder that contains 'app/')


def _log_file() -> Path:
    log_dir = Path(os.getenv("LOG_DIR", BASE_DIR / "logs"))
    log_dir.mkdir(parents=True, exist_ok=True)
    return log_dir / "weakgb.log"


def setup_logging(level: str | None = None, to_file: bool = True) -> Path | None:
    level = (level or os.getenv("LOG_LEVEL", "INFO")).upper()
    log_file = _log_file() if to_file else None
    handlers = ["console", "file"] if log_file else ["console"]

    handler_cfg = {
        "console": {
            "class": "logging.StreamHandler",
            "formatter": "standard",
            "filters": ["run_id"],
            # stdout carries bases and trace lines
            "stream": "ext://sys.stderr",
        },
        "uvicorn_console": {
            "class": "logging.StreamHandler",
            "formatter": "uvicorn_access",
        },
    }
    if log_file:
        handler_cfg["file"] = {
            "class": "logging.handlers.TimedRotatingFileHandler",
            "formatter": "standard",
            "filters": ["run_id"],
            "filename": str(log_file),
            "when": "midnight",
            "backupCount": 14,
            "encoding": "utf-8",
        }

    dictConfig({
        "version": 1,
        "disable_existing_loggers": False,

        "filters": {
            "run_id": {"()": RunIdFilter},
        },

        "formatters": {
            "standard": {
                "format": (
                    "%(asctime)s | %(levelname)s | %(name)s | run=%(run_id)s | "
                    "%(message)s (%(filename)s:%(lineno)d)"
                )
            },
            "uvicorn_access": {
                "format": "%(asctime)s | %(levelname)s | %(message)s"
            },
        },

        "handlers": handler_cfg,

        "loggers": {
            # children (weakgb.*) propagate here
            "weakgb": {"handlers": handlers, "level": level, "propagate": False},

            "uvicorn.error":  {"handlers": ["uvicorn_console"] + handlers[1:], "level": "INFO", "propagate": False},
            "uvicorn.access": {"handlers": ["uvicorn_console"] + handlers[1:], "level": "INFO", "propagate": False},
        },

        "root": {"handlers": handlers, "level": "WARNING"},
    })

    if log_file:
        logging.getLogger("weakgb").info(f"Logging to: {log_file}")
    return log_file

def get_logger(name: str = "weakgb") -> logging.Logger:
    return logging.getLogger(name)
