import os
from dotenv import load_dotenv
from pathlib import Path

# Go up one level from app/ to root/
env_path = Path(__file__).resolve().parent.parent / ".env"
load_dotenv(dotenv_path=env_path)


def _flag(name: str, default: str = "0") -> bool:
    return os.getenv(name, default).strip().lower() in ("1", "true", "yes", "on")


# Termination guard shared by both algorithms (queue pops / processed saturated sets)
MAX_QUEUE_POPS = int(os.getenv("MAX_QUEUE_POPS", "100000"))

# The multivariate-coefficient backend is experimental and off unless asked for
EXPERIMENTAL_UFD = _flag("EXPERIMENTAL_UFD")

DEFAULT_CRITERIA = os.getenv("DEFAULT_CRITERIA", "all")
CLI_WORKERS = int(os.getenv("CLI_WORKERS", "1"))
