import logging
import os

from dotenv import load_dotenv

load_dotenv()

logger = logging.getLogger(__name__)


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name, "")
    if not raw:
        return default
    try:
        value = int(raw)
    except ValueError:
        logger.warning("%s=%r is not an integer, using %d", name, raw, default)
        return default
    if value < 1:
        logger.warning("%s=%d must be at least 1, using %d", name, value, default)
        return default
    return value


class Config:
    # Parallelism for grid suites
    THREADS = _env_int("FIBCUBE_THREADS", os.cpu_count() or 1)

    # Logging
    LOG_LEVEL = os.getenv("FIBCUBE_LOG_LEVEL", "WARNING").upper()

    # Reports
    REPORTS_DIR = os.getenv(
        "FIBCUBE_REPORTS_DIR",
        os.path.join(os.path.dirname(__file__), "..", "reports"),
    )

    # Desk-scale limits
    ISOMORPHISM_VERTEX_LIMIT = 64
    THETA_VERTEX_LIMIT = 2000
    BRUTE_FORCE_WORD_LENGTH = 20
