import json
import logging
import sys
import time
from typing import Any, Dict, Optional

from config import FLAGS

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def configure(level: Optional[str] = None) -> None:
    """stderr logging for the command line; library modules only create loggers."""
    root = logging.getLogger()
    for handler in list(root.handlers):
        root.removeHandler(handler)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    root.addHandler(handler)
    root.setLevel((level or FLAGS.LOG_LEVEL).upper())


def log_run(command: str, summary: Dict[str, Any]) -> bool:
    """
    Append one minimal JSON record for a CLI run:
      - command
      - summary
      - timestamp

    Never raises; a failed write is reported as a warning and returns False.
    """
    if not FLAGS.LOGGING_ENABLED:
        return False
    try:
        record = {
            "command": command,
            "summary": summary,
            "timestamp": time.strftime("%Y-%m-%dT%H:%M:%S%z"),
        }
        with open(FLAGS.RUN_LOG_PATH, "a", encoding="utf-8") as fh:
            fh.write(json.dumps(record, default=str) + "\n")
        return True

    except Exception as e:
        logger.warning("Failed to write run record to %s: %s", FLAGS.RUN_LOG_PATH, e)
        return False
