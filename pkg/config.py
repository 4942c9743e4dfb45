from dataclasses import dataclass
import os

@dataclass
class Flags:
    # Run records
    LOGGING_ENABLED: bool = bool(os.getenv("LOGGING_ENABLED", "1") == "1")
    RUN_LOG_PATH: str = os.getenv("RUN_LOG_PATH", "runs.jsonl")
    LOG_LEVEL: str = os.getenv("LOG_LEVEL", "INFO")

    # Builder
    MAX_BUILD_DIM: int = int(os.getenv("MAX_BUILD_DIM", 7))
    BUILD_CERTIFY_MAX_DIM: int = int(os.getenv("BUILD_CERTIFY_MAX_DIM", 5))
    MATCH_REFERENCE: bool = bool(os.getenv("MATCH_REFERENCE", "1") == "1")
    ORIENTATION_SEARCH_WIDTH: int = int(os.getenv("ORIENTATION_SEARCH_WIDTH", 12))
    ORIENTATION_SEARCH_BUDGET: int = int(os.getenv("ORIENTATION_SEARCH_BUDGET", 150))

    # Verification budgets
    ZHOMOLOGY_MAX_DIM: int = int(os.getenv("ZHOMOLOGY_MAX_DIM", 4))
    BOUNDARY_CHECK_MAX_DIM: int = int(os.getenv("BOUNDARY_CHECK_MAX_DIM", 4))
    LINK_CHECK_EDGES: bool = bool(os.getenv("LINK_CHECK_EDGES", "0") == "1")
    VERIFY_WORKERS: int = int(os.getenv("VERIFY_WORKERS", 4))

FLAGS = Flags()
