# oriented_steiner/config.py - Runtime configuration
import os

from dotenv import load_dotenv

load_dotenv()


class Config:
    LOG_LEVEL = os.getenv("OSQ_LOG_LEVEL", "WARNING")
    DEFAULT_SEED = int(os.getenv("OSQ_DEFAULT_SEED", "0"))
    PROBE_ELEMENT = int(os.getenv("OSQ_PROBE_ELEMENT", "0"))  # y used to pin inverse-witness candidates
    MAX_WORKERS = int(os.getenv("OSQ_MAX_WORKERS", "1"))  # threads for concurrent law checks
    MAX_SEARCH_ORDER = int(os.getenv("OSQ_MAX_SEARCH_ORDER", "24"))  # brute-force isomorphism limit
    DEFAULT_EXTENSION_KIND = os.getenv("OSQ_DEFAULT_EXTENSION_KIND", "canonical")
