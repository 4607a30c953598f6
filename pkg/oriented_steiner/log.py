# oriented_steiner/log.py - Logging setup on top of rich
import logging

from rich.console import Console
from rich.logging import RichHandler

from .config import Config

console = Console(stderr=True)

_configured = False


def _configure():
    global _configured
    if _configured:
        return
    handler = RichHandler(console=console, show_time=False, show_path=False, markup=False)
    handler.setFormatter(logging.Formatter("%(message)s"))
    root = logging.getLogger("oriented_steiner")
    root.addHandler(handler)
    root.setLevel(Config.LOG_LEVEL.upper())
    root.propagate = False
    _configured = True


def get_logger(name: str) -> logging.Logger:
    """Logger under the package namespace, rendered by rich on stderr"""
    _configure()
    if not name.startswith("oriented_steiner"):
        name = f"oriented_steiner.{name}"
    return logging.getLogger(name)
