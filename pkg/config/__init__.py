from .logging_config import setup_logging
from .settings import load_settings

__all__ = ["load_settings", "setup_logging"]
