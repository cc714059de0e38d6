"""
Logging configuration for isoset
"""

import logging
import sys
from typing import Optional

from config.settings import settings


def setup_logging(level: Optional[str] = None) -> logging.Logger:
    """Setup logging configuration"""

    level_name = (level or settings.LOG_LEVEL).upper()

    # Reports go to stdout, so log records stay on stderr
    handlers: list = [logging.StreamHandler(sys.stderr)]
    if settings.LOG_FILE is not None:
        settings.LOG_FILE.parent.mkdir(parents=True, exist_ok=True)
        handlers.append(logging.FileHandler(settings.LOG_FILE))

    logging.basicConfig(
        level=getattr(logging, level_name),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=handlers,
        force=True,
    )

    # Create logger
    logger = logging.getLogger("isoset")
    logger.setLevel(getattr(logging, level_name))

    return logger


def get_logger(name: str = "isoset") -> logging.Logger:
    """Get a logger instance"""
    return logging.getLogger(name)
