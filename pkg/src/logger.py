from loguru import logger
from src.config import settings
import sys

_console_handler_id = None

CONSOLE_FORMAT = "<green>{time:YYYY-MM-DD HH:mm:ss}</green> | <level>{level: <8}</level> | <cyan>{name}</cyan>:<cyan>{function}</cyan> - <level>{message}</level>"


def setup_logger():
    """Configure logging for the application"""
    global _console_handler_id

    # Remove default handler
    logger.remove()

    # Add console handler
    _console_handler_id = logger.add(
        sys.stderr,
        format=CONSOLE_FORMAT,
        level=settings.log_level
    )

    # Add file handler
    if settings.log_to_file:
        logger.add(
            settings.log_file,
            format="{time:YYYY-MM-DD HH:mm:ss} | {level: <8} | {name}:{function} - {message}",
            level="DEBUG",
            rotation="500 MB",
            retention="7 days"
        )

    return logger


def set_console_level(level: str):
    """Swap the console handler for one at the given level"""
    global _console_handler_id
    if _console_handler_id is not None:
        logger.remove(_console_handler_id)
    _console_handler_id = logger.add(sys.stderr, format=CONSOLE_FORMAT, level=level.upper())


logger = setup_logger()
