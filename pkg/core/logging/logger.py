import logging
import sys
import colorlog
from typing import Any, Mapping, Optional
from .formatters import get_console_formatter, get_file_formatter, ModuleFormatter

# Colors per domain module; unknown names fall back to white
MODULE_COLORS = {
    'NTheory': 'white',
    'Forms': 'blue',
    'Series': 'cyan',
    'Theta': 'green',
    'RepNum': 'purple',
    'Classify': 'yellow',
    'Verify': 'green',
    'CLI': 'white',
}

_module_loggers = {}
_file_handler: Optional[logging.Handler] = None


def setup_logging(config: Mapping[str, Any]):
    """Setup logging with error resilience and fallback options

    Module loggers do not propagate, so the configured level, console style
    and file sink are applied to each of them as well as to the root logger.
    """
    global _file_handler
    level = getattr(logging, str(config.get('level', 'WARNING')).upper())
    colorful = bool(config.get('colorful', True))

    root_logger = logging.getLogger()
    root_logger.setLevel(level)

    for handler in root_logger.handlers[:]:
        root_logger.removeHandler(handler)

    try:
        if colorful:
            console_handler = colorlog.StreamHandler(sys.stderr)
            console_handler.setFormatter(get_console_formatter())
        else:
            console_handler = logging.StreamHandler(sys.stderr)
            console_handler.setFormatter(get_file_formatter())

        console_handler.setLevel(level)
        root_logger.addHandler(console_handler)

    except Exception as e:
        print(f"Warning: Colored logging failed ({e}), falling back to basic logging", file=sys.stderr)
        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setFormatter(get_file_formatter())
        console_handler.setLevel(level)
        root_logger.addHandler(console_handler)

    if _file_handler is not None:
        _file_handler.close()
        _file_handler = None
    try:
        if config.get('file'):
            _file_handler = logging.FileHandler(config['file'])
            _file_handler.setFormatter(get_file_formatter())
            _file_handler.setLevel(level)
            root_logger.addHandler(_file_handler)
    except Exception as e:
        print(f"Warning: File logging failed ({e}), continuing without file logging", file=sys.stderr)

    for name, console in _module_loggers.items():
        logger = logging.getLogger(name)
        logger.setLevel(level)
        console.setFormatter(ModuleFormatter(name, MODULE_COLORS.get(name, 'white'), colorful))
        for handler in logger.handlers[:]:
            if handler is not console:
                logger.removeHandler(handler)
        if _file_handler is not None:
            logger.addHandler(_file_handler)

    return root_logger


def get_module_logger(module_name: str, color: Optional[str] = None) -> logging.Logger:
    """Get module-specific logger with error resilience"""
    logger = logging.getLogger(module_name)

    if module_name not in _module_loggers:
        try:
            console_handler = colorlog.StreamHandler(sys.stderr)
            color = color or MODULE_COLORS.get(module_name, 'white')
            console_handler.setFormatter(ModuleFormatter(module_name, color))

        except Exception as e:
            print(f"Warning: Colored logging failed for {module_name} ({e}), using basic logging",
                  file=sys.stderr)
            console_handler = logging.StreamHandler(sys.stderr)
            console_handler.setFormatter(ModuleFormatter(module_name, colorful=False))

        logger.addHandler(console_handler)
        if _file_handler is not None:
            logger.addHandler(_file_handler)
        logger.setLevel(logging.getLogger().level or logging.WARNING)
        logger.propagate = False
        _module_loggers[module_name] = console_handler

    return logger
