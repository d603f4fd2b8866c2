from .logger import setup_logging, get_module_logger

__all__ = ['setup_logging', 'get_module_logger']
