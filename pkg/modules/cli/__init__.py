from .models import CommandOutput
from .formatter import OutputFormatter
from .parser import build_parser
from .commands import COMMANDS, EXIT_MISMATCH

__all__ = ['CommandOutput', 'OutputFormatter', 'build_parser', 'COMMANDS', 'EXIT_MISMATCH']
