#!/usr/bin/env python3
"""
qformlab - Main Entry Point

Representation numbers of positive definite binary quadratic forms of odd
class number, with every identity checked against independent lattice counts.
Exit status: 0 pass, 2 invalid input or configuration, 3 verification mismatch.
"""

import sys
import os
from typing import List, Optional

sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from core.config import load_settings
from core.errors import QFormLabError
from core.logging.logger import setup_logging, get_module_logger
from modules.cli import COMMANDS, OutputFormatter, build_parser


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point"""
    args = build_parser().parse_args(argv)
    logger = get_module_logger('CLI')

    try:
        settings = load_settings(args.overrides)
        if args.log_level:
            settings.logging.level = args.log_level
        if args.fixtures:
            settings.verify.fixtures = args.fixtures

        setup_logging(settings.logging.model_dump())
        logger.debug(f"running {args.command}")

        output = COMMANDS[args.command](args, settings)
        formatter = OutputFormatter(settings.cli.default_format)
        print(formatter.render(output, args.format))

        if output.exit_code and output.message:
            logger.error(output.message)
        return output.exit_code

    except QFormLabError as e:
        logger.error(f"{type(e).__name__}: {e}")
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return e.exit_code


if __name__ == "__main__":
    sys.exit(main())
