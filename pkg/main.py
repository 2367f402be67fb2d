"""
Wandering Lab - Command-line entry point

Numerical laboratory for the wandering domains of f(z) = z cos z + 2π:
fixed points, sampled inequality checks, basin pictures, Hausdorff
convergence and hyperbolic contraction experiments.
"""

import logging
import sys
from typing import List, Optional

from cli.args import parse_args
from cli.runner import EXIT_USAGE, execute, failure_record
from config import get_settings
from errors import UsageError

# Configure logging
settings = get_settings()
logging.basicConfig(
    level=getattr(logging, settings.log_level),
    format="%(asctime)s - %(name)s - %(levelname)s - %(message)s"
)
logger = logging.getLogger(__name__)


def main(argv: Optional[List[str]] = None) -> int:
    """Parse the command line and run it; returns the exit status."""
    argv = sys.argv[1:] if argv is None else argv
    try:
        config = parse_args(argv)
    except UsageError as e:
        logger.error(f"Usage error: {e}")
        print(failure_record(None, "usage_error", str(e), EXIT_USAGE), file=sys.stderr)
        return EXIT_USAGE

    logger.info(f"Starting {config.subcommand}")
    return execute(config)


if __name__ == "__main__":
    sys.exit(main())
