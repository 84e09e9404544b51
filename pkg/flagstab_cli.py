"""
flagstab - command-line entry point.

Prints the JSON result document on stdout; logs go to stderr.
"""
import json
import logging
import sys

from flagstab.cli.job import build_parser, job_from_args, run, EXIT_INVALID
from flagstab.config import load_settings
from flagstab.errors import ValidationError

logger = logging.getLogger(__name__)


def configure_logging(verbose: bool) -> None:
    level = logging.DEBUG if verbose else getattr(logging, load_settings().log_level, logging.INFO)
    logging.basicConfig(
        level=level,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        datefmt='%Y-%m-%d %H:%M:%S',
        handlers=[logging.StreamHandler(sys.stderr)]
    )


def main(argv=None) -> int:
    """Main entry point for the command line."""
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose)
    try:
        job = job_from_args(args)
    except ValidationError as e:
        logger.error(f"Invalid input ({e.field}): {e}")
        return EXIT_INVALID
    try:
        status, doc = run(job)
    except Exception as e:
        logger.error(f"Error during {job.command} on {job.type_spec}: {e}")
        import traceback
        logger.error(traceback.format_exc())
        return 1
    if status == 0:
        print(json.dumps(doc, indent=2))
    else:
        print(doc['error'], file=sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
