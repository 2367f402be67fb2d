"""CLI module: argument parsing, dispatch and atomic output for every subcommand."""

from .args import RunConfig, build_parser, format_index_list, parse_args, parse_index_list
from .output import sidecar_path, write_json_atomic, write_sidecar, write_text_atomic
from .runner import EXIT_FAILED, EXIT_OK, EXIT_USAGE, RunOutcome, execute, failure_record

__all__ = [
    "RunConfig",
    "build_parser",
    "format_index_list",
    "parse_args",
    "parse_index_list",
    "sidecar_path",
    "write_json_atomic",
    "write_sidecar",
    "write_text_atomic",
    "EXIT_FAILED",
    "EXIT_OK",
    "EXIT_USAGE",
    "RunOutcome",
    "execute",
    "failure_record",
]
