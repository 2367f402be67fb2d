"""
CLI Arguments - Subcommand table, argument parsing and the resolved run configuration.

Every flag is declared once in SUBCOMMANDS; the argparse parser, the
RunConfig key check and RunConfig.to_argv() are all derived from that table.
"""

import argparse
import logging
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, Dict, List, Literal, Optional, Sequence, Union

from pydantic import BaseModel, ConfigDict, model_validator

from config import get_settings
from dynamics.maps import MIN_TRAP_INDEX
from experiments.convergence import MAX_COMPONENT_INDEX
from errors import UsageError

logger = logging.getLogger(__name__)

PROG = "wandering-lab"

SubcommandName = Literal[
    "fixed-points",
    "verify-lemmas",
    "render-cauliflower",
    "render-orbit-window",
    "estimate-component",
    "hausdorff-convergence",
    "diameter-check",
    "contraction",
    "explore-lambda",
]

ParameterValue = Union[int, float, str, List[int], None]


def parse_index_list(text: str) -> List[int]:
    """
    Parse "a..b" (inclusive), "a,b,c" or a mix such as "1..3,7".

    Raises:
        argparse.ArgumentTypeError: If the text is not a list of integers
    """
    values: List[int] = []
    try:
        for item in text.split(","):
            item = item.strip()
            if ".." in item:
                low, high = (int(part) for part in item.split("..", 1))
                if high < low:
                    raise argparse.ArgumentTypeError(f"empty range '{item}'")
                values.extend(range(low, high + 1))
            else:
                values.append(int(item))
    except ValueError:
        raise argparse.ArgumentTypeError(f"'{text}' is not an index list like 5..200 or 10,20,40")
    return values


def format_index_list(values: Sequence[int]) -> str:
    """Inverse of parse_index_list; contiguous runs of three or more collapse to a..b."""
    parts: List[str] = []
    start = 0
    values = list(values)
    while start < len(values):
        end = start
        while end + 1 < len(values) and values[end + 1] == values[end] + 1:
            end += 1
        if end - start >= 2:
            parts.append(f"{values[start]}..{values[end]}")
            start = end + 1
        else:
            parts.append(str(values[start]))
            start += 1
    return ",".join(parts)


def _component_index(text: str) -> int:
    n = int(text)
    if n < MIN_TRAP_INDEX:
        raise argparse.ArgumentTypeError(
            f"n={n} is below N0={MIN_TRAP_INDEX}; sound classification needs n >= {MIN_TRAP_INDEX}"
        )
    return n


def _component_indices(text: str) -> List[int]:
    values = parse_index_list(text)
    for n in values:
        if not MIN_TRAP_INDEX <= n <= MAX_COMPONENT_INDEX:
            raise argparse.ArgumentTypeError(f"component index {n} outside [{MIN_TRAP_INDEX}, {MAX_COMPONENT_INDEX}]")
    return values


@dataclass(frozen=True)
class Flag:
    """One command-line option: key in RunConfig.parameters, type, default and help."""

    key: str
    kind: Callable[[str], Any]
    default: ParameterValue
    help: str
    choices: Optional[Sequence[str]] = None
    # Settings field that overrides the default when set
    setting: Optional[str] = None
    # Extra option strings accepted for the same flag
    aliases: Sequence[str] = ()

    def resolved_default(self) -> ParameterValue:
        if self.setting is not None:
            return getattr(get_settings(), self.setting)
        return self.default

    @property
    def option(self) -> str:
        return "--" + self.key.replace("_", "-")


THREADS = Flag("threads", int, None, "worker threads; unset uses WANDERING_LAB_THREADS or the CPU count")

SUBCOMMANDS: Dict[str, Dict[str, Any]] = {
    "fixed-points": {
        "help": "real fixed points per window, the low fixed points and an escape witness near 0",
        "output": "fixed_points.csv",
        "flags": [
            Flag("n", parse_index_list, list(range(1, 101)), "window indices n of (2nπ, 2(n+1)π)"),
            Flag("delta", float, 0.1, "escape witness searched in (−delta, 0)"),
        ],
    },
    "verify-lemmas": {
        "help": "sampled inequality checks with worst-margin reports",
        "output": "lemmas.txt",
        "flags": [
            Flag("lemma", str, "all", "check name, numbered id such as 3.4, or all"),
            Flag("n", parse_index_list, None, "index sweep replacing the check's default"),
            Flag("samples", int, None, "sample count replacing the check's default"),
        ],
    },
    "render-cauliflower": {
        "help": "classify the parabolic basin of q(z) = z − πz² and write a PPM",
        "output": "cauliflower.ppm",
        "flags": [
            Flag("res", int, 512, "pixels per side of [−2/π, 2/π]²"),
            Flag("max_iter", int, 5000, "iteration budget before a pixel stays Undecided", setting="cauliflower_max_iter"),
        ],
    },
    "render-orbit-window": {
        "help": "best-effort picture of a plane window covering several wandering components",
        "aliases": ["render-figure1"],
        "output": "orbit_window.ppm",
        "flags": [
            Flag("center_re", float, 12.0 * math.pi, "real part of the window center"),
            Flag("center_im", float, 0.0, "imaginary part of the window center"),
            Flag("half_width", float, 4.0 * math.pi, "half of the window width"),
            Flag("half_height", float, 2.0, "half of the window height"),
            Flag("nx", int, 800, "pixel columns"),
            Flag("ny", int, 400, "pixel rows"),
            Flag("max_steps", int, 1000, "iteration budget", setting="wandering_max_steps"),
            Flag(
                "min_index", int, MIN_TRAP_INDEX, "first trap index N0 counted as Inside", aliases=("--n0",)
            ),
            Flag("inset_res", int, 0, "side of the U_2 zoom placed to the right; 0 disables it"),
        ],
    },
    "estimate-component": {
        "help": "classify one wandering component U_n and write a PPM plus its measurements",
        "output": "component.ppm",
        "flags": [
            Flag("n", _component_index, 10, f"component index, at least N0={MIN_TRAP_INDEX}"),
            Flag("res", int, 1024, "pixels per side of the window around U_n", setting="component_resolution"),
            Flag("max_steps", int, 1000, "iteration budget", setting="wandering_max_steps"),
        ],
    },
    "hausdorff-convergence": {
        "help": "d_H between rescaled components V_n and the cauliflower",
        "output": "convergence.csv",
        "flags": [
            Flag("n", _component_indices, [10, 20, 40, 80], "component indices in [N0, 500]"),
            Flag("res", int, 1024, "pixels per side of every grid"),
            Flag("max_iter", int, 5000, "cauliflower iteration budget", setting="cauliflower_max_iter"),
            Flag("max_steps", int, 1000, "wandering iteration budget", setting="wandering_max_steps"),
            Flag("method", str, "bucketed", "Hausdorff kernel", choices=("brute", "bucketed")),
        ],
    },
    "diameter-check": {
        "help": "diam(U_n) against 2/(nπ) plus one pixel diagonal",
        "output": "diameters.csv",
        "flags": [
            Flag("n", _component_indices, [10, 20, 40, 80], "component indices in [N0, 500]"),
            Flag("res", int, 1024, "pixels per side of every grid"),
            Flag("max_steps", int, 1000, "wandering iteration budget", setting="wandering_max_steps"),
        ],
    },
    "contraction": {
        "help": "hyperbolic contraction along real orbits and the orderings of paired orbits",
        "output": "contraction.csv",
        "flags": [
            Flag("m", int, MIN_TRAP_INDEX, "starting index m"),
            Flag("t0", float, 18.0 * math.pi + 1.0, "start point in H_(3(m+1)π)"),
            Flag("steps", int, 1000, "number of maps applied"),
            Flag("y0", float, None, "start of the paired orbits; unset uses 2mπ + 1/(12mπ)"),
            Flag("ordering_steps", int, 50, "length of the paired orbits"),
        ],
    },
    "explore-lambda": {
        "help": "HEURISTIC classification of f_λ near 2nπ against the bounded set of q_λ",
        "output": "lambda",
        "flags": [
            Flag("lam_re", float, 0.0, "real part of λ"),
            Flag("lam_im", float, 0.0, "imaginary part of λ"),
            Flag("n", parse_index_list, [10, 20, 40], "increasing component indices, each at least N0"),
            Flag("res", int, 256, "pixels per side of every grid"),
            Flag("half_width", float, None, "half-width in rescaled coordinates; unset fits q_λ"),
            Flag("max_iter", int, 200, "iteration budget"),
            Flag("radius", float, 1.0, "exploration bound on |f_λᵏ(z) − 2(n+k)π|", setting="explore_radius"),
        ],
    },
}


# Alternative subcommand names, mapped to the canonical one
SUBCOMMAND_ALIASES: Dict[str, str] = {
    alias: name for name, entry in SUBCOMMANDS.items() for alias in [name, *entry.get("aliases", [])]
}


def flags_for(subcommand: str) -> List[Flag]:
    return list(SUBCOMMANDS[subcommand]["flags"]) + [THREADS]


class RunConfig(BaseModel):
    """Fully resolved run: subcommand, every parameter after defaults, output path."""

    model_config = ConfigDict(extra="forbid")

    subcommand: SubcommandName
    parameters: Dict[str, ParameterValue]
    output_path: str

    @model_validator(mode="after")
    def _known_parameters(self) -> "RunConfig":
        known = {flag.key for flag in flags_for(self.subcommand)}
        unknown = sorted(set(self.parameters) - known)
        if unknown:
            raise ValueError(f"unknown parameters for {self.subcommand}: {', '.join(unknown)}")
        return self

    def get(self, key: str) -> Any:
        return self.parameters[key]

    def to_argv(self) -> List[str]:
        """Command line that parses back to this config."""
        argv = [self.subcommand]
        for flag in flags_for(self.subcommand):
            value = self.parameters.get(flag.key)
            if value is None:
                continue
            if isinstance(value, list):
                text = format_index_list(value)
            elif isinstance(value, float):
                text = repr(value)
            else:
                text = str(value)
            argv.extend([flag.option, text])
        argv.extend(["--output", self.output_path])
        return argv


class LabArgumentParser(argparse.ArgumentParser):
    """ArgumentParser that raises UsageError instead of exiting."""

    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> LabArgumentParser:
    parser = LabArgumentParser(
        prog=PROG,
        description="Numerical laboratory for the wandering domains of f(z) = z cos z + 2π.",
    )
    subparsers = parser.add_subparsers(dest="subcommand", required=True, metavar="SUBCOMMAND")
    for name, entry in SUBCOMMANDS.items():
        sub = subparsers.add_parser(
            name,
            aliases=entry.get("aliases", []),
            help=entry["help"],
            description=entry["help"],
        )
        for flag in flags_for(name):
            default = flag.resolved_default()
            shown = format_index_list(default) if isinstance(default, list) else default
            sub.add_argument(
                flag.option,
                *flag.aliases,
                dest=flag.key,
                type=flag.kind,
                default=default,
                choices=flag.choices,
                help=f"{flag.help} (default: {shown})",
            )
        sub.add_argument(
            "--output",
            default=None,
            help=f"output path; unset writes {entry['output']} under WANDERING_LAB_OUTPUT_DIR",
        )
    return parser


def parse_args(argv: Sequence[str]) -> RunConfig:
    """
    Parse a command line into a resolved RunConfig.

    Raises:
        UsageError: On malformed input, including an empty argv
    """
    argv = list(argv)
    if not argv:
        raise UsageError(f"{PROG}: a subcommand is required; see --help")
    namespace = build_parser().parse_args(argv)
    values = vars(namespace)
    subcommand = SUBCOMMAND_ALIASES[values.pop("subcommand")]
    output = values.pop("output") or str(Path(get_settings().output_dir) / SUBCOMMANDS[subcommand]["output"])
    config = RunConfig(subcommand=subcommand, parameters=values, output_path=output)
    logger.debug(f"Parsed {argv} into {config.model_dump()}")
    return config
