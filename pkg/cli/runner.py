"""
CLI Runner - Dispatches a resolved RunConfig to its operation and turns the outcome into an exit status.

Exit status 0 means every asserted check of the run passed, 1 means a check
failed or the operation raised, 2 means the command line was unusable.
"""

import json
import logging
import math
import shlex
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Dict, List, Optional, TextIO

from pydantic import ValidationError

from basin.render import encode_ppm, grid_to_ppm
from dynamics.real import (
    check_fixed_point_record,
    find_escaping_negative,
    find_julia_preimage,
    find_low_fixed_points,
    find_real_fixed_points,
)
from errors import UsageError
from experiments.convergence import run_diameter_check, run_hausdorff_convergence
from experiments.figures import estimate_component, render_cauliflower, run_orbit_window
from experiments.lambda_family import LambdaRunConfig, run_lambda_explore, sidecar_metadata
from metrics.contraction import contraction_experiment, wandering_contraction
from verify.lemmas import check_ordering_sequences
from verify.verifier import LemmaVerifier, ordering_start

from .args import PROG, RunConfig
from .output import write_sidecar, write_text_atomic

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

# Allowed deviation of the multiplier at π from −1, and of the second low fixed point from 4π/3
PI_MULTIPLIER_TOLERANCE = 1e-12
LOW_FIXED_POINT_TOLERANCE = 1e-12

# Hyperbolic step size, and paired-orbit bound, required after 999 steps
LATE_STEP = 999
LATE_STEP_BOUND = 0.01


@dataclass
class RunOutcome:
    """Result lines of one run and the messages of its failed checks."""

    lines: List[str] = field(default_factory=list)
    failures: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, condition: bool, message: str) -> None:
        if not condition:
            self.failures.append(message)


def _metadata(config: RunConfig, **extra) -> dict:
    return {"config": config.model_dump(), "command": _command_line(config), **extra}


def _command_line(config: RunConfig) -> str:
    return shlex.join([PROG] + config.to_argv())


def _fixed_points(config: RunConfig) -> RunOutcome:
    outcome = RunOutcome()
    records = list(find_low_fixed_points())
    for n in config.get("n"):
        records.extend(find_real_fixed_points(n))

    rows = ["n,x,multiplier,residual,eta"]
    for record in records:
        rows.append(f"{record.interval_index},{record.x!r},{record.multiplier!r},{record.residual!r},{record.eta!r}")
        problem = check_fixed_point_record(record)
        outcome.check(problem is None, f"fixed point {record.x!r}: {problem}")

    low, high = records[0], records[1]
    outcome.check(
        abs(low.x - math.pi) < 1e-10 and abs(low.multiplier + 1.0) < PI_MULTIPLIER_TOLERANCE,
        f"fixed point {low.x!r} is not π with multiplier −1",
    )
    outcome.check(
        abs(high.x - 4 * math.pi / 3) < LOW_FIXED_POINT_TOLERANCE,
        f"fixed point {high.x!r} is not 4π/3",
    )

    witness = find_escaping_negative(config.get("delta"))
    preimage = find_julia_preimage(witness)
    outcome.check(witness.reverify(), f"escape witness x0={witness.x0!r} n={witness.n} failed re-verification")

    outcome.lines.append(f"fixed_points  {len(records)}  windows={len(config.get('n'))}")
    outcome.lines.append(f"escape  x0={witness.x0!r}  n={witness.n}  value={witness.value!r}")
    outcome.lines.append(
        f"preimage  xi={preimage.xi!r}  fixed_point={preimage.fixed_point!r}  residual={preimage.residual:.3e}"
    )
    write_text_atomic(config.output_path, "\n".join(rows) + "\n")
    return outcome


def _verify_lemmas(config: RunConfig) -> RunOutcome:
    outcome = RunOutcome()
    verifier = LemmaVerifier(samples=config.get("samples"), workers=config.get("threads"))
    reports = verifier.run(config.get("lemma"), config.get("n"))
    for report in reports:
        outcome.lines.append(report.to_line())
        outcome.check(report.passed, report.to_line())
    write_text_atomic(config.output_path, "\n".join(outcome.lines) + "\n")
    return outcome


def _render_cauliflower(config: RunConfig) -> RunOutcome:
    outcome = RunOutcome()
    grid = render_cauliflower(config.get("res"), config.get("max_iter"), config.get("threads"))
    outcome.check(grid.is_mirror_symmetric(), "cauliflower picture is not symmetric about the real axis")
    outcome.lines.append(f"cauliflower  {grid.counts()}  undecided={grid.undecided_fraction:.6f}")
    write_text_atomic(config.output_path, grid_to_ppm(grid))
    write_sidecar(config.output_path, _metadata(config, grid=grid.spec.to_dict(), counts=grid.counts()))
    return outcome


def _render_orbit_window(config: RunConfig) -> RunOutcome:
    outcome = RunOutcome()
    center = complex(config.get("center_re"), config.get("center_im"))
    result = run_orbit_window(
        center=center,
        half_width=config.get("half_width"),
        half_height=config.get("half_height"),
        nx=config.get("nx"),
        ny=config.get("ny"),
        max_steps=config.get("max_steps"),
        min_index=config.get("min_index"),
        inset_resolution=config.get("inset_res"),
        workers=config.get("threads"),
    )
    if center.imag == 0:
        outcome.check(result.grid.is_mirror_symmetric(), "plane window is not symmetric about the real axis")
    outcome.lines.append(f"orbit_window  {result.grid.counts()}")
    write_text_atomic(config.output_path, encode_ppm(result.verdicts))
    metadata = _metadata(config, classification="BEST-EFFORT", grid=result.grid.spec.to_dict(), counts=result.grid.counts())
    if result.inset is not None:
        metadata["inset"] = result.inset.spec.to_dict()
    write_sidecar(config.output_path, metadata)
    return outcome


def _estimate_component(config: RunConfig) -> RunOutcome:
    outcome = RunOutcome()
    estimate = estimate_component(config.get("n"), config.get("res"), config.get("max_steps"), config.get("threads"))
    outcome.check(
        estimate.within_bound,
        f"diam(U_{estimate.n})={estimate.diameter!r} exceeds {estimate.bound!r} plus one pixel diagonal",
    )
    outcome.lines.append(" ".join(f"{k}={v}" for k, v in estimate.summary().items()))
    write_text_atomic(config.output_path, grid_to_ppm(estimate.grid))
    write_sidecar(config.output_path, _metadata(config, estimate=estimate.summary(), grid=estimate.grid.spec.to_dict()))
    return outcome


def _hausdorff_convergence(config: RunConfig) -> RunOutcome:
    outcome = RunOutcome()
    report = run_hausdorff_convergence(
        config.get("n"),
        config.get("res"),
        cauliflower_max_iter=config.get("max_iter"),
        wandering_max_steps=config.get("max_steps"),
        method=config.get("method"),
        workers=config.get("threads"),
    )
    largest_pixel = max(row.pixel_size for row in report.rows)
    outcome.check(
        report.max_rescaled_modulus <= 2.0 / math.pi + largest_pixel,
        f"rescaled component reaches |v|={report.max_rescaled_modulus!r}, beyond 2/π plus one pixel",
    )
    for row in report.rows:
        outcome.check(row.d_H >= 0, f"negative d_H at n={row.n}")
        outcome.lines.append(row.to_csv())
    outcome.lines.append(f"trend  strictly_decreasing={report.strictly_decreasing}  halved={report.halved}  (empirical)")

    write_text_atomic(config.output_path, report.to_csv())
    write_sidecar(
        config.output_path,
        _metadata(
            config,
            cauliflower_undecided_fraction=report.cauliflower_undecided_fraction,
            max_rescaled_modulus=report.max_rescaled_modulus,
            empirical={"strictly_decreasing": report.strictly_decreasing, "halved": report.halved},
        ),
    )
    return outcome


def _diameter_check(config: RunConfig) -> RunOutcome:
    outcome = RunOutcome()
    report = run_diameter_check(config.get("n"), config.get("res"), config.get("max_steps"), config.get("threads"))
    rows = ["n,diameter,bound,stated_bound,tolerance,stated_margin,rescaled_diameter"]
    for row in report.rows:
        rows.append(
            f"{row.n},{row.diameter!r},{row.bound!r},{row.stated_bound!r},{row.tolerance!r},"
            f"{row.stated_margin!r},{row.rescaled_diameter!r}"
        )
        outcome.check(row.passed, f"diam(U_{row.n})={row.diameter!r} exceeds {row.bound + row.tolerance!r}")
    outcome.lines.extend(rows[1:])
    outcome.lines.append(f"shrinking={report.shrinking}")
    write_text_atomic(config.output_path, "\n".join(rows) + "\n")
    return outcome


def _contraction(config: RunConfig) -> RunOutcome:
    outcome = RunOutcome()
    m = config.get("m")
    y0 = config.get("y0") if config.get("y0") is not None else ordering_start(m)

    trace = contraction_experiment(m, config.get("t0"), config.get("steps"))
    ordering_steps = config.get("ordering_steps")
    ordering = check_ordering_sequences(m, y0, ordering_steps)
    epsilon = LATE_STEP_BOUND if ordering_steps > LATE_STEP else None
    paired = wandering_contraction(m, y0, ordering_steps, epsilon=epsilon)
    outcome.check(ordering.passed, ordering.to_line())
    if len(trace.distances) > LATE_STEP:
        outcome.check(
            trace.distances[LATE_STEP] < LATE_STEP_BOUND,
            f"d_{LATE_STEP}={trace.distances[LATE_STEP]!r} is not below {LATE_STEP_BOUND}",
        )

    rows = ["n,t_n,d_n,distance_bound,lower_bound"]
    for n in range(len(trace.distances)):
        rows.append(
            f"{n},{trace.t[n]!r},{trace.distances[n]!r},{trace.distance_bounds[n]!r},{trace.lower_bounds[n]!r}"
        )
    outcome.lines.append(f"contraction  m={m}  steps={len(trace.distances)}  d_last={trace.distances[-1]:.6e}")
    outcome.lines.append(f"paired  final_bound={paired.final_bound:.6e}")
    outcome.lines.append(ordering.to_line())
    write_text_atomic(config.output_path, "\n".join(rows) + "\n")
    return outcome


def _explore_lambda(config: RunConfig) -> RunOutcome:
    outcome = RunOutcome()
    run_config = LambdaRunConfig(
        lam_re=config.get("lam_re"),
        lam_im=config.get("lam_im"),
        n_list=config.get("n"),
        resolution=config.get("res"),
        half_width=config.get("half_width"),
        max_iter=config.get("max_iter"),
        explore_radius=config.get("radius"),
    )
    result = run_lambda_explore(run_config, workers=config.get("threads"))
    metadata = _metadata(config, **sidecar_metadata(result))

    directory = Path(config.output_path)
    for n in run_config.n_list:
        image = directory / f"lambda_n{n}.ppm"
        write_text_atomic(image, encode_ppm(result.image(n)))
        write_sidecar(image, metadata)
    table = directory / "report.csv"
    write_text_atomic(table, result.to_csv())
    write_sidecar(table, metadata)

    outcome.lines.append(f"lambda={run_config.param.lam}  c={result.c}  quadratic={result.label}  HEURISTIC")
    outcome.lines.extend(row.to_csv() for row in result.rows)
    return outcome


HANDLERS: Dict[str, Callable[[RunConfig], RunOutcome]] = {
    "fixed-points": _fixed_points,
    "verify-lemmas": _verify_lemmas,
    "render-cauliflower": _render_cauliflower,
    "render-orbit-window": _render_orbit_window,
    "estimate-component": _estimate_component,
    "hausdorff-convergence": _hausdorff_convergence,
    "diameter-check": _diameter_check,
    "contraction": _contraction,
    "explore-lambda": _explore_lambda,
}


def failure_record(subcommand: Optional[str], error_type: str, message: str, code: int) -> str:
    """One-line JSON failure record."""
    return json.dumps(
        {"error": {"message": message, "type": error_type, "code": code, "subcommand": subcommand}},
        ensure_ascii=False,
    )


def emit_config(config: RunConfig, stream: TextIO) -> None:
    """Print the resolved config as JSON and as the command line that reproduces it."""
    print(json.dumps({"config": config.model_dump()}, ensure_ascii=False), file=stream)
    print(f"# {_command_line(config)}", file=stream)
    stream.flush()


def execute(config: RunConfig, stdout: TextIO = sys.stdout, stderr: TextIO = sys.stderr) -> int:
    """
    Run the operation named by config.subcommand.

    Returns:
        0 if every asserted check passed, 1 on a failed check or any other
        raised error (including failed writes), 2 on a usage error
    """
    emit_config(config, stdout)
    try:
        outcome = HANDLERS[config.subcommand](config)
    except (UsageError, ValidationError) as e:
        logger.error(f"Invalid parameters for {config.subcommand}: {e}")
        print(failure_record(config.subcommand, "usage_error", " ".join(str(e).split()), EXIT_USAGE), file=stderr)
        return EXIT_USAGE
    except Exception as e:
        logger.exception(f"Error running {config.subcommand}: {e}")
        print(failure_record(config.subcommand, type(e).__name__, str(e), EXIT_FAILED), file=stderr)
        return EXIT_FAILED

    for line in outcome.lines:
        print(line, file=stdout)
    if not outcome.passed:
        logger.warning(f"{config.subcommand}: {len(outcome.failures)} check(s) failed")
        print(failure_record(config.subcommand, "check_failed", outcome.failures[0], EXIT_FAILED), file=stderr)
        return EXIT_FAILED
    logger.info(f"{config.subcommand}: all checks passed")
    return EXIT_OK
