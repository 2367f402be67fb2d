"""Dynamics module: the entire map f, its conjugated and scaled relatives, and its real dynamics."""

from .maps import (
    MIN_TRAP_INDEX,
    TWO_PI,
    FamilyParam,
    IndexedMapId,
    MapKind,
    compose_phi,
    compose_psi,
    eval_f,
    eval_f_lambda,
    eval_g,
    eval_g_lambda,
    eval_h,
    eval_h_lambda,
    eval_q,
    eval_q_lambda,
    eval_T,
    eval_w,
    evaluate,
    h_series,
    iterate_q,
    iterate_q_lambda,
    mandelbrot_param,
)
from .real import (
    EscapeWitness,
    FixedPointRecord,
    JuliaPreimage,
    PairedOrbits,
    check_fixed_point_record,
    eta_sequence,
    find_escaping_negative,
    find_julia_preimage,
    find_low_fixed_points,
    find_real_fixed_points,
    multiplier,
    paired_real_orbits,
)

__all__ = [
    "MIN_TRAP_INDEX",
    "TWO_PI",
    "FamilyParam",
    "IndexedMapId",
    "MapKind",
    "compose_phi",
    "compose_psi",
    "eval_f",
    "eval_f_lambda",
    "eval_g",
    "eval_g_lambda",
    "eval_h",
    "eval_h_lambda",
    "eval_q",
    "eval_q_lambda",
    "eval_T",
    "eval_w",
    "evaluate",
    "h_series",
    "iterate_q",
    "iterate_q_lambda",
    "mandelbrot_param",
    "EscapeWitness",
    "FixedPointRecord",
    "JuliaPreimage",
    "PairedOrbits",
    "check_fixed_point_record",
    "eta_sequence",
    "find_escaping_negative",
    "find_julia_preimage",
    "find_low_fixed_points",
    "find_real_fixed_points",
    "multiplier",
    "paired_real_orbits",
]
