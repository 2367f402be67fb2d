"""
Hausdorff Metric - Exact Hausdorff distance between finite planar point sets.

Two kernels share one distance formula (|a − b| on complex differences), so
they return bit-identical results:
  brute     all pairs, chunked over the outer set
  bucketed  k-d tree candidates, re-measured with the same formula
"""

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy.spatial import cKDTree

from basin.grid import PointSet
from errors import EmptySetError, PreconditionViolatedError
from workers import map_chunks

logger = logging.getLogger(__name__)

# Pair budget per brute-force chunk
BRUTE_CHUNK_PAIRS = 4_000_000

# Relative widening of the tree's nearest distance when collecting candidates
CANDIDATE_SLACK = 1e-9

METHODS = ("brute", "bucketed")


@dataclass(frozen=True)
class DirectedWitness:
    """The point of one set farthest from the other set, and that distance."""

    point: complex
    distance: float


@dataclass(frozen=True)
class HausdorffResult:
    """d_H(A, B) with the witnesses of both directed suprema."""

    distance: float
    witness_a_to_b: DirectedWitness
    witness_b_to_a: DirectedWitness


def _xy(points: np.ndarray) -> np.ndarray:
    return np.column_stack([points.real, points.imag])


def _nearest_brute(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    chunk = max(1, BRUTE_CHUNK_PAIRS // len(b))
    out = np.empty(len(a))
    for start in range(0, len(a), chunk):
        block = a[start : start + chunk]
        out[start : start + len(block)] = np.abs(block[:, None] - b[None, :]).min(axis=1)
    return out


def _nearest_bucketed(a: np.ndarray, b: np.ndarray, tree: cKDTree) -> np.ndarray:
    nearest, _ = tree.query(_xy(a), k=1)
    radii = nearest * (1.0 + CANDIDATE_SLACK) + np.finfo(float).tiny
    neighbourhoods = tree.query_ball_point(_xy(a), radii)
    out = np.empty(len(a))
    for i, candidates in enumerate(neighbourhoods):
        pool = b[candidates] if candidates else b
        out[i] = np.abs(a[i] - pool).min()
    return out


def nearest_distances(
    a: np.ndarray,
    b: np.ndarray,
    method: str = "bucketed",
    workers: Optional[int] = None,
) -> np.ndarray:
    """For every point of a, the distance to the nearest point of b."""
    if method not in METHODS:
        raise PreconditionViolatedError(f"unknown Hausdorff method '{method}', use one of {METHODS}")
    if method == "brute":
        return map_chunks(lambda chunk: _nearest_brute(chunk, b), a, workers)
    tree = cKDTree(_xy(b))
    return map_chunks(lambda chunk: _nearest_bucketed(chunk, b, tree), a, workers)


def directed_hausdorff(a: np.ndarray, b: np.ndarray, method: str = "bucketed", workers: Optional[int] = None) -> DirectedWitness:
    """sup over a of the distance to b, with the first point attaining it."""
    distances = nearest_distances(a, b, method, workers)
    k = int(np.argmax(distances))
    return DirectedWitness(point=complex(a[k]), distance=float(distances[k]))


def hausdorff_distance(
    a: PointSet,
    b: PointSet,
    method: str = "bucketed",
    workers: Optional[int] = None,
) -> HausdorffResult:
    """
    Hausdorff distance between two finite point sets.

    Args:
        a: First set
        b: Second set
        method: "brute" or "bucketed"
        workers: Thread cap

    Returns:
        HausdorffResult; swapping a and b swaps the witnesses and keeps the distance

    Raises:
        EmptySetError: If either set is empty
    """
    if a.is_empty or b.is_empty:
        raise EmptySetError("Hausdorff distance needs two non-empty point sets")

    forward = directed_hausdorff(a.points, b.points, method, workers)
    backward = directed_hausdorff(b.points, a.points, method, workers)
    result = HausdorffResult(
        distance=max(forward.distance, backward.distance),
        witness_a_to_b=forward,
        witness_b_to_a=backward,
    )
    logger.debug(f"d_H over {len(a)} x {len(b)} points ({method}): {result.distance:.6e}")
    return result
