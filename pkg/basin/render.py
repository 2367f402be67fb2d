"""
Grid Render - Plain PPM (P3) images and run-length text dumps of verdict matrices.
"""

from typing import Dict, List, Tuple

import numpy as np

from errors import PreconditionViolatedError

from .grid import ClassifiedGrid, Verdict

# Column separator used when images are placed side by side
SEPARATOR = 3

PALETTE: Dict[int, Tuple[int, int, int]] = {
    int(Verdict.INSIDE): (255, 220, 0),
    int(Verdict.OUTSIDE): (20, 20, 40),
    int(Verdict.UNDECIDED): (128, 128, 128),
    SEPARATOR: (255, 255, 255),
}

RUN_LETTERS = {int(Verdict.INSIDE): "I", int(Verdict.OUTSIDE): "O", int(Verdict.UNDECIDED): "U"}


def side_by_side(*verdicts: np.ndarray, gap: int = 4) -> np.ndarray:
    """Place verdict matrices left to right, bottom-padded, separated by gap columns."""
    if not verdicts:
        raise PreconditionViolatedError("nothing to place side by side")
    height = max(v.shape[0] for v in verdicts)
    columns: List[np.ndarray] = []
    for i, v in enumerate(verdicts):
        if i:
            columns.append(np.full((height, gap), SEPARATOR, dtype=np.int8))
        padded = np.full((height, v.shape[1]), SEPARATOR, dtype=np.int8)
        padded[: v.shape[0], :] = v
        columns.append(padded)
    return np.hstack(columns)


def encode_ppm(verdicts: np.ndarray) -> str:
    """Encode a verdict matrix as plain PPM, one pixel per line, top row first."""
    lut = np.zeros((max(PALETTE) + 1, 3), dtype=np.int64)
    for code, rgb in PALETTE.items():
        lut[code] = rgb
    rgb = lut[np.asarray(verdicts, dtype=np.int64)].reshape(-1, 3)
    height, width = verdicts.shape
    body = "\n".join(f"{r} {g} {b}" for r, g, b in rgb.tolist())
    return f"P3\n{width} {height}\n255\n{body}\n"


def grid_to_ppm(grid: ClassifiedGrid) -> str:
    return encode_ppm(grid.verdicts)


def encode_run_length(verdicts: np.ndarray) -> str:
    """One line per row: runs like `I12 O3 U1`."""
    lines = []
    for row in np.asarray(verdicts):
        runs = []
        start = 0
        for k in range(1, len(row) + 1):
            if k == len(row) or row[k] != row[start]:
                runs.append(f"{RUN_LETTERS[int(row[start])]}{k - start}")
                start = k
        lines.append(" ".join(runs))
    return "\n".join(lines) + "\n"


def decode_run_length(text: str) -> np.ndarray:
    """Inverse of encode_run_length."""
    codes = {letter: code for code, letter in RUN_LETTERS.items()}
    rows = []
    for line in text.strip().splitlines():
        row: List[int] = []
        for token in line.split():
            row.extend([codes[token[0]]] * int(token[1:]))
        rows.append(row)
    return np.array(rows, dtype=np.int8)
