"""
CLI Output - Atomic text writes for images, tables and metadata sidecars.
"""

import json
import logging
import os
import tempfile
from pathlib import Path
from typing import Any, Dict, Union

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


def write_text_atomic(path: PathLike, text: str) -> Path:
    """
    Write text through a temp file in the target directory, then rename over the target.

    Readers see either the previous file or the complete new one.
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(prefix=f".{path.name}.", suffix=".tmp", dir=path.parent)
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        Path(tmp).unlink(missing_ok=True)
        raise
    logger.info(f"Wrote {path} ({len(text)} bytes)")
    return path


def write_json_atomic(path: PathLike, payload: Dict[str, Any]) -> Path:
    return write_text_atomic(path, json.dumps(payload, indent=2, sort_keys=True) + "\n")


def sidecar_path(path: PathLike) -> Path:
    """<output>.meta.json next to the output."""
    path = Path(path)
    return path.with_name(path.name + ".meta.json")


def write_sidecar(path: PathLike, metadata: Dict[str, Any]) -> Path:
    return write_json_atomic(sidecar_path(path), metadata)
