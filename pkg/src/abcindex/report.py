"""JSON report envelope (schema version 1)."""

from __future__ import annotations

import json
import math
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Iterable

from . import __version__

SCHEMA_VERSION = 1


def _plain(obj: Any) -> Any:
    if hasattr(obj, "to_dict"):
        return obj.to_dict()
    if hasattr(obj, "__dataclass_fields__"):
        return {k: getattr(obj, k) for k in obj.__dataclass_fields__}
    return obj


def _finite(x: Any) -> Any:
    # JSON has no inf/nan
    if isinstance(x, float) and not math.isfinite(x):
        return None
    if isinstance(x, dict):
        return {k: _finite(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_finite(v) for v in x]
    return x


def envelope(command: str, inputs: dict[str, Any], results: Iterable[Any]) -> dict[str, Any]:
    results = [_plain(r) for r in results]
    types = {type(r).__name__ if not isinstance(r, dict) else r.get("type", "row") for r in results}
    if len(types) > 1:
        raise ValueError(f"report results must be homogeneous, got {sorted(types)}")
    return _finite({
        "schema": SCHEMA_VERSION,
        "command": command,
        "inputs": inputs,
        "timestamp": datetime.now(timezone.utc).isoformat(timespec="seconds"),
        "tool_version": __version__,
        "results": results,
    })


def write_json(path: str | Path, env: dict[str, Any]) -> None:
    Path(path).write_text(json.dumps(env, indent=2) + "\n", encoding="utf-8")
