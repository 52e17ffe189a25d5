"""JSON reports: exact rationals as "p/q" strings, stable field order, schema validation."""
from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache
from importlib import resources

from . import __version__


def jsonable(x):
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if isinstance(x, Fraction):
        return str(x)
    if hasattr(x, "to_json"):
        return jsonable(x.to_json())
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    raise TypeError(f"cannot serialise {type(x).__name__}")


def make_report(command: str, inputs: dict, result=None, error: Exception | None = None,
                timing_ms: int | None = None) -> dict:
    rep = {"tool_version": __version__, "command": command, "inputs": jsonable(inputs)}
    if error is None:
        rep["result"] = jsonable(result)
    else:
        rep["error"] = {"type": type(error).__name__, "message": str(error)}
    rep["timing"] = None if timing_ms is None else {"ms": int(timing_ms)}
    return rep


def dumps(obj) -> str:
    return json.dumps(obj, ensure_ascii=False, separators=(",", ":"))


@lru_cache(maxsize=None)
def schema(name: str = "report") -> dict:
    text = resources.files("kwall").joinpath(f"{name}.schema.json").read_text(encoding="utf-8")
    return json.loads(text)


def validate(obj: dict, name: str = "report") -> None:
    import jsonschema

    jsonschema.validate(obj, schema(name))
