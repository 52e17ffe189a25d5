"""Batch census over a directory of form files.

Records are computed by a bounded process pool and emitted sorted by file
name, so output bytes do not depend on the worker count. Per-file failures
become error records; they never stop the batch.
"""
from __future__ import annotations

import re
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Sequence

from .errors import KwallError, ParseError
from .forms import Bidegree, Grading, parse_form, parse_rational
from .hm import instability_measure, torus_semistable
from .linalg import as_matrix
from .report import dumps, jsonable
from .smoothness import is_smooth_curve

Frame = tuple[str, object]


def parse_frames(text: str) -> list[Frame]:
    """One frame per line: optional 'name:' then 16 rationals (4x4, row-major) or 8 (two 2x2 blocks)."""
    out: list[Frame] = []
    for k, raw in enumerate(text.splitlines()):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        name = f"frame{len(out) + 1}"
        if ":" in line:
            name, line = (s.strip() for s in line.split(":", 1))
        vals = [parse_rational(v) for v in re.split(r"[,\s]+", line) if v]
        if len(vals) == 16:
            m = as_matrix([vals[4 * i:4 * i + 4] for i in range(4)])
        elif len(vals) == 8:
            m = ([vals[0:2], vals[2:4]], [vals[4:6], vals[6:8]])
        else:
            raise ParseError(f"frame line {k + 1}: expected 16 or 8 entries, got {len(vals)}")
        out.append((name, m))
    return out


def census_record(path: str, grading: Grading, frames: Sequence[Frame]) -> dict:
    name = Path(path).name
    try:
        f = parse_form(Path(path).read_text(encoding="utf-8").strip(), grading)
        if isinstance(grading, Bidegree) and grading.a == grading.b:
            smooth = is_smooth_curve(f).to_json()
        else:
            smooth = {"status": "NotApplicable"}
        statuses = []
        for fname, fr in [("standard", None), *frames]:
            statuses.append({"frame": fname, **torus_semistable(f, None, fr).to_json()})
        measure = instability_measure(f).value
        return {"file": name, "grading": str(grading), "smoothness": smooth,
                "torus_status": jsonable(statuses), "instability_measure": str(measure)}
    except (KwallError, OSError, UnicodeDecodeError) as exc:
        return {"file": name, "error": {"type": type(exc).__name__, "message": str(exc)}}


def _job(args):
    return census_record(*args)


def list_inputs(directory: str) -> list[str]:
    d = Path(directory)
    if not d.is_dir():
        raise FileNotFoundError(f"not a directory: {directory}")
    return sorted(str(p) for p in d.iterdir() if p.is_file() and not p.name.startswith("."))


def run_census(directory: str, grading: Grading, frames: Sequence[Frame] = (), workers: int = 1
               ) -> tuple[list[dict], dict]:
    files = list_inputs(directory)
    jobs = [(p, grading, list(frames)) for p in files]
    if workers <= 1 or len(jobs) <= 1:
        records = [_job(j) for j in jobs]
    else:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            records = list(ex.map(_job, jobs, chunksize=max(1, len(jobs) // (4 * workers))))
    records.sort(key=lambda r: r["file"])
    return records, summarize(records)


def summarize(records: Sequence[dict]) -> dict:
    ok = [r for r in records if "error" not in r]
    smooth = sum(1 for r in ok if r["smoothness"]["status"] == "Smooth")
    semi = sum(1 for r in ok if r["torus_status"][0]["status"] == "Semistable")
    return {"files": len(records), "errors": len(records) - len(ok), "smooth": smooth,
            "singular": sum(1 for r in ok if r["smoothness"]["status"] == "Singular"),
            "semistable_standard_frame": semi, "unstable_standard_frame": len(ok) - semi}


def render_jsonl(records: Sequence[dict], summary: dict) -> str:
    lines = [dumps(r) for r in records]
    lines.append(dumps({"summary": summary}))
    return "\n".join(lines) + "\n"
