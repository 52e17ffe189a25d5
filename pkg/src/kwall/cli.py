"""Command-line front end. Every invocation prints one JSON report (census prints JSONL).

Exit codes: 0 success, 1 mathematical refusal, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import sys
import time
from fractions import Fraction
from pathlib import Path

from .errors import InputError, MathRefusal, ParseError
from .forms import Homogeneous, parse_form, parse_grading, parse_rational
from .report import dumps, jsonable, make_report


class UsageError(InputError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ParseError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8").strip()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from exc


def _form_arg(text: str | None, path: str | None, grading, what: str):
    if (text is None) == (path is None):
        raise UsageError(f"give exactly one of --{what} and --{what}-file")
    return parse_form(text if text is not None else _read(path), grading)


def _frame_arg(text: str | None):
    if text is None:
        return None
    from .census import parse_frames

    frames = parse_frames(text)
    if len(frames) != 1:
        raise UsageError("--frame takes one frame")
    return frames[0][1]


# ---------------------------------------------------------------- subcommands


def cmd_stability(a) -> dict:
    from .hm import instability_measure, torus_semistable, weight_polytope
    from .smoothness import is_smooth_curve
    from .forms import Bidegree

    grading = parse_grading(a.grading)
    f = _form_arg(a.form, a.file, grading, "form")
    frame = _frame_arg(a.frame)
    res = {
        "form": f.serialize(),
        "weight_polytope": weight_polytope(f, None, frame),
        "status": torus_semistable(f, None, frame),
    }
    m = instability_measure(f, None, frame)
    res["instability_measure"] = {"value": m.value, "nearest_point": list(m.point)}
    if isinstance(grading, Bidegree) and grading.a == grading.b and grading.a > 0:
        res["smoothness"] = is_smooth_curve(f)
    return res


def cmd_vgit(a) -> dict:
    from .hm import SL4, OnePS
    from .vgit import (SlopePolarization, ample_range, destabilizing_interval, make_certificate,
                       normal_form_certificate, quadric_rank, restricted_polarization, scan_report)

    q = _form_arg(a.q, a.q_file, Homogeneous(2), "q")
    g = _form_arg(a.g, a.g_file, Homogeneous(a.d), "g")
    if a.sigma:
        try:
            w = tuple(int(x) for x in a.sigma.split(","))
            sigma = OnePS(w, SL4, _frame_arg(a.frame))
        except ValueError as exc:
            raise UsageError(f"bad --sigma: {exc}") from exc
        cert = make_certificate(q, g, sigma, "user")
    else:
        cert = normal_form_certificate(q, g)
    res = {"quadric_rank": quadric_rank(q), "certificate": cert,
           "destabilizing_interval": None if cert is None else destabilizing_interval(cert, a.d)}
    if a.t is not None:
        res["t"] = a.t
        res["ample"] = ample_range(a.d, a.t)
        res["mu_bound"] = None if cert is None else cert.at(a.t)
        if a.delta is not None:
            res["polarization"] = restricted_polarization(SlopePolarization(a.d, a.t, a.delta))
    if a.scan:
        res["scan"] = scan_report([] if cert is None else [cert], a.d)
    return res


def cmd_cm(a) -> dict:
    from .chow import cm_class_p44, cm_class_pe, expected_pe, proportionality_check

    if a.ambient == "pe":
        cls = cm_class_pe(a.d)
        ea, eb = expected_pe(a.d)
        match = cls.coefficient((0, 1, 0)) == ea and cls.coefficient((0, 0, 1)) == eb
    else:
        cls = cm_class_p44(a.d)
        match = None
    res = {"class": cls, "matches_closed_form": match}
    if a.check_proportionality:
        if a.c is None:
            raise UsageError("--check-proportionality needs --c")
        p = proportionality_check(a.d, a.c)
        res["proportionality"] = {"c": a.c, "rho": p.rho, "t": p.t}
    elif a.c is not None:
        res["evaluated"] = cls.evaluate(a.c)
    return res


def cmd_walls(a) -> dict:
    from .walls import catalog_row, chamber_of, wall_table

    res = {"table": wall_table(a.d)}
    if a.c is not None:
        res["chamber"] = chamber_of(a.c, a.d)
    if a.row is not None:
        res["row"] = catalog_row(a.row)
    return res


def cmd_markov(a) -> dict:
    from .localvol import MarkovTriple, markov_classes, markov_enumerate, weighted_projective_from_markov

    if a.bound < 1:
        raise UsageError("--bound must be positive")
    triples = markov_enumerate(a.bound)
    classes = markov_classes(a.bound)
    res = {"bound": a.bound, "count": len(triples),
           "triples": [list(t.as_tuple()) for t in triples],
           "classes": [{"triple": list(t.as_tuple()), "weights": list(weighted_projective_from_markov(t))}
                       for t in classes]}
    if a.check is not None:
        t = MarkovTriple(*a.check)
        res["check"] = {"triple": list(a.check), "is_solution": t.is_solution(),
                        "enumerated": t in set(triples)}
    return res


def cmd_exclude(a) -> dict:
    from .intervals import parse_interval
    from .localvol import QuotientSing, exclude_singularity, is_T_singularity

    sing = QuotientSing(a.e, a.n, a.a)
    iv = parse_interval(a.interval)
    return {"singularity": sing, "outcome": exclude_singularity(sing, a.d, iv),
            "t_singularity": is_T_singularity(sing.order, sing.weight) is not None}


def cmd_lct(a) -> dict:
    from .localvol import lct_catalog

    return lct_catalog(a.entry, strict=a.strict).to_json()


# ---------------------------------------------------------------- wiring


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "table"), default="json")
    common.add_argument("--no-timing", action="store_true", help="emit timing as null")

    p = _Parser(prog="kwall", description=__doc__)
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    s = sub.add_parser("stability", parents=[common], help="torus stability of a form")
    s.add_argument("--grading", required=True, help="'d1,d2' for bidegree, 'd' for P3")
    s.add_argument("--form")
    s.add_argument("--file")
    s.add_argument("--frame", help="16 (or 8 block) rationals")

    s = sub.add_parser("vgit", parents=[common], help="VGIT destabilizing certificates")
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--q")
    s.add_argument("--q-file")
    s.add_argument("--g")
    s.add_argument("--g-file")
    s.add_argument("--sigma", help="four comma-separated integers")
    s.add_argument("--frame")
    s.add_argument("--t", type=_rational)
    s.add_argument("--delta", type=_rational)
    s.add_argument("--scan", action="store_true")

    s = sub.add_parser("cm", parents=[common], help="CM line bundle classes")
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--ambient", choices=("pe", "p44"), default="pe")
    s.add_argument("--c", type=_rational)
    s.add_argument("--check-proportionality", action="store_true")

    s = sub.add_parser("walls", parents=[common], help="wall tables and chambers")
    s.add_argument("--d", type=int, default=4)
    s.add_argument("--c", type=_rational)
    s.add_argument("--row", type=int)

    s = sub.add_parser("markov", parents=[common], help="solutions of a^2+b^2+2c^2=4abc")
    s.add_argument("--bound", type=int, required=True)
    s.add_argument("--check", type=int, nargs=3, metavar=("A", "B", "C"))

    s = sub.add_parser("exclude", parents=[common], help="volume-based singularity exclusion")
    for k in ("e", "n", "a", "d"):
        s.add_argument(f"--{k}", type=int, required=True)
    s.add_argument("--interval", required=True, help="'lo,hi' (open) or with brackets")

    s = sub.add_parser("lct", parents=[common], help="log canonical threshold of a germ")
    s.add_argument("--entry", required=True, help="catalog label or equation in x, y")
    s.add_argument("--strict", action="store_true")

    s = sub.add_parser("census", parents=[common], help="batch run over a directory")
    s.add_argument("--dir", required=True)
    s.add_argument("--grading", required=True)
    s.add_argument("--frames", help="file of frames, one per line")
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--out", help="write JSONL here instead of standard output")
    return p


COMMANDS = {"stability": cmd_stability, "vgit": cmd_vgit, "cm": cmd_cm, "walls": cmd_walls,
            "markov": cmd_markov, "exclude": cmd_exclude, "lct": cmd_lct}


def _table(obj, prefix: str = "") -> list[str]:
    if isinstance(obj, dict):
        out = []
        for k, v in obj.items():
            out += _table(v, f"{prefix}{k}.")
        return out
    if isinstance(obj, list) and any(isinstance(v, (dict, list)) for v in obj):
        out = []
        for i, v in enumerate(obj):
            out += _table(v, f"{prefix}{i}.")
        return out
    return [f"{prefix[:-1]}: {obj}"]


def _inputs(ns: argparse.Namespace) -> dict:
    skip = {"command", "format", "no_timing"}
    return {k: (list(v) if isinstance(v, tuple) else v) for k, v in vars(ns).items()
            if k not in skip and v is not None and v is not False}


def _census(a, out) -> int:
    from .census import parse_frames, render_jsonl, run_census

    grading = parse_grading(a.grading)
    frames = parse_frames(_read(a.frames)) if a.frames else []
    if not Path(a.dir).is_dir():
        raise InputError(f"not a directory: {a.dir}")
    records, summary = run_census(a.dir, grading, frames, a.workers)
    text = render_jsonl(records, summary)
    if a.out:
        Path(a.out).write_text(text, encoding="utf-8")
        out.write(dumps(make_report("census", _inputs(a), summary)) + "\n")
    else:
        out.write(text)
    return 0


def run(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    command = None
    ns = None
    t0 = time.perf_counter()
    try:
        ns = parser.parse_args(argv)
        command = ns.command
        if command is None:
            raise UsageError("missing subcommand")
        if command == "census":
            return _census(ns, out)
        result = COMMANDS[command](ns)
        code, err = 0, None
    except MathRefusal as exc:
        result, code, err = None, 1, exc
    except (InputError, OSError) as exc:
        result, code, err = None, 2, exc
    if ns is None or command is None:
        # argument parsing failed: report against the named subcommand when there is one
        raw = list(sys.argv[1:] if argv is None else argv)
        named = raw[0] if raw and raw[0] in (*COMMANDS, "census") else None
        if named is None:
            out.write(dumps({"error": {"type": type(err).__name__, "message": str(err)}}) + "\n")
            return code
        out.write(dumps(make_report(named, {"argv": raw}, None, err, None)) + "\n")
        return code
    ms = None if ns.no_timing else int((time.perf_counter() - t0) * 1000)
    rep = make_report(command, _inputs(ns), result, err, ms)
    if ns.format == "table":
        out.write("\n".join(_table(jsonable(rep))) + "\n")
    else:
        out.write(dumps(rep) + "\n")
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
