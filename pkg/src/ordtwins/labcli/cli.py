"""Command-line entry point.

Subcommands: gen, solve, scan, construct, bounds, experiment scaling.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction
from pathlib import Path

from ..builder import block_twin_finder, bound_calculator, find_twins_recursive
from ..genspace import SeededSource, random_matching
from ..matchcore import MatchingError, OrderedMatching, Permutation, parse_word, to_word
from ..oracle import (
    extremal_scan,
    max_clique_exact,
    max_tuplets_exact,
    max_twins_exact,
    tau_twins_exact,
)
from .experiment import ExperimentPlan, fit_exponent, run_experiment, summarize
from .report import emit_report, render


def read_matching(text: str) -> OrderedMatching:
    text = text.strip()
    if text.startswith("{"):
        return OrderedMatching.from_json(text)
    return parse_word(text)


def read_permutation(text: str) -> Permutation:
    text = text.strip()
    values = json.loads(text) if text.startswith("[") else text.replace(",", " ").split()
    return Permutation(tuple(int(v) for v in values))


def parse_grid(text: str) -> tuple[int, ...]:
    """``A:B:geometric`` doubles from A up to B, ``A:B[:S]`` steps linearly,
    ``a,b,c`` lists values."""
    if "," in text or ":" not in text:
        return tuple(int(v) for v in text.split(","))
    parts = text.split(":")
    lo, hi = int(parts[0]), int(parts[1])
    mode = parts[2] if len(parts) > 2 else "1"
    if mode == "geometric":
        out = []
        n = lo
        while n <= hi:
            out.append(n)
            n *= 2
        return tuple(out)
    return tuple(range(lo, hi + 1, int(mode)))


def read_config(path: str) -> dict[str, str]:
    conf = {}
    for lineno, line in enumerate(Path(path).read_text().splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"{path}:{lineno}: expected key=value")
        key, value = line.split("=", 1)
        conf[key.strip().replace("-", "_")] = value.strip()
    return conf


def _emit(obj) -> None:
    print(json.dumps(obj, indent=1))


def cmd_gen(args) -> None:
    for i in range(args.count):
        m = random_matching(args.n, args.r, SeededSource(args.seed, i))
        print(m.to_json() if args.format == "json" else to_word(m))


def cmd_solve(args) -> None:
    text = Path(args.input).read_text()
    if args.problem == "tau":
        pi = read_permutation(text)
        size, left, right = tau_twins_exact(pi)
        _emit({"problem": "tau", "size": size, "left": list(left), "right": list(right)})
        return
    m = read_matching(text)
    if args.problem == "twins":
        size, cert = max_twins_exact(m)
        _emit({"problem": "twins", **cert.as_dict()})
    elif args.problem == "tuplets":
        _emit({"problem": "tuplets", "t": args.t, "size": max_tuplets_exact(m, args.t)})
    else:
        size, cert = max_clique_exact(m, args.pattern)
        _emit({"problem": "clique", "size": size, "pattern": str(cert.pattern), "members": list(cert.members)})


def cmd_scan(args) -> None:
    out = open(args.out, "w", newline="") if args.out else sys.stdout
    try:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["quantity", "r", "n", "value", "witness_word"])
        for n in range(args.min_n, args.max_n + 1):
            rec = extremal_scan(args.quantity, args.r, n)
            writer.writerow([rec.quantity, "" if rec.rank is None else rec.rank, n, rec.value, rec.witness_word()])
            out.flush()
    finally:
        if out is not sys.stdout:
            out.close()


def cmd_construct(args) -> None:
    m = read_matching(Path(args.input).read_text())
    if args.method == "recursive":
        cert = find_twins_recursive(m)
    else:
        a = args.block_size if args.block_size == "auto" else int(args.block_size)
        cert = block_twin_finder(m, a)
    _emit({"method": args.method, **cert.as_dict()})


def cmd_bounds(args) -> None:
    report = bound_calculator(args.n, args.r, Fraction(args.alpha), Fraction(args.beta))
    _emit(report.as_dict())


EXPERIMENT_DEFAULTS = {
    "method": "block",
    "r": "2",
    "grid": "256:4096:geometric",
    "trials": "10",
    "seed": "0",
    "stat": "median",
    "format": "csv",
    "block_size": "auto",
    "workers": "1",
    "timing": "false",
}


def cmd_experiment(args) -> None:
    conf = dict(EXPERIMENT_DEFAULTS)
    if args.config:
        conf.update(read_config(args.config))
    for key in list(EXPERIMENT_DEFAULTS) + ["out"]:
        value = getattr(args, key, None)
        if value is not None:
            conf[key] = str(value)
    if not conf.get("out"):
        raise ValueError("an output path is required (--out or out= in the config)")
    timing = conf["timing"].lower() in ("1", "true", "yes", "on")
    block_size = conf["block_size"] if conf["block_size"] == "auto" else int(conf["block_size"])
    plan = ExperimentPlan(
        method=conf["method"],
        r=int(conf["r"]),
        grid=parse_grid(conf["grid"]),
        trials=int(conf["trials"]),
        seed=int(conf["seed"]),
        block_size=block_size,
        timing=timing,
        workers=int(conf["workers"]),
    )
    rows = run_experiment(plan)
    emit_report(rows, conf["out"], conf["format"])
    points = summarize(rows, conf["stat"])
    summary = {"out": conf["out"], "rows": len(rows), "stat": conf["stat"], "points": points}
    try:
        summary["fit"] = fit_exponent(points).as_dict()
    except ValueError as exc:
        summary["fit"] = None
        summary["fit_error"] = str(exc)
    _emit(summary)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ordtwins", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="uniform random matchings, one per line")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--format", choices=("words", "json"), default="words")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("solve", help="exact oracles")
    p.add_argument("problem", choices=("twins", "tuplets", "clique", "tau"))
    p.add_argument("--input", required=True)
    p.add_argument("--t", type=int, default=2)
    p.add_argument("--pattern", default="ALL")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("scan", help="exact extremal minima for n = 1..max-n")
    p.add_argument("quantity", choices=("t", "L", "tau"))
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--min-n", type=int, default=1)
    p.add_argument("--out", help="CSV path (stdout when omitted)")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("construct", help="constructive twin finders")
    p.add_argument("method", choices=("recursive", "block"))
    p.add_argument("--input", required=True)
    p.add_argument("--block-size", default="auto")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("bounds", help="deterministic lower-bound calculator")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", default="3/5")
    p.add_argument("--beta", default="1/8")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("experiment", help="Monte Carlo sweeps")
    esub = p.add_subparsers(dest="experiment", required=True)
    e = esub.add_parser("scaling", help="sizes over a grid of n with a log-log fit")
    e.add_argument("--config")
    e.add_argument("--method", choices=("block", "recursive", "clique", "oracle"))
    e.add_argument("--r", type=int)
    e.add_argument("--grid")
    e.add_argument("--trials", type=int)
    e.add_argument("--seed", type=int)
    e.add_argument("--stat", choices=("median", "mean"))
    e.add_argument("--out")
    e.add_argument("--format", choices=("csv", "json"))
    e.add_argument("--block-size", dest="block_size")
    e.add_argument("--workers", type=int)
    e.add_argument("--timing", action="store_const", const="true")
    e.set_defaults(func=cmd_experiment)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except (MatchingError, ValueError, RuntimeError, OSError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
