"""Command-line entry point: bch-verify {code, mindist, table, grid}."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time

from . import __version__
from .codes import (COUNT_CAP, POLY_CAP, bch_code, dim_via_counting, dim_via_generator,
                    griesmer_check)
from .distance import DEFAULT_BUDGET, STRATEGIES, min_distance
from .params import BchParams, ParamError
from .tables import TABLES
from .verify import (RENDERERS, Report, _cell, grid_params, grid_point, verify_row)

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3
DEFAULT_Q_SET = (2, 3, 4, 5, 7, 8, 9)
GRID_CAP = 10 ** 6


def _int_list(text):
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _int_range(text):
    try:
        lo, _, hi = text.partition("-")
        lo, hi = int(lo), int(hi or lo)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO-HI, got {text!r}")
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return range(lo, hi + 1)


def _num(text):
    # accepts 1e6 style as well as plain integers
    try:
        v = float(text) if any(c in text for c in "eE.") else int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if v != int(v) or v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return int(v)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="bch-verify", description=__doc__)
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    def output_flags(p, default_format="text"):
        p.add_argument("--format", choices=sorted(RENDERERS), default=default_format)
        p.add_argument("--out", help="write the report here instead of stdout")

    def distance_flags(p):
        p.add_argument("--strategy", choices=STRATEGIES, default="auto")
        p.add_argument("--budget", type=_num, default=DEFAULT_BUDGET,
                       help="max words examined by a distance search")

    for name in ("code", "mindist"):
        p = sub.add_parser(name, help="one code" if name == "code" else "minimum distance only")
        p.add_argument("-q", type=int, required=True)
        p.add_argument("-m", type=int, required=True)
        p.add_argument("--lambda", dest="lam", type=int, default=1)
        p.add_argument("--l0", type=int, required=True)
        p.add_argument("--l1", type=int, required=True)
        p.add_argument("--cap", type=_num, default=COUNT_CAP,
                       help="largest N for the counting dimension route")
        distance_flags(p)
        output_flags(p)

    p = sub.add_parser("table", help="reproduce a reference table")
    p.add_argument("which", type=int, choices=sorted(TABLES))
    distance_flags(p)
    output_flags(p)

    p = sub.add_parser("grid", help="formula vs direct computation over a parameter grid")
    p.add_argument("--q-set", type=_int_list, default=DEFAULT_Q_SET)
    p.add_argument("--m-range", type=_int_range, default=range(2, 7))
    p.add_argument("--cap", type=_num, default=GRID_CAP, help="skip towers with q^m - 1 above this")
    p.add_argument("--poly-cap", type=_num, default=POLY_CAP,
                   help="largest n for which inclusion is tested by polynomial division")
    p.add_argument("--budget", type=_num, default=DEFAULT_BUDGET, help="accepted for symmetry; unused")
    output_flags(p)
    return ap


# --- commands ---------------------------------------------------------------

def _params(args) -> BchParams:
    return BchParams(args.q, args.m, args.lam, args.l0, args.l1)


def cmd_code(args) -> tuple[dict, bool]:
    p = _params(args)
    code = bch_code(p)
    k = dim_via_generator(code)
    k_cnt = dim_via_counting(p, args.cap) if p.N <= args.cap else None
    res = min_distance(code, args.strategy, args.budget)
    g = griesmer_check(code.n, k, res.lower, p.q) if res.exact and k >= 1 else None
    out = {
        "params": p.as_dict(),
        "n": code.n,
        "k_generator": k,
        "k_counting": k_cnt,
        "delta": p.delta,
        "generator": str(code.generator),
        "d_lower": res.lower,
        "d_upper": res.upper,
        "d_method": res.method,
        "d_exact": res.exact,
        "d_work": res.work,
        "griesmer_sum": g.sum if g else None,
        "griesmer_meets": g.meets if g else None,
    }
    ok = k_cnt is None or k_cnt == k
    return out, ok


def cmd_mindist(args) -> tuple[dict, bool]:
    p = _params(args)
    res = min_distance(bch_code(p), args.strategy, args.budget)
    out = {"params": p.as_dict(), "n": p.n, "delta": p.delta, **{
        f"d_{k}": v for k, v in res.as_dict().items()}}
    return out, res.upper is None or res.upper >= res.lower


def cmd_table(args) -> Report:
    rep = Report(config={"command": "table", "table": args.which, "strategy": args.strategy,
                         "budget": args.budget})
    for i, row in enumerate(TABLES[args.which], 1):
        rep.rows.append(verify_row(row, args.which, i, args.strategy, args.budget))
    return rep


def cmd_grid(args) -> Report:
    rep = Report(config={"command": "grid", "q_set": list(args.q_set),
                         "m_range": [args.m_range.start, args.m_range.stop - 1],
                         "cap": args.cap, "poly_cap": args.poly_cap})
    for p in grid_params(args.q_set, args.m_range, args.cap):
        rep.grid.append(grid_point(p, args.poly_cap, max(args.cap, COUNT_CAP)))
    return rep


def _render_single(out: dict, fmt: str, elapsed_ms: int) -> str:
    if fmt == "json":
        return json.dumps({"version": __version__, **out, "elapsed_ms": elapsed_ms}, indent=2) + "\n"
    flat = {**out.pop("params"), **out}
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(list(flat))
        w.writerow([_cell(v) for v in flat.values()])
        return buf.getvalue()
    width = max(len(k) for k in flat)
    return "".join(f"{k:<{width}}  {_cell(v) if v is not None else '-'}\n" for k, v in flat.items())


def _emit(text: str, path: str | None) -> int:
    if path is None:
        sys.stdout.write(text)
        return EXIT_OK
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"bch-verify: cannot write {path}: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    t0 = time.perf_counter()
    try:
        if args.command in ("code", "mindist"):
            out, ok = (cmd_code if args.command == "code" else cmd_mindist)(args)
            text = _render_single(out, args.format, int((time.perf_counter() - t0) * 1000))
        else:
            rep = (cmd_table if args.command == "table" else cmd_grid)(args)
            rep.elapsed_ms = int((time.perf_counter() - t0) * 1000)
            ok = rep.ok
            text = RENDERERS[args.format](rep)
    except ParamError as exc:
        print(f"bch-verify: invalid parameters: {exc}", file=sys.stderr)
        return EXIT_USAGE
    rc = _emit(text, args.out)
    if rc:
        return rc
    return EXIT_OK if ok else EXIT_MISMATCH


if __name__ == "__main__":
    sys.exit(main())
