"""Row and grid verification, and the report writers used by the CLI."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

from . import __version__
from .codes import (COUNT_CAP, POLY_CAP, bch_code, dim_via_counting, dim_via_generator,
                    griesmer_check, inclusion_check)
from .distance import DEFAULT_BUDGET, DistanceResult, min_distance
from .formulas import closed_form_dims
from .params import BchParams, divisors, valid_params
from .tables import TableRow

EXACT, LOWER_ONLY, MISMATCH = "exact_match", "lower_bound_only", "mismatch"

ROW_COLUMNS = ["table", "index", "q", "m", "lambda", "l0", "l1", "n", "k_expected",
               "k_computed", "delta", "d_expected", "d_lower", "d_upper", "d_method",
               "d_status", "griesmer_meets", "optimality_note"]
GRID_COLUMNS = ["q", "m", "lambda", "l0", "l1", "n", "k_generator", "k_counting",
                "closed_forms", "inclusion", "ok"]


def d_status(res: DistanceResult, expected: int) -> str:
    if res.lower > expected or (res.upper is not None and res.upper < expected):
        return MISMATCH
    if res.exact:
        return EXACT if res.lower == expected else MISMATCH
    return LOWER_ONLY


def _griesmer(n, k, res: DistanceResult, q):
    if not res.exact or k < 1:
        return None
    return griesmer_check(n, k, res.lower, q).meets


def verify_row(row: TableRow, table: int | None = None, index: int | None = None,
               strategy: str = "auto", budget: int = DEFAULT_BUDGET) -> dict:
    p = row.params
    code = bch_code(p)
    k = dim_via_generator(code)
    res = min_distance(code, strategy, budget)
    status = d_status(res, row.d)
    return {
        "table": table,
        "index": index,
        "params": p.as_dict(),
        "n": code.n,
        "k_expected": row.k,
        "k_computed": k,
        "k_match": k == row.k and code.n == row.n,
        "delta": p.delta,
        "d_expected": row.d,
        "d_lower": res.lower,
        "d_upper": res.upper,
        "d_method": res.method,
        "d_exact": res.exact,
        "d_work": res.work,
        "d_status": status,
        "griesmer_meets": _griesmer(code.n, k, res, p.q),
        "optimality_note": row.note,
    }


def row_ok(r: dict) -> bool:
    return r["k_match"] and r["d_status"] != MISMATCH


def grid_point(p: BchParams, poly_cap: int = POLY_CAP, count_cap: int = COUNT_CAP) -> dict:
    """Every dimension route and the inclusion test at one parameter point."""
    k_gen = dim_via_generator(bch_code(p))
    k_cnt = dim_via_counting(p, count_cap)
    forms = closed_form_dims(p)
    incl = inclusion_check(p, poly_cap)
    violations = []
    if k_cnt != k_gen:
        violations.append(f"counting {k_cnt} != generator {k_gen}")
    for name, v in forms.items():
        if v != k_gen:
            violations.append(f"{name} {v} != generator {k_gen}")
    if not incl:
        violations.append("not contained")
    return {
        "params": p.as_dict(),
        "n": p.n,
        "k_generator": k_gen,
        "k_counting": k_cnt,
        "closed_forms": forms,
        "inclusion": incl,
        "violations": violations,
    }


def grid_params(q_set, m_range, cap: int):
    """Valid parameters with N <= cap, sorted by (q, m, lambda, l0, l1)."""
    out = []
    for q in sorted(q_set):
        for m in m_range:
            if q ** m - 1 > cap:
                continue
            for lam in divisors(q - 1):
                out.extend(valid_params(q, m, lam))
    return out


# --- reports ----------------------------------------------------------------

@dataclass
class Report:
    config: dict
    rows: list = field(default_factory=list)
    grid: list = field(default_factory=list)
    elapsed_ms: int = 0

    @property
    def ok(self) -> bool:
        return all(row_ok(r) for r in self.rows) and not any(g["violations"] for g in self.grid)

    def as_dict(self):
        return {"version": __version__, "config": self.config, "rows": self.rows,
                "grid": self.grid, "elapsed_ms": self.elapsed_ms}


def _flat_row(r):
    out = {c: r.get(c) for c in ROW_COLUMNS}
    out.update({"q": r["params"]["q"], "m": r["params"]["m"], "lambda": r["params"]["lambda"],
                "l0": r["params"]["l0"], "l1": r["params"]["l1"]})
    return out


def _flat_grid(g):
    out = {c: g.get(c) for c in GRID_COLUMNS}
    out.update(g["params"])
    out["closed_forms"] = ";".join(f"{k}={v}" for k, v in g["closed_forms"].items())
    out["ok"] = not g["violations"]
    return out


def _cell(v):
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def render_json(report: Report) -> str:
    return json.dumps(report.as_dict(), indent=2) + "\n"


def render_csv(report: Report) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if report.rows or not report.grid:
        w.writerow(ROW_COLUMNS)
        for r in report.rows:
            f = _flat_row(r)
            w.writerow([_cell(f[c]) for c in ROW_COLUMNS])
    if report.grid:
        if report.rows:
            w.writerow([])
        w.writerow(GRID_COLUMNS)
        for g in report.grid:
            f = _flat_grid(g)
            w.writerow([_cell(f[c]) for c in GRID_COLUMNS])
    return buf.getvalue()


def _aligned(header, lines):
    widths = [max(len(h), *(len(x[i]) for x in lines)) if lines else len(h)
              for i, h in enumerate(header)]
    fmt = "  ".join("{:<%d}" % w for w in widths)
    return "\n".join(fmt.format(*x).rstrip() for x in [header] + lines)


def render_text(report: Report) -> str:
    parts = []
    if report.rows:
        header = ["#", "(q,m,lam,l0,l1)", "[n,k,d]", "k", "d", "method", "status",
                  "griesmer", "note"]
        lines = []
        for r in report.rows:
            p = r["params"]
            d = str(r["d_lower"]) if r["d_exact"] else f"{r['d_lower']}..{_cell(r['d_upper']) or '?'}"
            lines.append([
                f"{r['table']}.{r['index']}",
                f"({p['q']},{p['m']},{p['lambda']},{p['l0']},{p['l1']})",
                f"[{r['n']},{r['k_expected']},{r['d_expected']}]",
                str(r["k_computed"]) + ("" if r["k_match"] else " !"),
                d, r["d_method"], r["d_status"], _cell(r["griesmer_meets"]) or "-",
                r["optimality_note"]])
        parts.append(_aligned(header, lines))
    if report.grid:
        bad = [g for g in report.grid if g["violations"]]
        parts.append(f"grid: {len(report.grid)} points, {len(bad)} with violations")
        for g in bad:
            p = g["params"]
            parts.append(f"  ({p['q']},{p['m']},{p['lambda']},{p['l0']},{p['l1']}): "
                         + "; ".join(g["violations"]))
    status = "all checks pass" if report.ok else "MISMATCH"
    parts.append(f"{status} ({report.elapsed_ms} ms)")
    return "\n".join(parts) + "\n"


RENDERERS = {"json": render_json, "csv": render_csv, "text": render_text}
