"""Command-line front end: tables, scans and graph exports.

Exit status is 0 on success, 1 when a scan that should come back empty
reports violations, and 2 for usage, domain, capacity or I/O errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Sequence

from qudit_goldbach import __version__
from qudit_goldbach.errors import CapacityError, DomainError
from qudit_goldbach.goldbach import (
    atg_table,
    cumulative,
    gd_champions,
    goldbach_defect,
    goldbach_profile,
    maximal_g_set,
    verify_sandwich,
)
from qudit_goldbach.graph import Graph, edge_list_text
from qudit_goldbach.graphanalysis import (
    SearchTimeout,
    automorphism_order,
    classify_spectrum,
    connected_components,
    exact_integer_spectrum,
    graph_record,
    recognize_named_graph,
)
from qudit_goldbach.hardylittlewood import (
    conjecture1_scan,
    epsilon,
    log_x_table,
    primorial_records,
    proposition2_scan,
    theorem1_scan,
    x_champions,
)
from qudit_goldbach.numtheory import default_table, primorial_scientific
from qudit_goldbach.pauligraph import (
    DEFAULT_CAPACITY,
    build_dual_graph,
    decomposition,
    projective_component,
)

EXIT_OK = 0
EXIT_VIOLATIONS = 1
EXIT_ERROR = 2

DEFAULT_DIGITS = 4
TABLE4_R = (2, 10, 100, 1000, 10_000, 100_000)
SCAN_LIMITS = {
    "theorem1": 10**6,
    "conjecture1": 10**5,
    "prop2": 10**6,
    "gd-champions": 9240,
    "x-champions": 30030,
    "max-g": 10**4,
}
GRAPH_WHAT = ("edges", "spectrum", "aut", "components")
#: seconds allowed for one automorphism search on a full dual graph
AUT_BUDGET = 60.0


@dataclass(frozen=True)
class Fixed:
    """A real printed with ``decimals`` places, or two significant figures below 0.1."""

    value: float
    decimals: int

    def rounded(self) -> float:
        x = self.value
        if x != 0 and abs(x) < 0.1:
            return float(f"{x:.2g}")
        return round(x, self.decimals)


@dataclass
class OutputRecord:
    command: str
    parameters: dict[str, Any]
    rows: list[dict[str, Any]]
    violations: list[Any] = field(default_factory=list)

    @property
    def exit_code(self) -> int:
        return EXIT_VIOLATIONS if self.violations else EXIT_OK


# ---------------------------------------------------------------------------
# serialisation
# ---------------------------------------------------------------------------


def _format_real(x: float, precise: bool, decimals: int | None = None) -> float | None:
    if math.isnan(x):
        return None
    if precise:
        return x
    if decimals is not None:
        return Fixed(x, decimals).rounded()
    return float(f"{x:.{DEFAULT_DIGITS}g}")


def _plain(value: Any, precise: bool) -> Any:
    if isinstance(value, Fixed):
        return _format_real(value.value, precise, value.decimals)
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, float):
        return _format_real(value, precise)
    if isinstance(value, dict):
        return {str(k): _plain(v, precise) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v, precise) for v in value]
    return str(value)


def _csv_cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, dict)):
        return json.dumps(value, separators=(",", ":"))
    return str(value)


def render(record: OutputRecord, fmt: str, precise: bool = False) -> str:
    rows = [_plain(row, precise) for row in record.rows]
    params = _plain(record.parameters, precise)
    if fmt == "json":
        doc = {
            "command": record.command,
            "parameters": params,
            "rows": rows,
            "violations": _plain(record.violations, precise),
        }
        return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
    buf = io.StringIO()
    buf.write(f"# command: {record.command}\n")
    for key, value in params.items():
        buf.write(f"# {key}: {_csv_cell(value)}\n")
    if record.violations:
        buf.write(f"# violations: {_csv_cell(_plain(record.violations, precise))}\n")
    if rows:
        writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({k: _csv_cell(v) for k, v in row.items()})
    return buf.getvalue()


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def cmd_table1(max_index: int = 10, max_n: int = 210) -> OutputRecord:
    buckets = atg_table(max_index, max_n)
    sets = cumulative(buckets)
    rows = [{"index": k, "added": buckets[k], "members": sets[k]} for k in sorted(buckets)]
    return OutputRecord("table1", {"max_index": max_index, "max_n": max_n}, rows)


def _component_summary(graph: Graph) -> str:
    sizes = sorted((len(c) for c in connected_components(graph)), reverse=True)
    counts: dict[int, int] = {}
    for s in sizes:
        counts[s] = counts.get(s, 0) + 1
    return " + ".join(f"{n}x{s}" if n > 1 else str(s) for s, n in counts.items())


def _aut_or_none(graph: Graph, budget: float | None) -> int | None:
    try:
        return automorphism_order(graph, time_budget=budget)
    except (SearchTimeout, CapacityError):
        return None


def qudit_row(q: int, capacity: int = DEFAULT_CAPACITY, aut_budget: float | None = AUT_BUDGET) -> dict[str, Any]:
    profile = goldbach_profile(q)
    if profile.totally_goldbach:
        goldbach = str(profile.success_count)
    else:
        goldbach = f"({profile.atg_index},{profile.success_count})"
    free, extra = decomposition(q, capacity)
    proj = projective_component(q, capacity)
    dual = build_dual_graph(q, capacity).graph
    spec = exact_integer_spectrum(proj)
    return {
        "q": q,
        "goldbach": goldbach,
        "mc": f"{free}+{extra}" if extra else str(free),
        "epsilon": Fixed(epsilon(q), 2),
        "aut_projective": _aut_or_none(proj, aut_budget),
        "aut_dual": _aut_or_none(dual, aut_budget),
        "spectrum": str(spec),
        "class": str(classify_spectrum(q, spec)),
        "graph": str(recognize_named_graph(proj)),
        "components": _component_summary(dual),
    }


def cmd_qudit_table(qs: Sequence[int], capacity: int = DEFAULT_CAPACITY) -> OutputRecord:
    rows = [qudit_row(q, capacity) for q in qs]
    return OutputRecord("qudit-table", {"q": list(qs), "capacity": capacity}, rows)


def cmd_table4(rs: Sequence[int]) -> OutputRecord:
    if not rs:
        raise DomainError("at least one r is required")
    if min(rs) < 2:
        raise DomainError("primorial index r must be >= 2")
    wanted = set(rs)
    found = {rec.r: rec for rec in primorial_records(max(rs)) if rec.r in wanted}
    table = default_table()
    rows = []
    for r in rs:
        rec = found[r]
        mantissa, exponent = primorial_scientific(r, table)
        if exponent < 18:
            size: Any = math.prod(table.primes[:r].tolist())
        else:
            size = f"{mantissa:.2f}e{exponent}"
        rows.append({"r": r, "p_r": rec.p_r, "N_r": size, "u_minus_exp_gamma": rec.u_minus_eg})
    return OutputRecord("table4", {"r": list(rs)}, rows)


def _scan_theorem1(limit: int) -> OutputRecord:
    rep = theorem1_scan(limit)
    rows = [{"q": q, "epsilon": epsilon(q)} for q in rep.satisfied_set]
    return OutputRecord("scan theorem1", {"limit": limit, "checked": rep.checked}, rows, list(rep.violations))


def _scan_conjecture1(limit: int) -> OutputRecord:
    rep = conjecture1_scan(limit)
    rows = [{"r": r} for r in rep.violations]
    return OutputRecord("scan conjecture1", {"limit": limit, "checked": rep.checked}, rows, list(rep.violations))


def _scan_prop2(limit: int) -> OutputRecord:
    rep = proposition2_scan(limit)
    logx = log_x_table(limit) if rep.violations else None
    rows = [{"q": q, "x": math.exp(logx[q])} for q in rep.violations] if logx is not None else []
    return OutputRecord("scan prop2", {"limit": limit, "checked": rep.checked}, rows, list(rep.violations))


def _scan_gd(limit: int) -> OutputRecord:
    champs = gd_champions(limit)
    rows = [
        {"q": q, "defect": goldbach_defect(q), "sandwich": verify_sandwich(q) if q > 2 else None}
        for q in champs
    ]
    return OutputRecord("scan gd-champions", {"limit": limit, "count": len(champs)}, rows)


def _scan_x(limit: int) -> OutputRecord:
    logx = log_x_table(limit)
    rows = [{"q": q, "x": math.exp(logx[q])} for q in x_champions(limit)]
    return OutputRecord("scan x-champions", {"limit": limit}, rows)


def _scan_max_g(limit: int) -> OutputRecord:
    return OutputRecord("scan max-g", {"limit": limit}, [{"n": n} for n in maximal_g_set(limit)])


SCANS: dict[str, Callable[[int], OutputRecord]] = {
    "theorem1": _scan_theorem1,
    "conjecture1": _scan_conjecture1,
    "prop2": _scan_prop2,
    "gd-champions": _scan_gd,
    "x-champions": _scan_x,
    "max-g": _scan_max_g,
}


def cmd_scan(which: str, limit: int | None = None) -> OutputRecord:
    if which not in SCANS:
        raise DomainError(f"unknown scan {which!r}")
    return SCANS[which](SCAN_LIMITS[which] if limit is None else limit)


def _graph_for(q: int, part: str, capacity: int) -> Graph:
    if part == "projective":
        return projective_component(q, capacity)
    return build_dual_graph(q, capacity).graph


def cmd_graph(q: int, what: str, part: str = "dual", capacity: int = DEFAULT_CAPACITY) -> OutputRecord | str:
    """An OutputRecord, or raw edge-list text for ``what == "edges"``."""
    graph = _graph_for(q, part, capacity)
    params = {"q": q, "part": part}
    if what == "edges":
        return edge_list_text(graph)
    if what == "spectrum":
        return OutputRecord("graph spectrum", params, [graph_record(graph, q, AUT_BUDGET)])
    if what == "aut":
        return OutputRecord("graph aut", params, [{"order": graph.n, "aut_order": _aut_or_none(graph, AUT_BUDGET)}])
    if what == "components":
        comps = sorted(connected_components(graph), key=lambda c: (-len(c), min(c)))
        rows = [{"size": len(c), "vertices": sorted(c)} for c in comps]
        return OutputRecord("graph components", params, rows)
    raise DomainError(f"unknown graph output {what!r}")


# ---------------------------------------------------------------------------
# argument handling
# ---------------------------------------------------------------------------

_COMMON_DEFAULTS = {"format": "csv", "precise": False, "capacity": DEFAULT_CAPACITY, "out": None, "limit": None}


def read_config(path: str) -> dict[str, Any]:
    """Parse a ``key = value`` file; ``#`` starts a comment."""
    out: dict[str, Any] = {}
    text = Path(path).read_text(encoding="utf-8")
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key = key.strip().replace("-", "_")
        value = value.strip()
        if not sep or key not in _COMMON_DEFAULTS:
            raise DomainError(f"{path}:{lineno}: unrecognised setting {raw.strip()!r}")
        if key in ("capacity", "limit"):
            out[key] = int(value)
        elif key == "precise":
            out[key] = value.lower() in ("1", "true", "yes", "on")
        elif key == "format" and value not in ("csv", "json"):
            raise DomainError(f"{path}:{lineno}: format must be csv or json")
        else:
            out[key] = value
    return out


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--limit", type=int, default=None, help="scan bound (table1: largest n)")
    common.add_argument("--format", choices=("csv", "json"), default=None)
    common.add_argument("--out", default=None, help="write to PATH instead of standard output")
    common.add_argument("--precise", action="store_true", default=None, help="full float precision")
    common.add_argument("--capacity", type=int, default=None, help="largest q for graph work")
    common.add_argument("--config", default=None, help="key=value file supplying flag defaults")

    parser = argparse.ArgumentParser(prog="qudit-goldbach", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table1", parents=[common], help="almost totally Goldbach numbers by index")
    p.add_argument("--max-index", type=int, default=10)

    p = sub.add_parser("qudit-table", parents=[common], help="per-q Goldbach and dual-graph data")
    p.add_argument("q", type=int, nargs="*", help="dimensions (default 2..36)")

    p = sub.add_parser("table4", parents=[common], help="u_r - e^gamma at primorials")
    p.add_argument("r", type=int, nargs="*", help=f"primorial indices (default {' '.join(map(str, TABLE4_R))})")

    p = sub.add_parser("scan", parents=[common], help="run a finite scan")
    p.add_argument("name", choices=sorted(SCANS))

    p = sub.add_parser("graph", parents=[common], help="export a dual Pauli graph")
    p.add_argument("q", type=int)
    p.add_argument("what", choices=GRAPH_WHAT)
    p.add_argument("--part", choices=("dual", "projective"), default="dual")
    return parser


def _settings(args: argparse.Namespace) -> dict[str, Any]:
    merged = dict(_COMMON_DEFAULTS)
    if args.config:
        merged.update(read_config(args.config))
    for key in _COMMON_DEFAULTS:
        value = getattr(args, key)
        if value is not None:
            merged[key] = value
    return merged


def _run(args: argparse.Namespace, opts: dict[str, Any]) -> OutputRecord | str:
    if args.command == "table1":
        return cmd_table1(args.max_index, opts["limit"] or 210)
    if args.command == "qudit-table":
        return cmd_qudit_table(args.q or list(range(2, 37)), opts["capacity"])
    if args.command == "table4":
        return cmd_table4(args.r or TABLE4_R)
    if args.command == "scan":
        return cmd_scan(args.name, opts["limit"])
    return cmd_graph(args.q, args.what, args.part, opts["capacity"])


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        opts = _settings(args)
        result = _run(args, opts)
    except (DomainError, CapacityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except OSError as exc:
        print(f"error: {exc.filename or ''}: {exc.strerror or exc}", file=sys.stderr)
        return EXIT_ERROR

    if isinstance(result, str):
        text, code = result, EXIT_OK
    else:
        text, code = render(result, opts["format"], opts["precise"]), result.exit_code
    if opts["out"]:
        try:
            Path(opts["out"]).write_text(text, encoding="utf-8")
        except OSError as exc:
            print(f"error: cannot write {opts['out']}: {exc.strerror or exc}", file=sys.stderr)
            return EXIT_ERROR
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
