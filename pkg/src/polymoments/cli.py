"""Command-line interface.

Subcommands::

    moments  --n 5 --r 1 --m -1..10 [--verify] [--mc-samples N --seed S]
    table    --n 3..30 --m 1 | --m var [--r R]
    curve    {cdf,pdf} --n 7 [--r R] [--points N] [--circle]
    verify   --n 3..12 --m -1..4 [--mc-samples N] [--seed S] [--budget SEC]

Data goes to stdout (CSV by default, JSON with ``--json``) or to ``--output``.
``--plot FILE`` additionally renders the curve/table rows as a figure.
Numbers are printed with shortest round-trip formatting, so re-parsing an
output reproduces the binary64 values exactly.

Exit codes: 0 success, 1 verification failure, 2 usage or domain error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from . import __version__
from . import checks, circle
from . import moments as mom
from .chord_cdf import breakpoints, chord_cdf, chord_pdf_numeric
from .distance_pdf import distance_pdf
from .geometry import polygon
from .oracles import IUR_CHORD, POINT_PAIR, McConfig, mc_metadata

SCHEMA_VERSION = "1"

__all__ = ["OutputRecord", "main", "parse_range"]


@dataclass
class OutputRecord:
    """One command's output: parameter echo, column-major rows, metadata."""
    command: str
    params: dict
    columns: list[str]
    rows: list[list]
    metadata: dict = field(default_factory=dict)
    schema_version: str = SCHEMA_VERSION

    def to_json(self) -> str:
        payload = {
            "schema_version": self.schema_version,
            "command": self.command,
            "params": self.params,
            "columns": self.columns,
            "rows": self.rows,
            "metadata": self.metadata,
        }
        return json.dumps(payload, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "OutputRecord":
        payload = json.loads(text)
        return cls(command=payload["command"], params=payload["params"],
                   columns=payload["columns"], rows=payload["rows"],
                   metadata=payload["metadata"],
                   schema_version=payload["schema_version"])

    def to_csv(self) -> str:
        out = io.StringIO()
        out.write(f"# schema_version={self.schema_version}\n")
        out.write(f"# command={self.command}\n")
        for key, value in self.params.items():
            out.write(f"# param:{key}={_fmt(value)}\n")
        for key, value in self.metadata.items():
            out.write(f"# meta:{key}={_fmt(value)}\n")
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(self.columns)
        for row in self.rows:
            writer.writerow([_fmt(v) for v in row])
        return out.getvalue()

    @classmethod
    def from_csv(cls, text: str) -> "OutputRecord":
        params: dict = {}
        metadata: dict = {}
        schema = SCHEMA_VERSION
        command = ""
        header_lines: list[str] = []
        for line in text.splitlines():
            if not line:
                continue
            if line.startswith("# "):
                key, _, value = line[2:].partition("=")
                if key == "schema_version":
                    schema = value
                elif key == "command":
                    command = value
                elif key.startswith("param:"):
                    params[key[6:]] = _parse(value)
                elif key.startswith("meta:"):
                    metadata[key[5:]] = _parse(value)
            else:
                header_lines.append(line)
        reader = csv.reader(header_lines)
        columns = next(reader, [])
        rows = [[_parse(tok) for tok in row] for row in reader]
        return cls(command=command, params=params, columns=columns, rows=rows,
                   metadata=metadata, schema_version=schema)


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _parse(token: str):
    if token == "":
        return None
    if token == "true":
        return True
    if token == "false":
        return False
    try:
        return int(token)
    except ValueError:
        pass
    try:
        return float(token)
    except ValueError:
        return token


def parse_range(text: str) -> list[int]:
    """Inclusive integer ranges: '7', '3..30', or '3,5,8'."""
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            lo_text, _, hi_text = part.partition("..")
            lo, hi = int(lo_text), int(hi_text)
            if hi < lo:
                raise ValueError(f"empty range {part!r}")
            out.extend(range(lo, hi + 1))
        else:
            out.append(int(part))
    return out


def _worker_count() -> int:
    raw = os.environ.get("POLYMOMENTS_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _map_ordered(fn, items):
    workers = _worker_count()
    if workers == 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


# --------------------------------------------------------------------------
# subcommands


def _cmd_moments(args) -> tuple[OutputRecord, int]:
    params = polygon(args.n, args.r)
    orders = parse_range(args.m)
    columns = ["m", "value", "method", "err_estimate"]
    if args.verify:
        columns += ["quadrature_pdf", "quadrature_cdf"]
        if args.mc_samples:
            columns += ["monte_carlo", "mc_std_error"]

    def cell(m: int) -> list:
        result = mom.moment(params, m)
        row: list = [result.m, result.value, result.method, result.err_estimate]
        if args.verify:
            row.append(mom.moment_via_pdf_quadrature(params, m).value)
            row.append(mom.moment_via_cdf_quadrature(params, m).value)
            if args.mc_samples:
                cfg = McConfig(samples=args.mc_samples, seed=args.seed)
                mc = mom.moment_via_monte_carlo(params, m, cfg)
                row += [mc.value, mc.err_estimate]
        return row

    rows = _map_ordered(cell, orders)
    meta: dict = {}
    if args.verify and args.mc_samples:
        meta.update(mc_metadata(McConfig(samples=args.mc_samples, seed=args.seed)))
    record = OutputRecord(command="moments",
                          params={"n": args.n, "r": args.r, "m": args.m},
                          columns=columns, rows=rows, metadata=meta)
    return record, 0


def _cmd_table(args) -> tuple[OutputRecord, int]:
    ns = parse_range(args.n)
    want_var = args.m == "var"
    m = None if want_var else int(args.m)

    def cell(n: int) -> list:
        params = polygon(n, args.r)
        value = mom.variance(params) if want_var else mom.moment(params, m).value
        return [n, value]

    rows = _map_ordered(cell, ns)
    limit = circle.variance(args.r) if want_var else circle.moment(m, args.r)
    rows.append([float("inf"), limit])
    record = OutputRecord(command="table",
                          params={"n": args.n, "m": args.m, "r": args.r},
                          columns=["n", "value"], rows=rows)
    return record, 0


def _cmd_curve(args) -> tuple[OutputRecord, int]:
    params = polygon(args.n, args.r)
    count = args.points
    if count < 2:
        raise ValueError(f"need at least 2 points, got {count}")
    xs = [params.d * i / (count - 1) for i in range(count)]
    step = 1e-6 * params.d
    marks = breakpoints(params)
    columns = ["x"]
    if args.kind == "cdf":
        columns.append("cdf")
        if args.circle:
            columns.append("circle_cdf")
    else:
        columns += ["pdf", "chord_pdf"]
        if args.circle:
            columns.append("circle_pdf")

    rows: list[list] = []
    for x in xs:
        row: list = [x]
        if args.kind == "cdf":
            row.append(chord_cdf(params, x))
            if args.circle:
                row.append(circle.chord_cdf(x, args.r))
        else:
            row.append(distance_pdf(params, x))
            near_break = any(abs(x - b) <= step for b in marks)
            if 0.0 < x < params.d and not near_break:
                row.append(chord_pdf_numeric(params, x, step))
            else:
                row.append(None)
            if args.circle:
                row.append(circle.distance_pdf(x, args.r))
        rows.append(row)
    record = OutputRecord(
        command="curve",
        params={"kind": args.kind, "n": args.n, "r": args.r,
                "points": count, "circle": bool(args.circle)},
        columns=columns, rows=rows,
        metadata={"breakpoints": " ".join(repr(b) for b in marks)})
    return record, 0


def _cmd_verify(args) -> tuple[OutputRecord, int]:
    started = time.perf_counter()
    results = checks.run_verification(
        ns=parse_range(args.n), ms=parse_range(args.m), r=args.r,
        mc_samples=args.mc_samples, seed=args.seed, budget=args.budget)
    elapsed = time.perf_counter() - started
    rows = [[res.suite, res.target, res.passed, res.worst, res.bound]
            for res in results]
    failures = sum(not res.passed for res in results)
    meta: dict = {"elapsed_s": elapsed, "failures": failures, "seed": args.seed}
    if args.mc_samples:
        meta.update(mc_metadata(McConfig(samples=args.mc_samples, seed=args.seed)))
    record = OutputRecord(command="verify",
                          params={"n": args.n, "m": args.m, "r": args.r,
                                  "mc_samples": args.mc_samples,
                                  "budget": args.budget},
                          columns=["suite", "target", "passed", "worst", "bound"],
                          rows=rows, metadata=meta)
    return record, 0 if failures == 0 else 1


# --------------------------------------------------------------------------
# wiring


def _samples(text: str) -> int:
    """Sample counts accept scientific notation ('1e6')."""
    value = float(text)
    if value < 1 or value != int(value):
        raise argparse.ArgumentTypeError(f"bad sample count {text!r}")
    return int(value)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polymoments",
        description="Chord-length distribution, point-distance density and "
                    "distance moments of regular polygons.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, plot: bool = False) -> None:
        p.add_argument("--json", action="store_true", help="emit JSON instead of CSV")
        p.add_argument("--output", help="write data here instead of stdout")
        if plot:
            p.add_argument("--plot", help="also render a figure to this file")

    p = sub.add_parser("moments", help="distance moments of one polygon")
    p.add_argument("--n", type=int, required=True, help="number of sides")
    p.add_argument("--r", type=float, default=1.0, help="circumradius")
    p.add_argument("--m", required=True, help="moment order(s), e.g. -1..10")
    p.add_argument("--verify", action="store_true",
                   help="add quadrature (and Monte Carlo) columns")
    p.add_argument("--mc-samples", type=_samples, default=None)
    p.add_argument("--seed", type=int, default=0)
    common(p)
    p.set_defaults(fn=_cmd_moments)

    p = sub.add_parser("table", help="one moment across a range of n")
    p.add_argument("--n", required=True, help="range of side counts, e.g. 3..30")
    p.add_argument("--m", required=True, help="moment order, or 'var'")
    p.add_argument("--r", type=float, default=1.0)
    common(p, plot=True)
    p.set_defaults(fn=_cmd_table)

    p = sub.add_parser("curve", help="sampled distribution or density curve")
    p.add_argument("kind", choices=("cdf", "pdf"),
                   help="cdf: chord length distribution; pdf: point distance density")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=float, default=1.0)
    p.add_argument("--points", type=int, default=1000)
    p.add_argument("--circle", action="store_true",
                   help="add the circle reference column")
    common(p, plot=True)
    p.set_defaults(fn=_cmd_curve)

    p = sub.add_parser("verify", help="run the verification suites")
    p.add_argument("--n", default="3..12", help="range of side counts")
    p.add_argument("--m", default="-1..4", help="range of moment orders")
    p.add_argument("--r", type=float, default=1.0)
    p.add_argument("--mc-samples", type=_samples, default=None,
                   help="enable Monte Carlo concordance suites")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=float, default=None,
                   help="fail if the run takes longer than this many seconds")
    common(p)
    p.set_defaults(fn=_cmd_verify)
    return parser


def _fuse_negative_ranges(argv: list[str]) -> list[str]:
    """Join '--m -1..4' into '--m=-1..4' so argparse does not eat the value."""
    out: list[str] = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in ("--m", "--n") and i + 1 < len(argv):
            nxt = argv[i + 1]
            if nxt.startswith("-") and (".." in nxt or nxt.lstrip("-").isdigit()):
                out.append(f"{tok}={nxt}")
                i += 2
                continue
        out.append(tok)
        i += 1
    return out


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(_fuse_negative_ranges(argv))
    try:
        record, code = args.fn(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    text = record.to_json() if args.json else record.to_csv()
    if args.output:
        with open(args.output, "w") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    plot = getattr(args, "plot", None)
    if plot:
        from . import report

        report.render(record, plot)
    return code


if __name__ == "__main__":
    sys.exit(main())
