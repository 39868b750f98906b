"""Command-line front end: ``antimatch <command> ...``.

Exit codes: 0 success, 1 usage error, 2 parse error, 3 input has a C4,
4 oracle size limit exceeded, 5 a produced result failed re-verification.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import statistics
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from .generators import GenConfig, density_target, fixture, fixture_names, fixture_text, gen_c4free
from .graph import Graph, GraphError, ParseError, find_quadrilateral, format_edge_list, parse_edge_list
from .neighbourly import Witness, max_neighbourly, max_special, structure_report, verify_neighbourly
from .oracle import OracleLimitError, oracle_max_neighbourly, oracle_max_special
from .triangles import enumerate_triangles

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_NOT_C4_FREE = 3
EXIT_ORACLE_LIMIT = 4
EXIT_UNVERIFIED = 5


class UsageError(Exception):
    pass


class NotC4Free(Exception):
    def __init__(self, cycle):
        super().__init__(f"input contains the 4-cycle {' - '.join(map(str, cycle))}")
        self.cycle = cycle


@dataclass
class RunResult:
    """One command's outcome. ``witness`` and ``result`` are mutually exclusive."""

    command: str
    n: int = 0
    m: int = 0
    witness: Optional[Witness] = None
    result: Optional[dict] = None
    verified: bool = True
    timing_ms: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        out: dict = {"command": self.command, "n": self.n, "m": self.m}
        if self.witness is not None:
            out["cardinality"] = self.witness.cardinality
            out["kind"] = self.witness.kind.value
            out["edges"] = [list(e) for e in self.witness.edges]
        else:
            out["result"] = self.result
        out["verified"] = self.verified
        out["timing_ms"] = self.timing_ms
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


class _Clock:
    def __init__(self, enabled: bool):
        self.enabled = enabled
        self.phases: dict = {}

    def run(self, phase, fn, *args):
        t0 = time.perf_counter()
        value = fn(*args)
        if self.enabled:
            self.phases[phase] = round((time.perf_counter() - t0) * 1000, 3)
        return value


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    src = common.add_mutually_exclusive_group()
    src.add_argument("--input", type=Path, help="edge-list file ('-' for stdin)")
    src.add_argument("--fixture", help="named graph: " + ", ".join(fixture_names()))
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--skip-c4-check", action="store_true", help="run solvers without checking C4-freeness")
    common.add_argument("--timing", action="store_true", help="record per-phase wall-clock times")

    p = _Parser(prog="antimatch", description="Neighbourly sets and triangles in quadrilateral-free graphs.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("check", parents=[common], help="test C4-freeness")
    sub.add_parser("triangles", parents=[common], help="list all triangles")
    sub.add_parser("special", parents=[common], help="maximum special neighbourly set")
    sub.add_parser("general", parents=[common], help="maximum neighbourly set")
    o = sub.add_parser("oracle", parents=[common], help="brute-force maximum (small graphs)")
    o.add_argument("--special", action="store_true")
    r = sub.add_parser("report", parents=[common], help="containment report for a given neighbourly set")
    r.add_argument("--set", dest="set_path", type=Path, required=True, help="edge-list file holding the set")

    g = sub.add_parser("gen", help="generate a seeded C4-free graph")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--m", type=int, required=True, help="target edge count")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--max-attempts", type=int)
    g.add_argument("--out", type=Path)
    g.add_argument("--format", choices=("text", "json"), default="text")

    b = sub.add_parser("bench", help="time triangle listing and the general solver")
    b.add_argument("--sizes", default="1000,2000,4000", help="comma-separated ascending vertex counts")
    b.add_argument("--density", type=float, default=0.5, help="fraction of the C4-free edge bound")
    b.add_argument("--seed", type=int, default=1)
    b.add_argument("--repeats", type=int, default=3)
    b.add_argument("--format", choices=("text", "json", "csv"), default="text")

    f = sub.add_parser("fixture", help="write a named fixture as an edge list")
    f.add_argument("--name", required=True)
    f.add_argument("--out", type=Path)
    return p


def _load(args) -> Graph:
    if args.fixture:
        try:
            return fixture(args.fixture)
        except KeyError as exc:
            raise UsageError(exc.args[0]) from None
    if args.input is None:
        raise UsageError("one of --input or --fixture is required")
    text = sys.stdin.read() if str(args.input) == "-" else _read(args.input)
    return parse_edge_list(text)


def _read(path: Path) -> str:
    try:
        return path.read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _guard(g: Graph, args, clock: _Clock) -> None:
    if args.skip_c4_check:
        return
    cycle = clock.run("c4_check", find_quadrilateral, g)
    if cycle is not None:
        raise NotC4Free(cycle)


def _witness_cmd(args, solver, special: bool, check: bool) -> RunResult:
    clock = _Clock(args.timing)
    g = clock.run("load", _load, args)
    if check:
        _guard(g, args, clock)
    w = clock.run("solve", solver, g)
    ok = clock.run("verify", verify_neighbourly, g, w.edges, special)
    return RunResult(args.command, g.n, g.m, witness=w, verified=ok, timing_ms=clock.phases)


def _cmd_check(args) -> RunResult:
    clock = _Clock(args.timing)
    g = clock.run("load", _load, args)
    cycle = clock.run("c4_check", find_quadrilateral, g)
    res = {"c4_free": cycle is None, "quadrilateral": list(cycle) if cycle else None}
    return RunResult("check", g.n, g.m, result=res, timing_ms=clock.phases)


def _cmd_triangles(args) -> RunResult:
    clock = _Clock(args.timing)
    g = clock.run("load", _load, args)
    _guard(g, args, clock)
    tris = clock.run("enumerate", enumerate_triangles, g)
    seen = set()
    ok = True
    for t in tris:
        for e in t.edges():
            ok = ok and g.has_edge(*e) and e not in seen
            seen.add(e)
    res = {"count": len(tris), "triangles": [list(t) for t in tris]}
    return RunResult("triangles", g.n, g.m, result=res, verified=ok, timing_ms=clock.phases)


def _cmd_oracle(args) -> RunResult:
    solver = oracle_max_special if args.special else oracle_max_neighbourly
    return _witness_cmd(args, solver, args.special, check=False)


def _cmd_report(args) -> RunResult:
    clock = _Clock(args.timing)
    g = clock.run("load", _load, args)
    try:
        chosen = parse_edge_list(_read(args.set_path)).edges
    except ParseError as exc:
        raise ParseError(exc.line, f"{args.set_path}: {exc.message}") from None
    for u, v in chosen:
        if max(u, v) >= g.n or not g.has_edge(u, v):
            raise UsageError(f"set edge ({u}, {v}) is not an edge of the graph")
    if not verify_neighbourly(g, chosen):
        raise UsageError("the given set is not a neighbourly set of the graph")
    rep = clock.run("report", structure_report, g, chosen)
    res = {"set_size": len(chosen), **rep.to_dict()}
    return RunResult("report", g.n, g.m, result=res, timing_ms=clock.phases)


def _cmd_gen(args) -> tuple[RunResult, Optional[str]]:
    try:
        cfg = GenConfig(args.n, args.m, args.seed, args.max_attempts)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    g = gen_c4free(cfg)
    text = format_edge_list(g, comment=f"c4free n={cfg.n} target_m={cfg.target_m} seed={cfg.seed}")
    if args.out:
        args.out.write_text(text)
    res = dict(g.meta)
    return RunResult("gen", g.n, g.m, result=res), None if args.out else text


def _cmd_fixture(args) -> tuple[RunResult, Optional[str]]:
    try:
        text = fixture_text(args.name)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    if args.out:
        args.out.write_text(text)
    g = parse_edge_list(text)
    return RunResult("fixture", g.n, g.m, result={"name": args.name}), None if args.out else text


def _median_ms(fn, g, repeats):
    times = []
    value = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        value = fn(g)
        times.append((time.perf_counter() - t0) * 1000)
    return statistics.median(times), value


def bench(sizes, density=0.5, seed=1, repeats=3) -> list[dict]:
    """Time triangle listing and the general solver on seeded C4-free graphs.

    Runs are strictly sequential; each reported time is the median over
    ``repeats`` runs on the same graph. Graph generation is not timed.
    """
    sizes = list(sizes)
    if sizes != sorted(sizes):
        raise ValueError("sizes must be ascending")
    if repeats < 1:
        raise ValueError("repeats must be >= 1")
    rows = []
    for n in sizes:
        target = density_target(n, density)
        g = gen_c4free(GenConfig(n, target, seed))
        t_tri, tris = _median_ms(enumerate_triangles, g, repeats)
        t_gen, w = _median_ms(max_neighbourly, g, repeats)
        rows.append({
            "n": n,
            "m": g.m,
            "target_m": target,
            "t_triangles_ms": round(t_tri, 3),
            "t_general_ms": round(t_gen, 3),
            "triangles": len(tris),
            "cardinality": w.cardinality,
        })
    return rows


def _cmd_bench(args) -> tuple[RunResult, Optional[str]]:
    try:
        sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
        rows = bench(sizes, args.density, args.seed, args.repeats)
    except ValueError as exc:
        raise UsageError(f"bench: {exc}") from None
    res = {"density": args.density, "seed": args.seed, "repeats": args.repeats, "rows": rows}
    rr = RunResult("bench", result=res)
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=list(rows[0]) if rows else ["n"], lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
        return rr, buf.getvalue()
    return rr, None


def _text(rr: RunResult) -> str:
    head = f"{rr.command}: n={rr.n} m={rr.m}"
    lines = []
    if rr.witness is not None:
        w = rr.witness
        lines.append(f"{head} cardinality={w.cardinality} kind={w.kind.value} verified={rr.verified}")
        lines.extend(f"{u} {v}" for u, v in w.edges)
    elif rr.command == "triangles":
        lines.append(f"{head} triangles={rr.result['count']} verified={rr.verified}")
        lines.extend(" ".join(map(str, t)) for t in rr.result["triangles"])
    elif rr.command == "bench":
        lines.append(f"{'n':>7} {'m':>8} {'t_triangles_ms':>15} {'t_general_ms':>13}")
        for row in rr.result["rows"]:
            lines.append(f"{row['n']:>7} {row['m']:>8} {row['t_triangles_ms']:>15.1f} {row['t_general_ms']:>13.1f}")
    else:
        lines.append(head)
        lines.extend(f"{k}: {v}" for k, v in rr.result.items())
    for phase, ms in rr.timing_ms.items():
        lines.append(f"# {phase}: {ms} ms")
    return "\n".join(lines) + "\n"


_HANDLERS = {
    "check": _cmd_check,
    "triangles": _cmd_triangles,
    "special": lambda a: _witness_cmd(a, max_special, True, check=True),
    "general": lambda a: _witness_cmd(a, max_neighbourly, False, check=True),
    "oracle": _cmd_oracle,
    "report": _cmd_report,
}
_WRITERS = {"gen": _cmd_gen, "fixture": _cmd_fixture, "bench": _cmd_bench}


def dispatch(argv, out=None, err=None) -> tuple[Optional[RunResult], int]:
    """Run one command; returns its result (None on failure) and the exit code."""
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if args.command in _WRITERS:
            rr, raw = _WRITERS[args.command](args)
        else:
            rr, raw = _HANDLERS[args.command](args), None
    except UsageError as exc:
        print(exc, file=err)
        return None, EXIT_USAGE
    except ParseError as exc:
        print(f"parse error: {exc}", file=err)
        return None, EXIT_PARSE
    except GraphError as exc:
        print(f"error: {exc}", file=err)
        return None, EXIT_USAGE
    except NotC4Free as exc:
        print(f"error: {exc}; pass --skip-c4-check to run anyway", file=err)
        return None, EXIT_NOT_C4_FREE
    except OracleLimitError as exc:
        print(f"error: {exc}", file=err)
        return None, EXIT_ORACLE_LIMIT
    except SystemExit as exc:  # --help
        return None, EXIT_OK if not exc.code else EXIT_USAGE

    fmt = getattr(args, "format", "text")
    if raw is not None and (fmt != "json" or rr.command == "bench"):
        out.write(raw)
    elif fmt == "json":
        out.write(rr.to_json() + "\n")
    else:
        out.write(_text(rr))
    if rr.command == "check" and not rr.result["c4_free"]:
        return rr, EXIT_NOT_C4_FREE
    return rr, EXIT_OK if rr.verified else EXIT_UNVERIFIED


def main(argv=None) -> int:
    _, code = dispatch(sys.argv[1:] if argv is None else argv)
    return code


if __name__ == "__main__":
    sys.exit(main())
