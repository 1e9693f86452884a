"""Command-line front end: tables, verification suites, constructions, searches."""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

from .core import (ParameterError, Params, SetFamily, SignedFamily, SizeError, c_size,
                   construct_C, construct_E, construct_P, e_size, format_set_family,
                   format_signed_family, is_intersecting, p_size, parse_signed_family)
from .lexshadow import LexSegment
from .report import BoundReport
from .search import circle_alpha_check, m_exact, result_line
from .suites import CIRCLE_CASES, SUITES, run_suite

COMMANDS = ("table", "verify", "construct", "search", "circle")
FORMATS = ("tsv", "json")
CONSTRUCTIONS = {"E": construct_E, "P": construct_P, "C": construct_C}


@dataclass
class RunConfig:
    command: str
    ns: list[int] = field(default_factory=list)
    ks: list[int] = field(default_factory=list)
    ls: list[int] = field(default_factory=lambda: [1])
    c_values: list[int] = field(default_factory=list)
    time_budget: float = 60.0
    output_path: str | None = None
    format: str = "tsv"

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ParameterError(f"unknown command {self.command!r}")
        if self.time_budget <= 0:
            raise ParameterError("budget must be positive")
        if self.format not in FORMATS:
            raise ParameterError(f"format must be one of {FORMATS}")


def parse_range(text: str) -> list[int]:
    """``"4..8"`` -> [4, 5, 6, 7, 8]; ``"3"`` -> [3]; ``"1,2,5"`` -> [1, 2, 5].

    A reversed range such as ``"5..4"`` is empty.
    """
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            lo, hi = part.split("..", 1)
            out.extend(range(int(lo), int(hi) + 1))
        elif part:
            out.append(int(part))
    return out


def _range_arg(text: str) -> list[int]:
    try:
        return parse_range(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}; use a..b or a,b,c") from None


# -- output helpers ------------------------------------------------------------

def _params_text(params: dict) -> str:
    return ",".join(f"{k}={v}" for k, v in params.items())


def _emit_rows(header: Sequence[str], rows: list[dict], fmt: str, out) -> None:
    if fmt == "json":
        for row in rows:
            out.write(json.dumps(row, sort_keys=False) + "\n")
        return
    out.write("\t".join(header) + "\n")
    for row in rows:
        out.write("\t".join(str(row[h]) for h in header) + "\n")


def witness_text(witness) -> str | None:
    if isinstance(witness, SignedFamily):
        return format_signed_family(witness)
    if isinstance(witness, SetFamily):
        return format_set_family(witness)
    if isinstance(witness, tuple) and witness and all(isinstance(w, LexSegment) for w in witness):
        parts = []
        for name, seg in zip("AB", witness):
            parts.append(f"# {name} = L({seg.count}, {seg.member_size})")
            parts.append(format_set_family(seg.family()))
        return "\n".join(p for p in parts if p) + "\n"
    return None


def _write_witness(rep: BoundReport, idx: int, outdir: Path | None) -> str | None:
    if outdir is None:
        return None
    text = witness_text(rep.witness)
    if text is None:
        return None
    outdir.mkdir(parents=True, exist_ok=True)
    name = f"{idx:04d}_{rep.theorem}_{_params_text(rep.params).replace(',', '_')}.txt"
    (outdir / name).write_text(text)
    return str(outdir / name)


RECORD_FIELDS = ("theorem", "params", "lhs", "rhs", "argmax", "witness_file", "ok")


def _record_line(rec: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rec)
    row = dict(rec, params=_params_text(rec["params"]), ok=int(rec["ok"]),
               witness_file=rec["witness_file"] or "-")
    return "\t".join(str(row[f]) for f in RECORD_FIELDS)


# -- commands ---------------------------------------------------------------------

def table_rows(ns: Sequence[int], ks: Sequence[int], budget: float) -> list[dict]:
    rows = []
    for k in ks:
        for n in ns:
            row = {"n": n, "k": k, "e": "-", "p": "-", "c": "-", "m_exact": "-", "match": "-"}
            if n >= 2 * k:
                row.update(e=e_size(n, k), p=p_size(n, k), c=c_size(n, k))
            try:
                res = m_exact(Params(n, k, 1), budget)
            except (ParameterError, SizeError) as exc:
                row["m_exact"] = f"error:{exc}".replace("\t", " ")
                rows.append(row)
                continue
            if res.optimal:
                row["m_exact"] = res.alpha
            else:
                row["m_exact"] = f"{res.alpha}..{res.upper_bound}"
            if row["c"] != "-":
                row["match"] = int(res.optimal and res.alpha == row["c"])
            rows.append(row)
    return rows


def cmd_table(cfg: RunConfig, out) -> int:
    rows = table_rows(cfg.ns, cfg.ks, cfg.time_budget)
    _emit_rows(("n", "k", "e", "p", "c", "m_exact", "match"), rows, cfg.format, out)
    return 0


def cmd_verify(suite: str, cfg: RunConfig, out) -> int:
    outdir = Path(cfg.output_path) if cfg.output_path else None
    kwargs = {}
    if cfg.c_values and suite in ("thm7", "thm10"):
        kwargs["cs"] = cfg.c_values
    reports = SUITES[suite](**kwargs) if suite != "all" else run_suite("all")
    if cfg.format == "tsv":
        out.write("\t".join(RECORD_FIELDS) + "\n")
    failed = 0
    for idx, rep in enumerate(reports):
        rec = rep.record(_write_witness(rep, idx, outdir))
        failed += not rec["ok"]
        out.write(_record_line(rec, cfg.format) + "\n")
        out.flush()
    print(f"# {suite}: {'FAIL' if failed else 'PASS'} ({failed} failing)", file=sys.stderr)
    return 1 if failed else 0


def cmd_construct(name: str, n: int, k: int, cfg: RunConfig, out) -> int:
    fam = CONSTRUCTIONS[name](Params(n, k, 1))
    text = format_signed_family(fam)
    # round-trip through the parser so the file is known to read back
    back = parse_signed_family(text, n=n, k=k, l=1)
    ok = back == fam and is_intersecting(back)
    if cfg.output_path:
        Path(cfg.output_path).write_text(text)
        dest = out
    else:
        out.write(text)
        dest = sys.stderr
    print(f"# construct {name} n={n} k={k}: size={len(fam)} intersecting={int(ok)}", file=dest)
    return 0 if ok else 1


def cmd_search(cfg: RunConfig, out) -> int:
    for n in cfg.ns:
        for k in cfg.ks:
            for l in cfg.ls:
                p = Params(n, k, l)
                res = m_exact(p, cfg.time_budget)
                out.write(result_line(p, res) + "\n")
                if cfg.output_path and len(cfg.ns) * len(cfg.ks) * len(cfg.ls) == 1:
                    Path(cfg.output_path).write_text(format_signed_family(res.witness))
    return 0


def cmd_circle(pairs: Sequence[tuple[int, int]], cfg: RunConfig, out) -> int:
    failed = 0
    if cfg.format == "tsv":
        out.write("\t".join(RECORD_FIELDS) + "\n")
    for n, k in pairs:
        rec = circle_alpha_check(n, k, cfg.time_budget).record()
        failed += not rec["ok"]
        out.write(_record_line(rec, cfg.format) + "\n")
    return 1 if failed else 0


# -- argument parsing -------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=_range_arg, help="n values, e.g. 4..8")
    common.add_argument("--k", type=_range_arg, help="k values")
    common.add_argument("--l", type=_range_arg, help="l values (search only)")
    common.add_argument("--c", type=_range_arg, help="c values for the cross-intersecting suites")
    common.add_argument("--budget-ms", type=int, default=60000, help="search budget per instance")
    common.add_argument("--format", choices=FORMATS, default="tsv")
    common.add_argument("--out", help="output file (or witness directory for verify)")

    ap = argparse.ArgumentParser(prog="signedekr", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)
    sub.add_parser("table", parents=[common], help="constructions against exact m(n,k,1)")
    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("suite", choices=sorted(SUITES) + ["all"])
    c = sub.add_parser("construct", parents=[common], help="write a construction")
    c.add_argument("name", choices=sorted(CONSTRUCTIONS))
    c.add_argument("n_pos", metavar="n", type=int)
    c.add_argument("k_pos", metavar="k", type=int)
    sub.add_parser("search", parents=[common], help="exact m(n,k,l) by branch and bound")
    sub.add_parser("circle", parents=[common], help="alpha on the signed circle")
    return ap


_DEFAULTS = {
    "table": {"ns": [4, 5, 6, 7, 8], "ks": [2]},
    "search": {"ns": [6], "ks": [2]},
}


def config_from_args(args: argparse.Namespace) -> RunConfig:
    d = _DEFAULTS.get(args.command, {})
    ns = args.n if args.n is not None else d.get("ns", [])
    ks = args.k if args.k is not None else d.get("ks", [])
    return RunConfig(args.command, ns, ks, args.l or [1], args.c or [],
                     args.budget_ms / 1000.0, args.out, args.format)


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        cfg = config_from_args(args)
        if args.command == "table":
            return cmd_table(cfg, out)
        if args.command == "verify":
            return cmd_verify(args.suite, cfg, out)
        if args.command == "construct":
            return cmd_construct(args.name, args.n_pos, args.k_pos, cfg, out)
        if args.command == "search":
            return cmd_search(cfg, out)
        if args.n is None and args.k is None:
            pairs = list(CIRCLE_CASES)
        else:
            pairs = [(n, k) for n in cfg.ns for k in cfg.ks]
        return cmd_circle(pairs, cfg, out)
    except (ParameterError, SizeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
