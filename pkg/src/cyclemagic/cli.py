"""Command-line interface: generate, verify, search, sweep, export.

Exit codes: 0 valid, 1 verification failure, 2 usage/parameter/parse
error, 3 internal regression (a constructive labeler failed its own check).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .certificate import CUSTOM, Certificate, emit, parse, to_dot
from .errors import CycleMagicError, DomainMismatch, NoCovering, ParameterOutOfRange
from .families import PARAM_NAMES, Family, FamilySpec
from .graph import Graph, build_graph, complete_graph, covering_cycles, enumerate_cycles
from .labelers import label, label_fan_union, label_fans, label_wheels
from .search import SearchConfig, default_node_budget, find_labelings
from .verify import COVERING, STRICT, constant_corrections, predicted_constant, printed_constant, verify

EXIT_OK, EXIT_INVALID, EXIT_USAGE, EXIT_REGRESSION = 0, 1, 2, 3

PARAMS = ("m", "n", "s", "k", "l")
_PRINTED = {
    Family.FANS: lambda s: label_fans(s.m, s.n, printed=True),
    Family.WHEELS: lambda s: label_wheels(s.m, s.n, printed=True),
    Family.FAN_UNION: lambda s: label_fan_union(s.s, s.k, s.n, printed=True),
}


def _err(msg: str) -> None:
    print(f"error: {msg}", file=sys.stderr)


def _write(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _spec_from_args(args) -> FamilySpec:
    family = Family.parse(args.family)
    params = {}
    for name in PARAM_NAMES[family]:
        value = getattr(args, name)
        if value is None:
            raise ParameterOutOfRange(name, None, f"--{name} is required for {family.value}")
        params[name] = value
    stray = [name for name in PARAMS if name not in params and getattr(args, name) is not None]
    if stray:
        raise ParameterOutOfRange(stray[0], getattr(args, stray[0]), f"not a parameter of {family.value}")
    return FamilySpec.of(family, **params)


def _add_family_args(p: argparse.ArgumentParser, required: bool = True) -> None:
    p.add_argument("--family", required=required, help=", ".join(f.value for f in Family))
    for name in PARAMS:
        p.add_argument(f"--{name}", type=int)


# ------------------------------------------------------------------ generate

def certify(spec: FamilySpec, printed: bool = False) -> tuple[Certificate, str]:
    """Label ``spec``, verify it in covering mode and wrap the result."""
    if printed:
        spec.require_labeling_range()
        if spec.family not in _PRINTED:
            raise ParameterOutOfRange("family", spec.family.value,
                                      f"--printed applies to {sorted(f.value for f in _PRINTED)}")
        lab = _PRINTED[spec.family](spec)
    else:
        lab = label(spec)
    g = build_graph(spec)
    report = verify(g, lab, spec.cycle_length, COVERING, covering_cycles(spec))
    corrections = set(lab.corrections)
    if not printed:
        corrections.update(constant_corrections(spec))
    cert = Certificate.from_labeling(spec, lab, cycle_length=spec.cycle_length, mode=COVERING,
                                     magic_constant=report.magic_constant, valid=report.valid,
                                     corrections=corrections)
    return cert, report.summary()


def cmd_generate(args) -> int:
    try:
        spec = _spec_from_args(args)
        cert, summary = certify(spec, printed=args.printed)
    except ParameterOutOfRange as exc:
        _err(f"{exc.param}={exc.value} rejected; allowed: {exc.allowed}")
        return EXIT_USAGE
    except ValueError as exc:
        _err(str(exc))
        return EXIT_USAGE
    _write(emit(cert), args.out)
    print(summary, file=sys.stderr)
    if cert.valid:
        return EXIT_OK
    return EXIT_INVALID if args.printed else EXIT_REGRESSION


# -------------------------------------------------------------------- verify

def verify_certificate(cert: Certificate, mode: str):
    g = cert.graph()
    lab = cert.labeling()
    spec = cert.spec
    if spec is not None:
        designated = covering_cycles(spec)
    else:
        # custom graphs have no designated family: every cycle is designated
        designated = enumerate_cycles(g, cert.cycle_length)
    if mode == COVERING:
        return verify(g, lab, cert.cycle_length, COVERING, designated)
    return verify(g, lab, cert.cycle_length, STRICT, designated)


def cmd_verify(args) -> int:
    try:
        cert = parse(Path(args.certificate).read_text(encoding="utf-8"))
        report = verify_certificate(cert, args.mode)
    except (OSError, json.JSONDecodeError, KeyError, TypeError, ValueError, CycleMagicError) as exc:
        kind = "domain mismatch" if isinstance(exc, DomainMismatch) else "cannot read certificate"
        _err(f"{kind}: {exc}")
        return EXIT_USAGE
    print(report.summary())
    return EXIT_OK if report.valid else EXIT_INVALID


# -------------------------------------------------------------------- search

def read_edge_list(text: str) -> Graph:
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'u v', got {raw!r}")
        if parts[0] == parts[1]:
            raise ValueError(f"line {lineno}: self-loop on {parts[0]!r}")
        edges.append((parts[0], parts[1]))
    if not edges:
        raise ValueError("edge list is empty")
    return Graph.from_edges(edges)


def cmd_search(args) -> int:
    try:
        if args.k3:
            spec, g = None, complete_graph(3)
        elif args.edge_list:
            spec, g = None, read_edge_list(Path(args.edge_list).read_text(encoding="utf-8"))
        elif args.family:
            spec = _spec_from_args(args)
            g = build_graph(spec)
        else:
            _err("one of --family, --k3, --edge-list is required")
            return EXIT_USAGE
        length = args.cycle if args.cycle is not None else (spec.cycle_length if spec else 3)
        cfg = SearchConfig(
            cycle_length=length,
            limit=args.limit,
            node_budget=args.budget if args.budget is not None else default_node_budget(),
            target_constant=args.target,
            seed=args.seed,
            super_only=not args.magic,
            break_symmetry=args.symmetry,
        )
        outcome = find_labelings(g, cfg)
    except NoCovering as exc:
        _err(f"NoCovering: {exc}")
        return EXIT_USAGE
    except ParameterOutOfRange as exc:
        _err(f"{exc.param}={exc.value} rejected; allowed: {exc.allowed}")
        return EXIT_USAGE
    except (OSError, ValueError, CycleMagicError) as exc:
        _err(str(exc))
        return EXIT_USAGE

    if args.out_dir:
        out = Path(args.out_dir)
        out.mkdir(parents=True, exist_ok=True)
        for t, lab in enumerate(outcome.labelings, 1):
            report = verify(g, lab, length, STRICT)
            cert = Certificate.from_labeling(spec, lab, cycle_length=length, mode=STRICT,
                                             magic_constant=report.magic_constant, valid=report.valid,
                                             graph=g)
            (out / f"solution-{t:04d}.json").write_text(emit(cert), encoding="utf-8")
    print(f"solutions = {len(outcome.labelings)}")
    print(f"constants_seen = {sorted(outcome.constants_seen)}")
    print(f"exhausted = {str(outcome.exhausted).lower()}")
    print(f"nodes = {outcome.nodes_used}")
    return EXIT_OK


# --------------------------------------------------------------------- sweep

SWEEP_COLUMNS = ("family", "m", "n", "s", "k", "l", "v", "e", "c_predicted", "c_verified", "match", "c_printed")


def parse_range(text: str | None) -> list[int] | None:
    """``"3"``, ``"2:5"`` (inclusive) or ``"2,4,7"``; an inverted range is empty."""
    if text is None:
        return None
    text = text.strip()
    if ":" in text:
        lo, hi = text.split(":", 1)
        return list(range(int(lo), int(hi) + 1))
    if not text:
        return []
    return [int(x) for x in text.split(",")]


def sweep_row(spec: FamilySpec) -> dict:
    row = dict.fromkeys(SWEEP_COLUMNS)
    row["family"] = spec.family.value
    row.update(spec.params)
    row["v"], row["e"] = spec.order, spec.size
    row["c_predicted"] = predicted_constant(spec)
    printed = printed_constant(spec)
    row["c_printed"] = int(printed) if printed.denominator == 1 else str(printed)
    try:
        cert, _ = certify(spec)
        row["c_verified"] = cert.magic_constant if cert.valid else None
    except CycleMagicError:
        row["c_verified"] = None
    row["match"] = row["c_verified"] == row["c_predicted"]
    return row


def sweep_grid(family: Family, ranges: dict[str, list[int]]) -> list[FamilySpec]:
    names = PARAM_NAMES[family]
    specs = []

    def rec(i, acc):
        if i == len(names):
            specs.append(FamilySpec.of(family, **acc))
            return
        for value in ranges[names[i]]:
            rec(i + 1, {**acc, names[i]: value})

    rec(0, {})
    return specs


def format_rows(rows: list[dict], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rows, indent=1, sort_keys=True) + "\n"
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=SWEEP_COLUMNS, lineterminator="\n")
    w.writeheader()
    for row in rows:
        w.writerow({k: ("" if v is None else str(v).lower() if isinstance(v, bool) else v) for k, v in row.items()})
    return buf.getvalue()


def cmd_sweep(args) -> int:
    try:
        family = Family.parse(args.family)
        ranges = {}
        for name in PARAM_NAMES[family]:
            values = parse_range(getattr(args, name))
            if values is None:
                raise ParameterOutOfRange(name, None, f"--{name} range is required for {family.value}")
            ranges[name] = values
        specs = sweep_grid(family, ranges)
        for spec in specs:
            spec.require_labeling_range()
    except ParameterOutOfRange as exc:
        _err(f"{exc.param}={exc.value} rejected; allowed: {exc.allowed}")
        return EXIT_USAGE
    except ValueError as exc:
        _err(str(exc))
        return EXIT_USAGE

    if args.jobs > 1 and len(specs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(sweep_row, specs))
    else:
        rows = [sweep_row(s) for s in specs]
    _write(format_rows(rows, args.format), args.out)
    return EXIT_OK if all(r["match"] for r in rows) else EXIT_INVALID


# -------------------------------------------------------------------- export

def cmd_export(args) -> int:
    try:
        spec = _spec_from_args(args)
        g = build_graph(spec)
        lab = label(spec) if args.labels else None
    except ParameterOutOfRange as exc:
        _err(f"{exc.param}={exc.value} rejected; allowed: {exc.allowed}")
        return EXIT_USAGE
    except ValueError as exc:
        _err(str(exc))
        return EXIT_USAGE
    _write(to_dot(g, lab, name=str(spec)), args.out)
    return EXIT_OK


# ---------------------------------------------------------------------- main

def build_parser() -> argparse.ArgumentParser:
    from . import __version__

    parser = argparse.ArgumentParser(prog="cyclemagic", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="label a family instance and write a certificate")
    _add_family_args(p)
    p.add_argument("--printed", action="store_true",
                   help="use the uncorrected published formulas (fans, wheels, fan-union)")
    p.add_argument("--out", help="certificate path (default: stdout)")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify", help="re-verify a certificate")
    p.add_argument("certificate")
    p.add_argument("--mode", choices=(COVERING, STRICT), default=COVERING)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="exhaustive search for supermagic labelings")
    _add_family_args(p, required=False)
    p.add_argument("--k3", action="store_true", help="search the triangle K3")
    p.add_argument("--edge-list", help="file with one 'u v' pair per line")
    p.add_argument("--cycle", type=int, choices=(3, 4))
    p.add_argument("--limit", type=int)
    p.add_argument("--budget", type=int, help="node budget (default from CYCLEMAGIC_NODE_BUDGET)")
    p.add_argument("--target", type=int, help="only accept this magic constant")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--magic", action="store_true", help="drop the super restriction on vertex labels")
    p.add_argument("--symmetry", action="store_true", help="keep one solution per automorphism orbit")
    p.add_argument("--out-dir", help="write each solution as a certificate here")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("sweep", help="tabulate predicted vs verified constants over a grid")
    p.add_argument("--family", required=True)
    for name in PARAMS:
        p.add_argument(f"--{name}", help="value, a:b (inclusive) or a,b,c")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("export", help="write a family graph as DOT")
    _add_family_args(p)
    p.add_argument("--format", choices=("dot",), default="dot")
    p.add_argument("--labels", action="store_true", help="attach the constructive labels")
    p.add_argument("--out")
    p.set_defaults(func=cmd_export)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    return args.func(args)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
