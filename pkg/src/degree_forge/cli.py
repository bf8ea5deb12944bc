"""Command-line interface tying all modules into one executable.

Exit codes: 0 on success/pass, 1 on verification failure, 2 on usage or
parameter errors.  JSON output is canonical: sorted keys, integers and
strings only (exact rationals are rendered as "p/q" strings).
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import os
import re
import sys

from . import bounds as bounds_mod
from . import constructions, core, search, shadows, transforms, transversal
from .core import Family, ParameterError, PreconditionError

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def _default_workers() -> int:
    try:
        return max(1, int(os.environ.get("DEGREE_FORGE_WORKERS", "1")))
    except ValueError:
        return 1


def _read_family(path: str | None) -> Family:
    text = sys.stdin.read() if path in (None, "-") else open(path).read()
    return core.parse_family(text)


def _write_text(text: str, path: str | None) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _jsonable(obj):
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {f.name: _jsonable(getattr(obj, f.name))
                for f in dataclasses.fields(obj)}
    if isinstance(obj, Family):
        return core.format_family(obj)
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, float):
        # wall-time only; keep reports float-free
        return f"{obj:.3f}s"
    return obj


def emit_report(report, fmt: str = "json", out: str | None = None) -> None:
    data = _jsonable(report)
    if fmt == "json":
        _write_text(json.dumps(data, sort_keys=True, indent=2) + "\n", out)
    elif fmt == "csv":
        rows = _flatten_csv(data)
        _write_text("\n".join(",".join(str(c) for c in row) for row in rows) + "\n", out)
    else:
        _write_text(_render_text(data) + "\n", out)


def _flatten_csv(data, prefix=""):
    rows = []
    if isinstance(data, dict):
        for key in sorted(data):
            rows.extend(_flatten_csv(data[key], f"{prefix}{key}."))
    elif isinstance(data, list):
        for i, v in enumerate(data):
            rows.extend(_flatten_csv(v, f"{prefix}{i}."))
    else:
        value = str(data).replace("\n", ";")
        rows.append((prefix.rstrip("."), value))
    return rows


def _render_text(data, indent=0):
    pad = "  " * indent
    if isinstance(data, dict):
        lines = []
        for key in sorted(data):
            value = data[key]
            if isinstance(value, (dict, list)):
                lines.append(f"{pad}{key}:")
                lines.append(_render_text(value, indent + 1))
            else:
                lines.append(f"{pad}{key}: {value}")
        return "\n".join(lines)
    if isinstance(data, list):
        return "\n".join(_render_text(v, indent) for v in data)
    return f"{pad}{data}"


_RANGE_RE = re.compile(r"^([a-z]+)=(.+)\.\.(.+)$")
_EXPR_OK = re.compile(r"^[0-9a-z+\-*() ]+$")


def parse_grid(spec: str) -> dict:
    """Parse 'k=3..12,n=6k-9..6k+30'; bounds may be affine in earlier axes."""
    grid: dict = {}

    def compile_expr(expr: str):
        expr = expr.strip()
        if not _EXPR_OK.match(expr):
            raise ParameterError(f"bad grid expression {expr!r}")
        if re.fullmatch(r"-?\d+", expr):
            return int(expr)
        py = re.sub(r"(\d)([a-z])", r"\1*\2", expr)

        def ev(env, _py=py):
            return int(eval(_py, {"__builtins__": {}}, dict(env)))
        return ev

    for part in spec.split(","):
        m = _RANGE_RE.match(part.strip())
        if not m:
            raise ParameterError(f"bad grid component {part!r}; expected var=lo..hi")
        grid[m.group(1)] = (compile_expr(m.group(2)), compile_expr(m.group(3)))
    return grid


DEFAULT_GRIDS = {
    "I41": "k=3..12,n=6k-9..6k+30",
    "I47": "k=3..12,n=2k+1..6k-10",
    # n floor tracks the hypothesis n >= C(t+2,2) k^2
    "I53": {"t": (1, 3),
            "r": (lambda e: e["t"] + 2, lambda e: e["t"] + 4),
            "k": (lambda e: e["t"] + 1, 6),
            "n": (lambda e: (e["t"] + 1) * (e["t"] + 2) // 2 * e["k"] ** 2,
                  lambda e: (e["t"] + 1) * (e["t"] + 2) // 2 * e["k"] ** 2 + 4)},
    "LvsH4": "k=4..14,n=2k+1..3k-3",
    "LvsH5": "k=4..14,n=2k+1..4k-5",
}


def cmd_construct(args) -> int:
    spec = constructions.ConstructionSpec(args.kind, args.n, args.k, args.param)
    fam = constructions.build(spec)
    _write_text(core.format_family(fam), args.out)
    return EXIT_OK


def cmd_degrees(args) -> int:
    fam = _read_family(args.infile)
    ds = core.degree_sequence(fam)
    if args.format == "text":
        _write_text("(" + ",".join(str(d) for d in ds.sorted) + ")\n", args.out)
    else:
        emit_report({"per_vertex": ds.per_vertex, "sorted": list(ds.sorted),
                     "permutation": list(ds.permutation)}, args.format, args.out)
    return EXIT_OK


def cmd_shift(args) -> int:
    fam = _read_family(args.infile)
    _write_text(core.format_family(transforms.make_shifted(fam)), args.out)
    return EXIT_OK


def cmd_saturate(args) -> int:
    fam = _read_family(args.infile)
    result = transforms.saturate(fam, args.t, args.mode)
    _write_text(core.format_family(result), args.out)
    return EXIT_OK


def cmd_transversal(args) -> int:
    fam = _read_family(args.infile)
    rep = transversal.transversal_report(fam, args.t)
    lemmas = transversal.check_basis_lemmas(fam, args.t)
    payload = {
        "t": rep.t,
        "tau": rep.tau,
        "basis": [",".join(map(str, core.elements(b))) for b in rep.basis],
        "transversal_count": len(rep.transversals),
        "lemma31": lemmas.lemma31 if lemmas.lemma31 is not None else "n/a",
        "lemma32": lemmas.lemma32 if lemmas.lemma32 is not None else "n/a",
        "claim54": lemmas.claim54 if lemmas.claim54 is not None else "n/a",
    }
    emit_report(payload, args.format, args.out)
    return EXIT_OK


def cmd_shadow(args) -> int:
    fam = _read_family(args.infile)
    _write_text(core.format_family(shadows.shadow(fam, args.ell)), args.out)
    return EXIT_OK


def cmd_crosscheck(args) -> int:
    pair = shadows.CrossPair(_read_family(args.a), _read_family(args.b))
    rep = shadows.cross_check(pair)
    ineq = shadows.cross_inequalities(pair, d=args.d, r=args.r)
    emit_report({"cross_check": rep, "inequalities": ineq}, args.format, args.out)
    return EXIT_OK


def cmd_bounds(args) -> int:
    spec = bounds_mod.BoundSpec(args.id, args.n, args.k, t=args.t,
                                ell=args.ell, tau=args.tau)
    res = bounds_mod.evaluate(spec)
    emit_report(res, args.format, args.out)
    return EXIT_OK


def cmd_sweep(args) -> int:
    grid_spec = args.grid if args.grid is not None else DEFAULT_GRIDS[args.id]
    grid = parse_grid(grid_spec) if isinstance(grid_spec, str) else grid_spec
    rep = bounds_mod.inequality_sweep(args.id, grid)
    emit_report(rep, args.format, args.out)
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_search(args) -> int:
    rep = search.max_degree_profile(args.n, args.k, args.t,
                                    restrict=args.restrict,
                                    workers=args.workers,
                                    count_classes=args.classes)
    payload = {
        "n": rep.n, "k": rep.k, "t": rep.t, "restrict": rep.restrict,
        "per_index_max": {str(i): rep.per_index_max[i]
                          for i in sorted(rep.per_index_max)},
        "witnesses": {str(i): core.format_family(rep.witnesses[i])
                      for i in sorted(rep.witnesses)},
        "families_enumerated": rep.families_enumerated,
        "isomorphism_classes": rep.isomorphism_classes,
        "exhaustive": rep.exhaustive,
    }
    emit_report(payload, args.format, args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    rep = search.verify_theorem(args.id, args.n, args.k, t=args.t,
                                ell=args.ell, workers=args.workers)
    emit_report(rep, args.format, args.out)
    return EXIT_OK if rep.verdict in ("pass", "inapplicable") else EXIT_FAIL


def cmd_probe(args) -> int:
    rep = search.conjecture_probe(args.id, args.n, args.k, t=args.t,
                                  workers=args.workers)
    emit_report(rep, args.format, args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="degree-forge",
        description="Exact verification of degree bounds for intersecting "
                    "k-uniform set families.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, workers=False):
        p.add_argument("--out", default=None, help="output path (default stdout)")
        p.add_argument("--format", default="json", choices=("json", "csv", "text"))
        if workers:
            p.add_argument("--workers", type=int, default=_default_workers())

    p = sub.add_parser("construct", help="build a named family")
    p.add_argument("--kind", required=True, choices=constructions.KINDS)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--param", type=int, default=0)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("degrees", help="degree sequence of a family")
    p.add_argument("--in", dest="infile", default=None)
    add_common(p)
    p.set_defaults(func=cmd_degrees, format="text")

    p = sub.add_parser("shift", help="shift a family to its canonical shifted form")
    p.add_argument("--in", dest="infile", default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_shift)

    p = sub.add_parser("saturate", help="deterministic t-intersecting saturation")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--mode", default="lex_greedy", choices=transforms.SATURATION_MODES)
    p.add_argument("--in", dest="infile", default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_saturate)

    p = sub.add_parser("transversal", help="t-transversals, basis, tau, lemma checks")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--in", dest="infile", default=None)
    add_common(p)
    p.set_defaults(func=cmd_transversal)

    p = sub.add_parser("shadow", help="ell-th shadow of a family")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--in", dest="infile", default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_shadow)

    p = sub.add_parser("crosscheck", help="cross-intersecting pair checks")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--d", type=int, default=None)
    p.add_argument("--r", type=int, default=None)
    add_common(p)
    p.set_defaults(func=cmd_crosscheck)

    p = sub.add_parser("bounds", help="evaluate a theorem bound")
    p.add_argument("--id", required=True, choices=bounds_mod.BOUND_IDS)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--t", type=int, default=None)
    p.add_argument("--ell", type=int, default=None)
    p.add_argument("--tau", type=int, default=None)
    add_common(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("sweep", help="exact inequality sweep over a grid")
    p.add_argument("--id", required=True, choices=bounds_mod.SWEEP_IDS)
    p.add_argument("--grid", default=None,
                   help="e.g. 'k=3..12,n=6k-9..6k+30' (affine in earlier axes)")
    add_common(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("search", help="enumerate maximal families, extract degree maxima")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--t", type=int, default=1)
    p.add_argument("--restrict", default="all", choices=("all", "shifted"))
    p.add_argument("--classes", action="store_true",
                   help="count isomorphism classes (factorial cost)")
    add_common(p, workers=True)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify", help="verify a theorem by exhaustive search")
    p.add_argument("--id", required=True, choices=bounds_mod.BOUND_IDS)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--t", type=int, default=None)
    p.add_argument("--ell", type=int, default=None)
    add_common(p, workers=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("probe", help="conjecture evidence probe (report only)")
    p.add_argument("--id", required=True, choices=("C71", "C72"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--t", type=int, default=None)
    add_common(p, workers=True)
    p.set_defaults(func=cmd_probe)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except (ParameterError, PreconditionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
