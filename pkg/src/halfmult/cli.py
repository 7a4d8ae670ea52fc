"""Single entry point exposing every module as a subcommand.

All reports echo the full parameter set (including seeds) plus a
reproduction command line; numeric payloads are byte-identical across
reruns. --json swaps the human table for one JSON object with stable keys.
Exit codes: 0 success/valid, 1 domain error or invalid result, 2 usage or
format/IO error.
"""

from __future__ import annotations

import argparse
import json
import os
import shlex
import sys
import time
from fractions import Fraction

from . import __version__
from .bounds import KnownRamseyTable, n_recursion, optimize_p, random_exponent, standard_report
from .coloring import (
    certificate_from_text,
    construct_coloring,
    ConstructionFailure,
    verify_certificate,
)
from .errors import BudgetError, CertificateFormatError, RamseyTableError
from .f2 import build_cf_graph, count_isotropic_subspaces
from .graphs import (
    find_clique,
    from_graph6,
    sample_er_graph,
    to_graph6,
    write_graph6_file,
)
from .prob import exact_independence_prob, mc_independence_prob
from .search import known_exact_value, min_independence_prob

_FMT = "{:.10g}"


def _fmt(x) -> str:
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator} ({_FMT.format(float(x))})"
    if isinstance(x, float):
        return _FMT.format(x)
    return str(x)


def _jsonable(x):
    if isinstance(x, Fraction):
        return {"num": str(x.numerator), "den": str(x.denominator), "decimal": float(x)}
    if isinstance(x, tuple):
        return list(x)
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    return x


def _emit(args, payload: dict) -> None:
    """Render one report: JSON object or human table with a repro line."""
    repro = "halfmult " + shlex.join(args._argv)
    if args.json:
        payload = {"command": repro, **{k: _jsonable(v) for k, v in payload.items()}}
        print(json.dumps(payload, indent=2, default=str))
        return
    print(f"# generated: {time.strftime('%Y-%m-%dT%H:%M:%S')}")
    print(f"# reproduce: {repro}")
    for key, value in payload.items():
        if isinstance(value, list):
            print(f"{key}:")
            for item in value:
                print(f"  {item if not isinstance(item, dict) else json.dumps(_jsonable(item))}")
        elif isinstance(value, dict):
            print(f"{key}: {json.dumps(_jsonable(value))}")
        else:
            print(f"{key}: {_fmt(value)}")


def _load_graph(spec: str):
    if spec.startswith("cf:"):
        return build_cf_graph(int(spec[3:])), spec
    try:
        with open(spec, encoding="ascii") as fh:
            text = fh.read().strip().splitlines()[0]
    except OSError as exc:
        raise CertificateFormatError(f"cannot read graph file {spec}: {exc}") from None
    return from_graph6(text), text


def _ramsey_table(path: str | None) -> KnownRamseyTable:
    table = KnownRamseyTable.bundled()
    if path:
        table.load_tsv(path)
    return table


def _parse_prob(text: str):
    if "/" in text:
        num, _, den = text.partition("/")
        return Fraction(int(num), int(den))
    return float(text)


def _cmd_cf(args) -> int:
    g = build_cf_graph(args.t)
    payload = {
        "t": args.t,
        "vertices": g.n,
        "edges": g.edge_count,
    }
    if args.count_isotropic is not None:
        payload["isotropic_dimension"] = args.count_isotropic
        payload["isotropic_count"] = count_isotropic_subspaces(args.t, args.count_isotropic)
    if args.out:
        write_graph6_file(args.out, [g])
        payload["out"] = args.out
    _emit(args, payload)
    return 0


def _cmd_graph_sample(args) -> int:
    g = sample_er_graph(args.n, args.p, args.seed)
    payload = {
        "n": args.n,
        "p": args.p,
        "seed": args.seed,
        "edges": g.edge_count,
        "graph6": to_graph6(g),
    }
    if args.out:
        write_graph6_file(args.out, [g])
        payload["out"] = args.out
    _emit(args, payload)
    return 0


def _cmd_graph_clique(args) -> int:
    g, label = _load_graph(args.infile)
    witness = find_clique(g, args.t)
    payload = {
        "graph": label,
        "n": g.n,
        "t": args.t,
        "has_clique": witness is not None,
    }
    if witness is not None:
        payload["witness"] = list(witness)
    _emit(args, payload)
    return 0


def _cmd_exact(args) -> int:
    g, label = _load_graph(args.infile)
    p = exact_independence_prob(g, args.s)
    _emit(args, {"graph": label, "n": g.n, "s": args.s, "probability": p, "units": "probability"})
    return 0


def _cmd_estimate(args) -> int:
    g, label = _load_graph(args.infile)
    est = mc_independence_prob(g, args.s, args.trials, args.seed)
    _emit(
        args,
        {
            "graph": label,
            "n": g.n,
            "s": args.s,
            "trials": est.trials,
            "seed": est.seed,
            "estimate": est.estimate,
            "std_error": est.std_error,
            "units": "probability",
        },
    )
    return 0


def _cmd_bounds(args) -> int:
    table = _ramsey_table(args.ramsey_table)
    p_value = _parse_prob(args.p_value) if args.p_value else None
    reports = standard_report(args.s, args.t, ell=args.ell, table=table, p_value=p_value)
    rows = [
        {
            "name": r.name,
            "parameters": r.parameters,
            "value": _jsonable(r.value) if isinstance(r.value, Fraction) else r.value,
            "rendered": r.render_value(),
            "units": r.units,
            "provenance": r.provenance,
        }
        for r in reports
    ]
    _emit(args, {"s": args.s, "t": args.t, "bounds": rows})
    return 0


def _cmd_optimize_p(args) -> int:
    if args.s_equals_t:
        s = t = 1  # the normalized rate at s=t is independent of t
    else:
        if args.s is None or args.t is None:
            raise ValueError("provide --s and --t, or --s-equals-t")
        s, t = args.s, args.t
    p_star, value = optimize_p(s, t, args.tol)
    payload = {
        "s": s,
        "t": t,
        "tol": args.tol,
        "p_star": p_star,
        "value": value,
        "value_per_t2": value / (t * t),
        "value_at_half_per_t2": random_exponent(0.5, s, t) / (t * t),
        "units": "natural-log exponent (per_t2 fields divide by t^2)",
    }
    _emit(args, payload)
    return 0


def _cmd_nrec(args) -> int:
    value = n_recursion(args.s, args.t, args.tol)
    _emit(
        args,
        {"s": args.s, "t": args.t, "tol": args.tol, "value": value, "units": "probability"},
    )
    return 0


def _cmd_color(args) -> int:
    g, label = _load_graph(args.graph)
    result = construct_coloring(
        g, args.ell, args.t, args.n, args.seed, args.attempts, base_label=label
    )
    if isinstance(result, ConstructionFailure):
        _emit(
            args,
            {
                "status": "failure",
                "n": args.n,
                "ell": args.ell,
                "t": args.t,
                "seed": args.seed,
                "attempts": result.attempts,
                "violations_by_color": result.by_color,
            },
        )
        return 1
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(result.to_text())
    _emit(
        args,
        {
            "status": "success",
            "n": result.n,
            "ell": result.ell,
            "t": result.t,
            "seed": result.seed,
            "attempts_used": result.attempts_used,
            "base_graph": result.base_graph,
            "out": args.out or "(not written)",
        },
    )
    return 0


def _cmd_verify(args) -> int:
    try:
        with open(args.certificate, encoding="ascii") as fh:
            text = fh.read()
    except OSError as exc:
        raise CertificateFormatError(f"cannot read certificate: {exc}") from None
    cert = certificate_from_text(text)
    result = verify_certificate(cert)
    payload = {
        "certificate": args.certificate,
        "n": cert.n,
        "ell": cert.ell,
        "t": cert.t,
        "valid": result.valid,
    }
    if not result.valid:
        payload["violating_color"] = result.violating_color
        payload["witness"] = list(result.witness)
    _emit(args, payload)
    return 0 if result.valid else 1


def _cmd_search(args) -> int:
    result = min_independence_prob(args.s, args.t, args.max_n, dedup_iso=args.dedup_iso)
    payload = {
        "s": args.s,
        "t": args.t,
        "n_max": args.max_n,
        "scope": f"restricted to n <= {args.max_n} (labeled enumeration)",
        "min_prob": result.min_prob,
        "graphs_scanned": result.graphs_scanned,
        "witnesses": list(result.witnesses),
    }
    proven = known_exact_value(args.s, args.t)
    if proven is not None and proven == result.min_prob:
        payload["note"] = "restricted minimum equals the proven infimum: this value is exact"
    if args.witness_out:
        with open(args.witness_out, "w", encoding="ascii") as fh:
            for g6 in result.witnesses:
                fh.write(g6 + "\n")
        payload["witness_out"] = args.witness_out
    _emit(args, payload)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="halfmult",
        description="Half-multiplicity Ramsey toolkit: probabilities, bounds, and colorings.",
    )
    parser.add_argument("--version", action="version", version=f"halfmult {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument(
        "--threads",
        type=int,
        default=int(os.environ.get("RAMSEY_THREADS", "1")),
        help="cap on internal parallelism (results never depend on it)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cf", parents=[common], help="build the symplectic graph")
    p.add_argument("--t", type=int, required=True, help="even clique bound; 2^(t-2) vertices")
    p.add_argument("--count-isotropic", type=int, default=None, metavar="K")
    p.add_argument("--out", help="write the graph as graph6")
    p.set_defaults(func=_cmd_cf)

    p = sub.add_parser("graph", help="sample or query graphs")
    gsub = p.add_subparsers(dest="graph_command", required=True)
    ps = gsub.add_parser("sample", parents=[common], help="seeded Erdos-Renyi sample")
    ps.add_argument("--n", type=int, required=True)
    ps.add_argument("--p", type=float, required=True)
    ps.add_argument("--seed", type=int, required=True)
    ps.add_argument("--out")
    ps.set_defaults(func=_cmd_graph_sample)
    pc = gsub.add_parser("clique", parents=[common], help="clique search")
    pc.add_argument("--in", dest="infile", required=True, metavar="FILE")
    pc.add_argument("--t", type=int, required=True)
    pc.set_defaults(func=_cmd_graph_clique)

    p = sub.add_parser("exact", parents=[common], help="exact independence probability")
    p.add_argument("--in", dest="infile", required=True, metavar="FILE")
    p.add_argument("--s", type=int, required=True)
    p.set_defaults(func=_cmd_exact)

    p = sub.add_parser("estimate", parents=[common], help="Monte Carlo estimate")
    p.add_argument("--in", dest="infile", required=True, metavar="FILE")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.set_defaults(func=_cmd_estimate)

    p = sub.add_parser("bounds", parents=[common], help="bound battery for one (s,t)")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--ell", type=int, default=None)
    p.add_argument("--ramsey-table", metavar="TSV")
    p.add_argument("--p-value", metavar="NUM/DEN|FLOAT", help="upper bound on P(t,t) for the multicolor bound")
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("optimize-p", parents=[common], help="minimize the random exponent")
    p.add_argument("--s", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--s-equals-t", action="store_true", help="normalized diagonal rate")
    p.add_argument("--tol", type=float, default=1e-7)
    p.set_defaults(func=_cmd_optimize_p)

    p = sub.add_parser("nrec", parents=[common], help="neighborhood recursion N(s,t)")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--tol", type=float, default=1e-12)
    p.set_defaults(func=_cmd_nrec)

    p = sub.add_parser("color", parents=[common], help="construct a coloring certificate")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--graph", required=True, metavar="FILE.g6|cf:T")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--attempts", type=int, default=1000)
    p.add_argument("--out", metavar="CERT.txt")
    p.set_defaults(func=_cmd_color)

    p = sub.add_parser("verify", parents=[common], help="verify a coloring certificate")
    p.add_argument("certificate", metavar="CERT.txt")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("search", parents=[common], help="restricted minimum over K_t-free graphs")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--dedup-iso", action="store_true")
    p.add_argument("--witness-out", metavar="FILE.g6")
    p.set_defaults(func=_cmd_search)

    return parser


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    args._argv = argv
    try:
        return args.func(args)
    except CertificateFormatError as exc:
        print(f"format error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, BudgetError, RamseyTableError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
