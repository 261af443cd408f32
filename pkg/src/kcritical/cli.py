"""Command-line front end: ``kcritical {params,construct,verify,solve,conjecture,selftest}``.

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from . import io
from .construct import construct_conjecture, construct_g1, construct_g2, construct_g2_step, construct_negative
from .errors import BudgetExceeded, KCriticalError
from .params import ENUMERATORS, enumerate_from_cd, enumerate_from_xy, derive_params
from .search import conjecture_scan, solve_biregular, solve_exhaustive
from .verify import DELETION_BUDGET, is_k_critical_deficiency, is_k_critical_deletion, is_k_critical_tilde

PARAM_FIELDS = ("n", "m", "k", "a", "b", "c", "d", "x", "y", "p")


class UsageError(Exception):
    pass


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _table(rows: list[dict]) -> str:
    cols = list(PARAM_FIELDS) + ["mult"]
    width = {c: max(len(c), *(len(str(r[c])) for r in rows)) for c in cols} if rows else {c: len(c) for c in cols}
    lines = ["  ".join(c.rjust(width[c]) for c in cols)]
    lines += ["  ".join(str(r[c]).rjust(width[c]) for c in cols) for r in rows]
    return "\n".join(lines) + "\n"


def cmd_params(args: argparse.Namespace) -> int:
    values = args.values
    if args.source in ("xy", "cd"):
        if len(values) != 2:
            raise UsageError(f"--from {args.source} takes exactly two values")
        fn = enumerate_from_xy if args.source == "xy" else enumerate_from_cd
        found = fn(values[0], values[1], args.l_max)
        mult = {P.key: 1 for P in found}
    else:
        found, mult = [], {}
        for v in values:
            raw = ENUMERATORS[args.source](v, dedup=False)
            for P in raw:
                if P.key not in mult:
                    found.append(P)
                    mult[P.key] = 0
                mult[P.key] += 1
        found.sort()
    rows = [dict(P.as_dict(), mult=mult[P.key]) for P in found]
    if args.json:
        sys.stdout.write(io.dumps({"from": args.source, "values": values, "params": rows}))
    else:
        sys.stdout.write(_table(rows))
    return 0


def cmd_construct(args: argparse.Namespace) -> int:
    kind = args.kind
    if kind == "conjecture":
        G = construct_conjecture(args.n, args.m)
    else:
        P = derive_params(args.n, args.m)
        if kind == "g1":
            G = construct_g1(P)
        elif kind == "g2":
            G = construct_g2(P)
        elif kind == "g2-step":
            if args.s is None:
                raise UsageError("--kind g2-step needs --s")
            G = construct_g2_step(P, args.s, unchecked=args.unchecked)
            if args.unchecked and P.x % args.s:
                print(f"warning: s={args.s} does not divide x={P.x}; graph is unverified", file=sys.stderr)
        else:
            G = construct_negative(P)
    if args.format == "edges":
        text = io.write_edges(G)
    elif args.format == "dot":
        text = io.to_dot(G)
    else:
        text = io.dumps({"kind": kind, "graph": io.graph_to_json(G)})
    _emit(text, args.out)
    return 0


def _verify_methods(method: str) -> list[str]:
    return ["deficiency", "deletion", "tilde"] if method == "all" else [method]


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        G = io.read_edges(Path(args.input).read_text(encoding="utf-8"))
    except OSError as exc:
        raise UsageError(str(exc)) from None
    except io.FormatError as exc:
        raise UsageError(f"bad edge list: {exc}") from None
    runners = {
        "deficiency": is_k_critical_deficiency,
        "deletion": lambda g: is_k_critical_deletion(g, budget=args.budget),
        "tilde": is_k_critical_tilde,
    }
    verdicts = []
    for name in _verify_methods(args.method):
        t0 = time.perf_counter()
        try:
            verdict = runners[name](G)
        except BudgetExceeded as exc:
            verdicts.append(({"method": name, "skipped": str(exc)}, None))
            continue
        entry = verdict.as_dict()
        if args.timing:
            entry["seconds"] = round(time.perf_counter() - t0, 6)
        verdicts.append((entry, verdict))
    decided = [v.is_k_critical for _, v in verdicts if v is not None]
    agree = len(set(decided)) <= 1
    ok = bool(decided) and all(decided)
    if args.json:
        sys.stdout.write(io.dumps({
            "parameters": {"n": G.n, "m": G.m, "k": G.n - G.m, "e": G.e},
            "verdicts": [e for e, _ in verdicts],
            "methods_agree": agree,
        }))
    else:
        print(f"graph order ({G.n}, {G.m}), k = {G.n - G.m}, e = {G.e}")
        for entry, v in verdicts:
            if v is None:
                print(f"{entry['method']}: skipped ({entry['skipped']})")
            elif v.is_k_critical:
                print(f"{v.method}: k-critical")
            else:
                line = f"{v.method}: NOT k-critical"
                if v.witness is not None:
                    line += f"; witness B = {list(v.witness.B)}, |N(B)| = {v.witness.neighborhood_size} < {len(v.witness.B) + G.n - G.m}"
                if v.deleted is not None:
                    line += f"; deleting U {list(v.deleted)} leaves no complete matching"
                print(line)
        if not agree:
            print("methods DISAGREE")
    return 0 if ok and agree else 1


def cmd_solve(args: argparse.Namespace) -> int:
    if args.mode == "biregular":
        result = solve_biregular(args.n, args.m)
    else:
        result = solve_exhaustive(args.n, args.m, budget=args.budget)
    report = result.as_dict()
    report["edges"] = [list(e) for e in result.graph.edges()]
    if args.json:
        sys.stdout.write(io.dumps(report))
    else:
        e, du, dv = result.objective
        print(f"order ({args.n}, {args.m}): objective (|E|, Delta_U, Delta_V) = ({e}, {du}, {dv}), certificate {result.certificate.value}")
        if result.optimal_count is not None:
            print(f"{result.optimal_count} optimal graph(s) up to row/column sorting, {result.candidates_examined} candidates examined")
        sys.stdout.write(io.write_edges(result.graph))
    if args.out:
        Path(args.out).write_text(io.write_edges(result.graph), encoding="utf-8")
    return 0


def cmd_conjecture(args: argparse.Namespace) -> int:
    report = conjecture_scan(args.n_max, deletion_budget=args.budget)
    if args.json:
        sys.stdout.write(io.dumps(report.as_dict()))
    else:
        for e in report.entries:
            dele = "skipped" if e.deletion is None else ("ok" if e.deletion else "FAIL")
            print(f"({e.n}, {e.m}) a'={e.a_prime} e={e.e} deficiency={'ok' if e.deficiency else 'FAIL'} deletion={dele}")
        for e in report.counterexamples:
            print(f"COUNTEREXAMPLE ({e.n}, {e.m}): witness B = {list(e.witness.B) if e.witness else None}")
        print(f"{len(report.entries)} checked, {len(report.counterexamples)} counterexamples ({report.note})")
    return 1 if report.counterexamples else 0


def cmd_selftest(args: argparse.Namespace) -> int:
    from .checks import ACCEPTANCE

    failed = 0
    for key, fn in ACCEPTANCE:
        result = fn()
        print(f"{key}. {result.line()}", flush=True)
        failed += not result.passed
    print(f"{len(ACCEPTANCE) - failed}/{len(ACCEPTANCE)} checks passed")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kcritical", description="Minimum k-critical bipartite graph toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("params", help="parameter enumeration")
    psub = p.add_subparsers(dest="action", required=True)
    pe = psub.add_parser("enum", help="enumerate admissible (n, m, a, b) parameter sets")
    pe.add_argument("--from", dest="source", required=True, choices=["xy", "cd", "m", "a", "b", "n"])
    pe.add_argument("values", nargs="+", type=int)
    pe.add_argument("--l-max", type=int, default=3, help="family length for --from xy/cd (default: 3)")
    pe.add_argument("--json", action="store_true")
    pe.set_defaults(func=cmd_params)

    c = sub.add_parser("construct", help="build a graph")
    c.add_argument("--kind", required=True, choices=["g1", "g2", "g2-step", "negative", "conjecture"])
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--m", type=int, required=True)
    c.add_argument("--s", type=int, help="step for --kind g2-step")
    c.add_argument("--unchecked", action="store_true", help="allow g2-step with s not dividing x (unverified output)")
    c.add_argument("--out", help="output file (default: stdout)")
    c.add_argument("--format", choices=["edges", "dot", "json"], default="edges")
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="check k-criticality of an edge-list file")
    v.add_argument("--in", dest="input", required=True)
    v.add_argument("--method", choices=["deficiency", "deletion", "tilde", "all"], default="all")
    v.add_argument("--budget", type=int, default=DELETION_BUDGET, help="max deletion sets C(n, k) (default: 10^6)")
    v.add_argument("--json", action="store_true")
    v.add_argument("--timing", action="store_true", help="include timings in JSON output")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("solve", help="solve the minimum k-critical bipartite graph problem")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--mode", choices=["biregular", "exhaustive"], default="biregular")
    s.add_argument("--budget", type=int, default=2_000_000, help="candidate cap for exhaustive mode")
    s.add_argument("--out", help="also write the edge list here")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_solve)

    cj = sub.add_parser("conjecture", help="verify the irregular construction up to n-max")
    cj.add_argument("--n-max", type=int, required=True)
    cj.add_argument("--budget", type=int, default=50_000, help="deletion-oracle cap per graph")
    cj.add_argument("--json", action="store_true")
    cj.set_defaults(func=cmd_conjecture)

    st = sub.add_parser("selftest", help="run the full invariant corpus")
    st.set_defaults(func=cmd_selftest)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, KCriticalError) as exc:
        print(f"kcritical: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
