"""Command line: decomposition tables and verification suites.

    babybeads decompose --N 7 --n 4 --rho [1,1,1,1,1,1,1] --model closed
    babybeads verify --suite calc

Exit codes: 0 success, 1 verification failure, 2 usage or configuration
error.  The worker count comes from --threads, else BABYBEADS_THREADS, else 1.
"""

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from . import closedform as cf
from . import freelie
from . import homology as hm
from .partitions import fmt, parse, partitions_of, size
from .beads import iter_beads, signed_bead_count

MODELS = ("closed", "beads", "free", "truncated")
SUITES = ("calc", "beads", "main", "truncation", "props")


class UsageError(Exception):
    pass


# --------------------------------------------------------------- reports

def _closed_slice(rho, n):
    N = size(rho)
    if N > 2 and rho == (2,) + (1,) * (N - 2):
        return cf.thm_21(N, n).decomposition
    if N >= 1 and rho == (1,) * N:
        return cf.thm_1N(N, n).decomposition
    return cf.general_isotypical(rho, n).decomposition


def _map(fn, args, threads):
    if threads > 1 and len(args) > 1:
        with ProcessPoolExecutor(max_workers=threads) as ex:
            return list(ex.map(fn, *zip(*args)))
    return [fn(*a) for a in args]


def compute(N, n, rho, model, threads=1, max_N=None):
    """{(rho, lambda): mult} for the requested model."""
    if N < 0 or n < 0:
        raise UsageError("N and n must be non-negative")
    if rho is not None and size(rho) != N:
        raise UsageError("rho = %s is not a partition of N = %d" % (fmt(rho), N))
    rhos = [rho] if rho is not None else partitions_of(N)
    if not n <= N <= 2 * n:
        return {}
    if model == "closed":
        cap = hm.DEFAULT_MAX_N if max_N is None else max_N
        if N > cap and not all(_has_formula(r) for r in rhos):
            raise hm.SizeCapError("N = %d exceeds the cap %d" % (N, cap))
        slices = _map(_closed_slice, [(r, n) for r in rhos], threads)
        return {(r, g): c for r, sl in zip(rhos, slices) for g, c in sl.items()}
    if model == "beads":
        return hm.decompose_h0(N, n, "beads_signed", rho=rho, max_N=max_N)
    if model in ("free", "truncated"):
        truncated = model == "truncated"
        cap = freelie.MAX_N_TRUNCATED if truncated else freelie.MAX_N_FREE
        if max_N is not None:
            cap = max_N
        if N > cap:
            raise hm.SizeCapError("N = %d exceeds the %s cap %d" % (N, model, cap))
        table = freelie.h0_multilinear(N, n, truncated)
        return {(r, g): c for r in rhos for g, c in table.get(r, {}).items()}
    raise UsageError("unknown model %r" % (model,))


def _has_formula(rho):
    N = size(rho)
    return rho == (1,) * N or (N > 2 and rho == (2,) + (1,) * (N - 2))


def to_json(N, n, rho, model, table):
    entries = []
    for (r, g), c in sorted(table.items(), key=lambda kv: (partitions_of(N).index(kv[0][0]),
                                                          partitions_of(n).index(kv[0][1]))):
        e = {"lambda": list(g), "mult": c}
        if rho is None:
            e = {"rho": list(r), "lambda": list(g), "mult": c}
        entries.append(e)
    return json.dumps({"N": N, "n": n, "rho": list(rho) if rho is not None else None,
                       "model": model, "entries": entries})


def from_json(text):
    """Inverse of to_json: (N, n, rho, model, table)."""
    d = json.loads(text)
    rho = tuple(d["rho"]) if d["rho"] is not None else None
    table = {}
    for e in d["entries"]:
        r = tuple(e["rho"]) if "rho" in e else rho
        table[(r, tuple(e["lambda"]))] = e["mult"]
    return d["N"], d["n"], rho, d["model"], table


def to_text(N, n, rho, model, table):
    head = "N=%d n=%d model=%s" % (N, n, model)
    if rho is not None:
        head += " rho=%s" % fmt(rho)
    lines = [head]
    rows = sorted(table.items(), key=lambda kv: (partitions_of(N).index(kv[0][0]),
                                                 partitions_of(n).index(kv[0][1])))
    if not rows:
        lines.append("(zero)")
        return "\n".join(lines)
    if rho is None:
        w = max(len(fmt(r)) for (r, _), _ in rows)
        w = max(w, 3)
        lw = max(max(len(fmt(g)) for (_, g), _ in rows), 6)
        lines.append("%-*s  %-*s  %s" % (w, "rho", lw, "lambda", "mult"))
        for (r, g), c in rows:
            lines.append("%-*s  %-*s  %d" % (w, fmt(r), lw, fmt(g), c))
    else:
        lw = max(max(len(fmt(g)) for (_, g), _ in rows), 6)
        lines.append("%-*s  %s" % (lw, "lambda", "mult"))
        for (_, g), c in rows:
            lines.append("%-*s  %d" % (lw, fmt(g), c))
    return "\n".join(lines)


# ---------------------------------------------------------------- suites

def _check(name, got, want):
    return (name, got == want, "" if got == want else "got %r, expected %r" % (got, want))


def suite_calc(max_N=6):
    out = []
    for b in range(1, max_N + 1):
        for a in range(1, b + 1):
            out.append(_check("calc a=%d b=%d" % (a, b), hm.decompose_h0(a, b, "hfi_tr", engine="direct"), cf.thm_calc(a, b)))
    return out


def suite_beads(max_N=6):
    out = []
    for N in range(1, max_N + 1):
        for n in range(1, N + 1):
            if n <= N <= 2 * n:
                out.append(_check("beads N=%d n=%d" % (N, n), hm.decompose_h0(N, n, "beads"), cf.cor_beads_h(N, n)))
    for N in range(1, 9):
        for n in range(1, N + 1):
            got = sum(1 for _ in iter_beads(N, n, signed=True))
            out.append(_check("signed dim N=%d n=%d" % (N, n), got, signed_bead_count(N, n)))
    return out


def suite_main(max_N=7):
    out = []
    for N in range(1, max_N + 1):
        for n in range(1, N + 1):
            T = hm.transitive(N, n, "beads_signed")
            for rho in partitions_of(N):
                out.append(_check("main rho=%s n=%d" % (fmt(rho), n),
                                  cf.general_isotypical(rho, n).decomposition, T.slice(rho)))
    return out


def suite_truncation(max_N=6):
    out = []
    for N in range(1, max_N + 1):
        shapes = [(1,) * N] + ([(2,) + (1,) * (N - 2)] if N >= 2 else [])
        for rho in shapes:
            for n in range(1, N + 1):
                c = freelie.truncation_comparison(rho, n)
                out.append(_check("truncation rho=%s n=%d" % (fmt(rho), n), c["free"], c["truncated"]))
    c = freelie.truncation_comparison((2, 2), 2)
    out.append(_check("non-example rho=[2,2] n=2", (c["free_mult"], c["truncated_mult"]), (1, 0)))
    return out


def suite_props(max_s=5):
    out = []
    for s in range(1, max_s + 1):
        for t in range(1, max_s + 1):
            out.append(_check("ldm triv s=%d t=%d" % (s, t), hm.lad_int(hm.constant_input(), s, t), cf.ldm_triv(s, t)))
            out.append(_check("ldm sgn s=%d t=%d" % (s, t), hm.lad_int(hm.sign_input(), s, t), cf.ldm_sgn(s, t)))
    return out


SUITE_FUNCS = {"calc": suite_calc, "beads": suite_beads, "main": suite_main,
               "truncation": suite_truncation, "props": suite_props}


def _run_suite(name):
    return SUITE_FUNCS[name]()


# ------------------------------------------------------------------ main

def _partition_arg(text):
    try:
        return parse(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def build_parser():
    p = argparse.ArgumentParser(prog="babybeads", description=__doc__.split("\n")[0])
    p.add_argument("--threads", type=int, default=None, help="worker processes (env BABYBEADS_THREADS)")
    sub = p.add_subparsers(dest="command", required=True)
    d = sub.add_parser("decompose", help="decomposition table")
    d.add_argument("--N", type=int, required=True)
    d.add_argument("--n", type=int, required=True)
    d.add_argument("--rho", type=_partition_arg, default=None)
    d.add_argument("--model", choices=MODELS, default="beads")
    d.add_argument("--format", choices=("text", "json"), default="text")
    d.add_argument("--max-N", type=int, default=None)
    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", choices=SUITES + ("all",), default="all")
    return p


def _threads(args):
    if args.threads is not None:
        return max(args.threads, 1)
    try:
        return max(int(os.environ.get("BABYBEADS_THREADS", "1")), 1)
    except ValueError:
        return 1


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    threads = _threads(args)
    if args.command == "decompose":
        try:
            table = compute(args.N, args.n, args.rho, args.model, threads, args.max_N)
        except (UsageError, hm.SizeCapError, ValueError) as e:
            print("error: %s" % e, file=sys.stderr)
            return 2
        emit = to_json if args.format == "json" else to_text
        print(emit(args.N, args.n, args.rho, args.model, table), file=out)
        return 0
    names = list(SUITES) if args.suite == "all" else [args.suite]
    results = _map(_run_suite, [(nm,) for nm in names], threads)
    for nm, checks in zip(names, results):
        for name, ok, detail in checks:
            print("%s %s" % ("PASS" if ok else "FAIL", name), file=out)
            if not ok:
                print("first failure: %s: %s" % (name, detail), file=out)
                return 1
    return 0


def main_entry():
    sys.exit(main())
