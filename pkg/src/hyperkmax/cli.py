"""Command-line front end: ``hyperkmax <subcommand> ...``.

Exit status: 0 on success, 1 when a check fails or an asserted claim is
violated, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import bounds as B
from .connectivity import kappa_bar, kappa_bar_bruteforce, min_vertex_cut, separation_triple
from .harness.claims import CLAIMS, Settings, default_grid, verify_claim, write_run
from .harness.search import Limits, exhaustive_extremal, sample_saturations
from .hypergraph import complement, complete, empty, h_l, h_u, r_join
from .io import HGParseError, dumps_hg, dumps_json, load
from .maximality import is_vertex_k_maximal, saturate

DEFAULT_SEED = 20190101


class UsageError(Exception):
    pass


def _range(text: str) -> list[int]:
    if ".." in text:
        a, b = text.split("..", 1)
        return list(range(int(a), int(b) + 1))
    return [int(text)]


def _ints(text: str) -> list[int]:
    out: list[int] = []
    for part in text.split(","):
        out.extend(_range(part))
    return out


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps({"config": _config(args), **payload}, indent=2, sort_keys=True))
    else:
        print(f"# config: {json.dumps(_config(args), sort_keys=True)}", file=sys.stderr)
        print(text)


def _config(args) -> dict:
    return {k: v for k, v in sorted(vars(args).items()) if k != "func"}


def _write_or_print(args, h) -> None:
    out = dumps_json(h) + "\n" if args.format == "json" else dumps_hg(h)
    if args.output:
        Path(args.output).write_text(out)
        print(f"# config: {json.dumps(_config(args), sort_keys=True)}", file=sys.stderr)
    else:
        sys.stdout.write(out)


# -- subcommands -----------------------------------------------------------------


def cmd_gen(args) -> int:
    fam = args.family
    need = {"hl": ("n", "k", "r"), "hu": ("n", "k", "r"), "complete": ("n", "r"), "empty": ("n", "r")}
    for key in need.get(fam, ()):
        if getattr(args, key) is None:
            raise UsageError(f"gen {fam} needs --{key}")
    if fam == "hl":
        h = h_l(args.n, args.k, args.r)
    elif fam == "hu":
        h = h_u(args.n, args.k, args.r)
    elif fam == "complete":
        h = complete(args.n, args.r)
    elif fam == "empty":
        h = empty(args.n, args.r)
    elif fam == "complement":
        if len(args.input) != 1:
            raise UsageError("gen complement needs exactly one -i FILE")
        h = complement(load(args.input[0]))
    else:
        if len(args.input) != 2:
            raise UsageError("gen join needs exactly two -i FILE")
        h = r_join(load(args.input[0]), load(args.input[1]))
    _write_or_print(args, h)
    return 0


def cmd_kappa(args) -> int:
    res = min_vertex_cut(load(args.file))
    _emit(args, res.to_dict(), str(res.kappa))
    return 0


def cmd_kappa_bar(args) -> int:
    h = load(args.file)
    res = kappa_bar_bruteforce(h) if args.algo == "brute" else kappa_bar(h)
    _emit(args, res.to_dict(), str(res.value))
    return 0


def cmd_separate(args) -> int:
    tri = separation_triple(load(args.file))
    d = tri.to_dict()
    text = f"S={d['s']} side1={d['side1']} side2={d['side2']} n1={d['n1']} n2={d['n2']}"
    _emit(args, d, text)
    return 0


def cmd_check_maximal(args) -> int:
    rep = is_vertex_k_maximal(load(args.file), args.k, workers=args.threads)
    d = rep.to_dict()
    text = f"verdict: {rep.verdict}\nkappa: {rep.kappa}\nkappa_bar: {rep.kappa_bar}"
    if rep.counterexample:
        text += f"\ncounterexample: {list(rep.counterexample)}"
    _emit(args, d, text)
    return 0 if rep.is_maximal else 1


def cmd_saturate(args) -> int:
    h = saturate(load(args.file), args.k, order=args.order, seed=args.seed)
    _write_or_print(args, h)
    return 0


def cmd_bounds(args) -> int:
    recs = B.bounds_grid(_range(args.n), args.k, args.r)
    if args.format == "csv":
        print(f"# config: {json.dumps(_config(args), sort_keys=True)}", file=sys.stderr)
        sys.stdout.write(B.bounds_csv(recs))
        return 0
    text = "\n".join(" ".join(f"{k}={v}" for k, v in r.as_row().items()) for r in recs)
    _emit(args, {"records": [r.to_dict() for r in recs]}, text)
    return 0


def cmd_search(args) -> int:
    if args.mode == "exhaustive":
        lim = Limits(max_edges=args.max_edges, max_nodes=args.max_nodes, time_budget=args.time_budget)
        res = exhaustive_extremal(args.n, args.k, args.r, lim)
    else:
        res = sample_saturations(args.n, args.k, args.r, args.trials, args.seed, workers=args.threads)
    d = res.to_dict()
    text = (
        f"mode={res.mode} complete={res.complete} count_maximal={res.count_maximal} "
        f"min={res.min_size} max={res.max_size} histogram={d['histogram']} "
        f"conj_upper={d['conj_upper']}"
    )
    _emit(args, d, text)
    return 0 if res.complete else 1


def cmd_verify(args) -> int:
    ks = _ints(args.k)
    rs = _ints(args.r)
    grid = default_grid(args.claim, args.n_max, ks, rs, n_min=args.n_min)
    settings = Settings(
        seed=args.seed,
        samples=args.samples,
        exhaustive=not args.no_exhaustive,
        limits=Limits(max_edges=args.max_edges, time_budget=args.time_budget),
    )
    rep = verify_claim(args.claim, grid, settings, workers=args.threads)
    run = write_run(rep, args.out) if args.out else None
    c = rep.counts
    lines = [
        f"{args.claim} n={cell.n} k={cell.k} r={cell.r}: {cell.status}"
        + (f" ({cell.reason})" if cell.reason else "")
        for cell in rep.cells
    ]
    lines.append(f"{args.claim}: verified={c['verified']} violated={c['violated']} skipped={c['skipped']}")
    if not rep.asserted:
        lines.append(f"{args.claim} is reported only, not asserted")
    if run:
        lines.append(f"run directory: {run}")
    payload = rep.to_dict()
    if run:
        payload["run_dir"] = str(run)
    _emit(args, payload, "\n".join(lines))
    return 0 if rep.ok else 1


# -- parser ----------------------------------------------------------------------


def _claims_help() -> str:
    return "claims:\n" + "\n".join(f"  {cid:9s} {c.summary}" for cid, c in CLAIMS.items())


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="hyperkmax",
        description="Vertex connectivity and vertex-k-maximal r-uniform hypergraphs.",
        epilog=_claims_help(),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    p.add_argument("--threads", type=int, default=1, help="worker processes for parallel library calls")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_, fmt=("text", "json")):
        sp = sub.add_parser(name, help=help_, epilog=_claims_help() if name == "verify" else None,
                            formatter_class=argparse.RawDescriptionHelpFormatter)
        sp.add_argument("--format", choices=fmt, default=fmt[0])
        sp.set_defaults(func=func)
        return sp

    g = add("gen", cmd_gen, "build a hypergraph", fmt=("hg", "json"))
    g.add_argument("--family", required=True, choices=["hl", "hu", "complete", "empty", "complement", "join"])
    g.add_argument("--n", type=int)
    g.add_argument("--k", type=int)
    g.add_argument("--r", type=int)
    g.add_argument("-i", "--input", action="append", default=[])
    g.add_argument("-o", "--output")

    for name, func, help_ in [
        ("kappa", cmd_kappa, "vertex connectivity and a minimum cut"),
        ("separate", cmd_separate, "separation triple along the first minimum cut"),
    ]:
        sp = add(name, func, help_)
        sp.add_argument("file")

    kb = add("kappa-bar", cmd_kappa_bar, "maximum connectivity over sub-hypergraphs")
    kb.add_argument("file")
    kb.add_argument("--algo", choices=["brute", "decomp"], default="decomp")

    cm = add("check-maximal", cmd_check_maximal, "decide vertex-k-maximality")
    cm.add_argument("--k", type=int, required=True)
    cm.add_argument("file")

    sa = add("saturate", cmd_saturate, "grow to a vertex-k-maximal hypergraph", fmt=("hg", "json"))
    sa.add_argument("--k", type=int, required=True)
    sa.add_argument("--order", choices=["lex", "random"], default="lex")
    sa.add_argument("--seed", type=int, default=DEFAULT_SEED)
    sa.add_argument("-o", "--output")
    sa.add_argument("file")

    bo = add("bounds", cmd_bounds, "closed-form size bounds", fmt=("text", "json", "csv"))
    bo.add_argument("--n", required=True, help="N or A..B")
    bo.add_argument("--k", type=int, required=True)
    bo.add_argument("--r", type=int, required=True)

    se = add("search", cmd_search, "exhaustive or sampled extremal search")
    se.add_argument("--mode", choices=["exhaustive", "sample"], required=True)
    se.add_argument("--n", type=int, required=True)
    se.add_argument("--k", type=int, required=True)
    se.add_argument("--r", type=int, required=True)
    se.add_argument("--trials", type=int, default=100)
    se.add_argument("--seed", type=int, default=DEFAULT_SEED)
    se.add_argument("--max-edges", type=int, default=24)
    se.add_argument("--max-nodes", type=int)
    se.add_argument("--time-budget", type=float)

    ve = add("verify", cmd_verify, "check a claim over a parameter grid")
    ve.add_argument("--claim", required=True, choices=sorted(CLAIMS))
    ve.add_argument("--n-max", type=int, default=8)
    ve.add_argument("--n-min", type=int, default=2)
    ve.add_argument("--k", default="2", help="list like 2,3 or range 2..4")
    ve.add_argument("--r", default="3", help="list like 2,3 or range 2..4")
    ve.add_argument("--seed", type=int, default=DEFAULT_SEED)
    ve.add_argument("--samples", type=int, default=3)
    ve.add_argument("--no-exhaustive", action="store_true")
    ve.add_argument("--max-edges", type=int, default=15)
    ve.add_argument("--time-budget", type=float)
    ve.add_argument("--out", help="directory for the run folder (report.json, report.csv, witnesses)")
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except HGParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (UsageError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
