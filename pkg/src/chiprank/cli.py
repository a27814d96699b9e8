"""Command-line interface.

Exit codes: 0 on success, 1 when a computation fails or a verification does
not hold, 2 on usage errors (argparse's default).
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import acceptance, complete, dyck, dynamics, rank, strip
from .graphs import MultiGraph, check_config


def _parse_config(text: str) -> tuple:
    """Chip counts as ``3,1,-2``, ``@file``, or ``-`` for stdin."""
    if text == "-":
        text = sys.stdin.read()
    elif text.startswith("@"):
        with open(text[1:], encoding="utf-8") as fh:
            text = fh.read()
    parts = text.replace(",", " ").split()
    if not parts:
        raise ValueError("empty configuration")
    return tuple(int(p) for p in parts)


def _add_graph_args(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--graph", metavar="FILE", help="multigraph as JSON")
    group.add_argument("--complete", type=int, metavar="N", help="complete graph on N vertices")
    group.add_argument("--wheel", type=int, metavar="K", help="K-wheel (hub is the sink)")


def _load_graph(args: argparse.Namespace) -> MultiGraph:
    if args.graph is not None:
        with open(args.graph, encoding="utf-8") as fh:
            return MultiGraph.from_json(fh.read())
    if args.complete is not None:
        return MultiGraph.complete(args.complete)
    return MultiGraph.wheel(args.wheel)


def _emit(payload: dict) -> None:
    print(json.dumps(payload, sort_keys=True))


def _cmd_stabilize(args: argparse.Namespace) -> int:
    G = _load_graph(args)
    f = _parse_config(args.config)
    stable, odometer = dynamics.stabilize(G, f)
    _emit({"stable": list(stable), "odometer": list(odometer)})
    return 0


def _cmd_parking(args: argparse.Namespace) -> int:
    G = _load_graph(args)
    f = _parse_config(args.config)
    _emit({"parking": list(dynamics.parking_representative(G, f))})
    return 0


def _cmd_recurrent(args: argparse.Namespace) -> int:
    G = _load_graph(args)
    f = _parse_config(args.config)
    _emit({"recurrent": list(dynamics.recurrent_representative(G, f))})
    return 0


def _cmd_effective(args: argparse.Namespace) -> int:
    G = _load_graph(args)
    f = _parse_config(args.config)
    _emit({"effective": rank.is_effective_class(G, f)})
    return 0


def _cmd_rank(args: argparse.Namespace) -> int:
    G = _load_graph(args)
    f = check_config(G, _parse_config(args.config))
    method = args.method
    if method == "auto":
        method = "formula" if G.is_complete() else "bruteforce"
    if method in ("formula", "greedy") and not G.is_complete():
        raise ValueError(f"method {method!r} only applies to complete graphs")
    out: dict = {"method": method, "degree": sum(f)}
    t0 = time.perf_counter()
    if method == "formula":
        if args.count_ops:
            out["rank"], out["ops"] = complete.rank_formula(f, count_ops=True)
        else:
            out["rank"] = complete.rank_formula(f)
    elif method == "greedy":
        out["rank"] = complete.rank_greedy(f)
    else:
        if args.count_ops:
            raise ValueError("--count-ops only applies to the formula method")
        result = rank.rank_bruteforce(G, f)
        out["rank"] = result.rank
        out["witness"] = list(result.witness)
    out["wall_ms"] = round((time.perf_counter() - t0) * 1000, 3)
    _emit(out)
    return 0


def _cmd_rr_check(args: argparse.Namespace) -> int:
    G = _load_graph(args)
    f = _parse_config(args.config)
    dual = rank.kappa_dual(G, f)
    rf = rank.rank_bruteforce(G, f).rank
    rd = rank.rank_bruteforce(G, dual).rank
    holds = rf - rd == sum(f) + G.n - G.m
    _emit(
        {
            "rank": rf,
            "dual_config": list(dual),
            "dual_rank": rd,
            "degree": sum(f),
            "holds": holds,
        }
    )
    return 0 if holds else 1


def _cmd_tutte_counts(args: argparse.Namespace) -> int:
    G = _load_graph(args)
    counts = dynamics.effective_class_counts(G, args.max_degree)
    if args.format == "csv":
        print("degree,count")
        for d in sorted(counts):
            print(f"{d},{counts[d]}")
    else:
        _emit({"counts": {str(d): c for d, c in counts.items()},
               "spanning_trees": G.spanning_tree_count()})
    return 0


def _cmd_dyck_stats(args: argparse.Namespace) -> int:
    word = args.word
    if not dyck.is_dn_word(word) and not dyck.is_dyck_word(word):
        raise ValueError(f"{word!r} is neither balanced nor one b heavy")
    wd = word if dyck.is_dn_word(word) else dyck.to_dn_word(word)
    w0 = dyck.to_dyck_word(wd)
    _emit(
        {
            "word": word,
            "heights": list(dyck.heights(w0)),
            "coheights": list(dyck.coheights(wd)),
            "area": dyck.area(w0),
            "prerank": dyck.prerank(wd),
            "dinv": dyck.dinv(wd),
            "cdinv": dyck.cdinv(wd),
            "phi": dyck.phi_involution(word),
            "zeta": dyck.zeta_haglund(w0),
        }
    )
    return 0


def _cmd_strip_leftright(args: argparse.Namespace) -> int:
    left, right = strip.left_right(args.word, args.s)
    _emit(
        {
            "word": args.word,
            "s": args.s,
            "left": left,
            "right": right,
            "lastright": strip.lastright(args.word),
        }
    )
    return 0


def _cmd_genfun_ln(args: argparse.Namespace) -> int:
    if args.format == "csv":
        table = strip.kn_degree_rank_table(args.n, args.lo, args.hi)
        print("degree,rank,count")
        for (deg, rk), c in sorted(table.items()):
            print(f"{deg},{rk},{c}")
        return 0
    series = strip.Ln_direct(args.n, args.trunc)
    if args.format == "text":
        print(series.to_text())
    else:
        _emit({"n": args.n, "trunc": args.trunc, "coeffs": series.to_json_dict()})
    return 0


def _cmd_genfun_identity(args: argparse.Namespace) -> int:
    ok = strip.LnC_identity_check(args.max_n, args.trunc)
    _emit({"max_n": args.max_n, "trunc": args.trunc, "holds": ok})
    return 0 if ok else 1


def _cmd_verify_all(args: argparse.Namespace) -> int:
    results = acceptance.run_all(args.seed)
    width = max(len(name) for name, _, _, _ in results)
    failures = 0
    for name, ok, detail, secs in results:
        status = "PASS" if ok else "FAIL"
        failures += not ok
        print(f"{status}  {name:<{width}}  ({secs:6.2f}s)  {detail}")
    print(f"{len(results) - failures}/{len(results)} checks passed")
    return 0 if failures == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chiprank",
        description="Chip-firing, parking configurations, and divisor ranks "
        "on multigraphs, in exact integer arithmetic.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for name, fn, blurb in (
        ("stabilize", _cmd_stabilize, "topple until every non-sink vertex is stable"),
        ("parking", _cmd_parking, "parking representative of the configuration's class"),
        ("recurrent", _cmd_recurrent, "recurrent representative of the configuration's class"),
        ("effective", _cmd_effective, "does the class contain a nonnegative configuration"),
    ):
        p = sub.add_parser(name, help=blurb)
        _add_graph_args(p)
        p.add_argument("--config", required=True, help="chip counts: inline, @file, or -")
        p.set_defaults(func=fn)

    p = sub.add_parser("rank", help="divisor rank of a configuration")
    _add_graph_args(p)
    p.add_argument("--config", required=True, help="chip counts: inline, @file, or -")
    p.add_argument(
        "--method",
        choices=("auto", "formula", "greedy", "bruteforce"),
        default="auto",
        help="formula/greedy need a complete graph; auto picks formula there",
    )
    p.add_argument("--count-ops", action="store_true", help="report the operation count")
    p.set_defaults(func=_cmd_rank)

    p = sub.add_parser("rr-check", help="rank symmetry against the dual configuration")
    _add_graph_args(p)
    p.add_argument("--config", required=True, help="chip counts: inline, @file, or -")
    p.set_defaults(func=_cmd_rr_check)

    p = sub.add_parser("tutte-counts", help="effective class counts by degree")
    _add_graph_args(p)
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=_cmd_tutte_counts)

    p_dyck = sub.add_parser("dyck", help="lattice-word statistics")
    dyck_sub = p_dyck.add_subparsers(dest="dyck_command", required=True)
    p = dyck_sub.add_parser("stats", help="statistics and involution images of a word")
    p.add_argument("word")
    p.set_defaults(func=_cmd_dyck_stats)

    p_strip = sub.add_parser("strip", help="labelled-strip cell counts")
    strip_sub = p_strip.add_subparsers(dest="strip_command", required=True)
    p = strip_sub.add_parser("leftright", help="cells weakly left / strictly right of a label")
    p.add_argument("word")
    p.add_argument("s", type=int)
    p.set_defaults(func=_cmd_strip_leftright)

    p_gen = sub.add_parser("genfun", help="truncated generating series")
    gen_sub = p_gen.add_subparsers(dest="genfun_command", required=True)
    p = gen_sub.add_parser("ln", help="two-variable series for a fixed n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trunc", type=int, required=True)
    p.add_argument("--format", choices=("json", "text", "csv"), default="json")
    p.add_argument("--lo", type=int, default=-5, help="lowest degree for --format csv")
    p.add_argument("--hi", type=int, default=15, help="highest degree for --format csv")
    p.set_defaults(func=_cmd_genfun_ln)
    p = gen_sub.add_parser("identity", help="check the stacked-series identity")
    p.add_argument("--max-n", type=int, default=4)
    p.add_argument("--trunc", type=int, default=8)
    p.set_defaults(func=_cmd_genfun_identity)

    p_verify = sub.add_parser("verify", help="acceptance checks")
    verify_sub = p_verify.add_subparsers(dest="verify_command", required=True)
    p = verify_sub.add_parser("all", help="run every acceptance check")
    p.add_argument("--seed", type=int, default=acceptance.DEFAULT_SEED)
    p.set_defaults(func=_cmd_verify_all)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, AssertionError, OSError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
