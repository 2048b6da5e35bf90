"""Command-line driver.

Exit codes: 0 success, 1 verification failure, 2 configuration error,
3 membership oracle undecided within the effort bounds.
"""

from __future__ import annotations

import argparse
import json
import sys as _sys
import time

from . import catalog, roots as rt, typea
from .system import CoxeterSystem, fold, is_finite, system_from_json, system_to_json
from .elements import element_of, identity, m_of_c, reduced_word, word_to_json
from .convex import ConvexSet, Effort, OracleUndecided, convex_from_json
from .billiards import run_trajectory, sort_check, trajectory_tsv
from .walkgraph import (
    build_graph,
    certificate_to_json,
    graph_to_dot,
    lift_walk,
    search_plausible_walks,
    verify_certificate,
)
from .verification import run_suite, all_checks

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_CONFIG = 2
EXIT_UNDECIDED = 3


def _load_system(args) -> CoxeterSystem:
    if getattr(args, "name", None):
        return catalog.named_system(args.name)
    if getattr(args, "system", None):
        with open(args.system) as fh:
            return system_from_json(json.load(fh))
    raise SystemExit2("give --system PATH or --name NAME")


class SystemExit2(Exception):
    pass


def _effort(args) -> Effort:
    kw = {}
    if getattr(args, "radius", None) is not None:
        kw["search_radius"] = args.radius
    if getattr(args, "depth", None) is not None:
        kw["universe_depth"] = args.depth
    if getattr(args, "max_steps", None) is not None:
        kw["max_steps"] = args.max_steps
    if getattr(args, "max_walk_len", None) is not None:
        kw["max_walk_len"] = args.max_walk_len
    return Effort(**kw)


def _ordering(args, sys) -> tuple:
    if not args.ordering:
        return tuple(range(sys.n))
    return tuple(sys.index(x) for x in args.ordering.split(","))


def _emit(args, text: str):
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        _sys.stdout.write(text)


def _word(sys, spec: str) -> tuple:
    if not spec:
        return ()
    return tuple(sys.index(x) for x in spec.split(","))


def cmd_group(args) -> int:
    sys = _load_system(args)
    lines = ["labels: " + " ".join(sys.labels)]
    for row in sys.B:
        lines.append("B: " + " ".join(x.to_str() for x in row))
    finite = is_finite(sys)
    lines.append(f"finite: {finite}")
    if finite:
        pos = [v for v in rt.enumerate_roots(sys, 4 * sys.n * sys.n) if rt.is_positive(v)]
        lines.append(f"positive roots: {len(pos)}")
    _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_graph(args) -> int:
    sys = _load_system(args)
    G = build_graph(sys, universe_depth=args.depth if args.depth else 8)
    if args.format == "json":
        doc = {
            "vertices": [rt.root_to_strs(v) for v in G.vertices] + ["NEG"],
            "edges": [
                {
                    "src": e.src,
                    "dst": e.dst,
                    "label": sys.labels[e.label],
                    "solidity": e.solidity,
                }
                for e in G.edges
            ],
        }
        _emit(args, json.dumps(doc, indent=2) + "\n")
    else:
        _emit(args, graph_to_dot(G))
    return EXIT_OK


def cmd_trajectory(args) -> int:
    sys = _load_system(args)
    with open(args.convex) as fh:
        L = convex_from_json(json.load(fh), sys)
    ordering = _ordering(args, sys)
    effort = _effort(args)
    u0 = element_of(sys, _word(sys, args.start))
    steps = args.max_steps if args.max_steps else effort.steps_for(sys)
    rec = run_trajectory(sys, L, ordering, u0, steps, effort, stop_on_cycle=not args.no_stop)
    _emit(args, trajectory_tsv(sys, rec))
    return EXIT_OK


def cmd_walks(args) -> int:
    sys = _load_system(args)
    ordering = _ordering(args, sys)
    effort = _effort(args)
    G = build_graph(sys, universe_depth=effort.universe_depth)
    walks = search_plausible_walks(G, ordering, effort.max_walk_len)
    doc = []
    for w in walks:
        doc.append(
            {
                "labels": [sys.labels[G.edges[e].label] for e in w.edge_ids],
                "vertices": [rt.root_to_strs(G.vertices[v]) for v in w.vertices],
            }
        )
    _emit(args, json.dumps(doc, indent=2) + "\n")
    return EXIT_OK


def cmd_lift(args) -> int:
    sys = _load_system(args)
    ordering = _ordering(args, sys)
    effort = _effort(args)
    G = build_graph(sys, universe_depth=effort.universe_depth)
    walks = search_plausible_walks(G, ordering, effort.max_walk_len)
    for w in walks:
        cert = lift_walk(sys, w, G, ordering, effort)
        if cert is not None:
            _emit(args, json.dumps(certificate_to_json(cert), indent=2) + "\n")
            return EXIT_OK
    _emit(args, json.dumps(None) + "\n")
    return EXIT_VERIFY


def cmd_sort(args) -> int:
    sys = _load_system(args)
    with open(args.convex) as fh:
        L = convex_from_json(json.load(fh), sys)
    word = _word(sys, args.word)
    ok = sort_check(sys, L, word, effort=_effort(args))
    _emit(args, ("SORTED" if ok else "NOT SORTED") + "\n")
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_mc(args) -> int:
    sys = _load_system(args)
    ordering = _ordering(args, sys)
    _emit(args, f"{m_of_c(sys, ordering)}\n")
    return EXIT_OK


def cmd_fold(args) -> int:
    sys = _load_system(args)
    mapping = {}
    for item in args.sigma.split(","):
        a, b = item.split(":")
        mapping[sys.index(a)] = sys.index(b)
    sigma = [mapping.get(i, i) for i in range(sys.n)]
    fm = fold(sys, sigma)
    _emit(args, json.dumps(system_to_json(fm.folded), indent=2) + "\n")
    return EXIT_OK


def cmd_typea(args) -> int:
    with open(args.poset) as fh:
        doc = json.load(fh)
    P = typea.PosetOnLabels(doc["size"], [tuple(x) for x in doc.get("relations", [])])
    from itertools import permutations

    n = P.size - 1
    perms = set(permutations(range(1, P.size + 1)))
    target = set(P.linear_extensions())
    img = set(perms)
    for _ in range(n):
        img = {typea.typeA_pro(P, p) for p in img}
    pro_ok = img == target
    ev_ok = {typea.typeA_ev(P, p) for p in perms} == target
    img = set(perms)
    for _ in range((P.size + 1) // 2):
        img = {typea.typeA_gyr(P, p) for p in img}
    gyr_ok = img == target
    _emit(
        args,
        f"linear extensions: {len(target)}\npro-sorts: {pro_ok}\n"
        f"ev-sorts: {ev_ok}\ngyr-sorts: {gyr_ok}\n",
    )
    return EXIT_OK if (pro_ok and ev_ok and gyr_ok) else EXIT_VERIFY


def cmd_verify_cert(args) -> int:
    from .walkgraph import certificate_from_json

    with open(args.cert) as fh:
        cert = certificate_from_json(json.load(fh))
    ok = verify_certificate(cert, _effort(args))
    _emit(args, ("VERIFIED" if ok else "FAILED") + "\n")
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_verify_paper(args) -> int:
    names = set(args.only.split(",")) if args.only else None
    results = run_suite(names)
    failed = 0
    out = []
    for r in results:
        mark = "PASS" if r.passed else "FAIL"
        if not r.passed:
            failed += 1
        out.append(f"{mark}  {r.name:34s} {r.seconds:8.2f}s  {r.detail}")
    out.append(f"{len(results) - failed}/{len(results)} checks passed")
    _emit(args, "\n".join(out) + "\n")
    return EXIT_OK if failed == 0 else EXIT_VERIFY


def _add_common(p):
    p.add_argument("--system", help="system JSON path")
    p.add_argument("--name", help="built-in system name (e.g. B3, G2~, E8~)")
    p.add_argument("--ordering", help="comma-separated index labels, first applied first")
    p.add_argument("--depth", type=int, help="root-universe depth")
    p.add_argument("--radius", type=int, help="member-search radius")
    p.add_argument("--max-steps", type=int, dest="max_steps")
    p.add_argument("--max-walk-len", type=int, dest="max_walk_len")
    p.add_argument("--out", help="output path (default stdout)")
    p.add_argument("--format", choices=["dot", "json", "tsv"], default="dot")


def build_parser():
    ap = argparse.ArgumentParser(prog="coxbilliards", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("group", help="print labels, form, finiteness")
    _add_common(p)
    p.set_defaults(fn=cmd_group)

    p = sub.add_parser("graph", help="emit the small-root billiards graph")
    _add_common(p)
    p.set_defaults(fn=cmd_graph)

    p = sub.add_parser("trajectory", help="run a billiards trajectory")
    _add_common(p)
    p.add_argument("--convex", required=True, help="convex-set JSON path")
    p.add_argument("--start", default="", help="start word (comma-separated labels)")
    p.add_argument("--no-stop", action="store_true", help="do not stop on cycle detection")
    p.set_defaults(fn=cmd_trajectory)

    p = sub.add_parser("walks", help="search billiards-plausible closed walks")
    _add_common(p)
    p.set_defaults(fn=cmd_walks)

    p = sub.add_parser("lift", help="lift a plausible walk to a certificate")
    _add_common(p)
    p.set_defaults(fn=cmd_lift)

    p = sub.add_parser("sort", help="check a toggle word sorts the whole group")
    _add_common(p)
    p.add_argument("--convex", required=True)
    p.add_argument("--word", required=True, help="toggle word (comma-separated labels)")
    p.set_defaults(fn=cmd_sort)

    p = sub.add_parser("mc", help="the sorting exponent M(c) of a Coxeter word")
    _add_common(p)
    p.set_defaults(fn=cmd_mc)

    p = sub.add_parser("fold", help="fold along a graph automorphism")
    _add_common(p)
    p.add_argument("--sigma", required=True, help="automorphism as a:b,b:a,...")
    p.set_defaults(fn=cmd_fold)

    p = sub.add_parser("typea", help="poset toggle sorting report")
    p.add_argument("--poset", required=True, help="poset JSON path")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_typea)

    p = sub.add_parser("verify-cert", help="replay a certificate JSON")
    _add_common(p)
    p.add_argument("--cert", required=True)
    p.set_defaults(fn=cmd_verify_cert)

    p = sub.add_parser("verify-paper", help="run the full verification suite")
    p.add_argument("--only", help="comma-separated check names")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_verify_paper)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_CONFIG if exc.code not in (0, None) else EXIT_OK
    try:
        return args.fn(args)
    except OracleUndecided as exc:
        print(f"undecided: {exc}", file=_sys.stderr)
        return EXIT_UNDECIDED
    except (SystemExit2, FileNotFoundError, KeyError, ValueError) as exc:
        print(f"configuration error: {exc}", file=_sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    raise SystemExit(main())
