"""Command-line front end.

    powergraph catalog --max-order 60 --families cyclic,quaternion
    powergraph check Q8 --patterns K1,4
    powergraph audit --max-order 200 --out audit.json --jobs 4
    powergraph export Z6 --format dot --out z6.dot
    powergraph ingest table.tbl

Exit codes: 0 success (for ``check``: all requested patterns absent),
1 pattern found or audit disagreement, 2 error.
"""
from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import catalog as cat
from .classify import DEFAULT_AUDIT_BOUND, audit_group, report_to_dict, witness_pairs
from .forbidden import C4, CLAW, K3, K14, PatternGraph, find_induced, has_induced_c4, is_k1r_free, is_triangle_free
from .groups import GroupError, order_spectrum, read_cayley_table, from_cayley_table, exponent, is_nilpotent
from .pgraph import power_graph, to_dot, to_json

SCHEMA = 1
C4_HARD_CAP = 500
PATTERNS = {"K1,3": CLAW, "K1,4": K14, "C4": C4, "K3": K3}


def _families(text: str | None) -> tuple[str, ...]:
    if not text or text == "all":
        return cat.FAMILIES
    fams = tuple(f.strip() for f in text.split(",") if f.strip())
    bad = [f for f in fams if f not in cat.FAMILIES]
    if bad:
        raise ValueError(f"unknown families {bad}; choose from {', '.join(cat.FAMILIES)}")
    return fams


def _patterns(text: str | None) -> list[str]:
    if not text:
        return list(PATTERNS)
    # "K1,3" contains a comma, so split on commas that start a new pattern name
    names, cur = [], ""
    for tok in text.split(","):
        if cur.startswith("K1") and cur.count(",") == 0 and tok.isdigit():
            cur += "," + tok
            continue
        if cur:
            names.append(cur)
        cur = tok.strip()
    if cur:
        names.append(cur)
    bad = [n for n in names if n not in PATTERNS]
    if bad:
        raise ValueError(f"unknown patterns {bad}; choose from {', '.join(PATTERNS)}")
    return names


def detect(graph, name: str):
    if name == "K1,3":
        return is_k1r_free(graph, 3)
    if name == "K1,4":
        return is_k1r_free(graph, 4)
    if name == "C4":
        if graph.n > C4_HARD_CAP:
            raise ValueError(f"C4 search capped at {C4_HARD_CAP} vertices")
        return has_induced_c4(graph)
    if name == "K3":
        return is_triangle_free(graph)
    pattern: PatternGraph = PATTERNS[name]
    return find_induced(graph, pattern)


def cmd_catalog(args) -> int:
    for label in cat.catalog(args.max_order, _families(args.families)):
        print(f"{cat.build(label).n}\t{label}")
    return 0


def cmd_check(args) -> int:
    G = cat.build(args.group)
    graph = power_graph(G)
    found = False
    print(f"{G.label} (order {G.n})")
    for name in _patterns(args.patterns):
        w = detect(graph, name)
        if w is None:
            print(f"  {name}: free")
        else:
            found = True
            pairs = " ".join(f"({x}:{o})" for x, o in witness_pairs(G, w.vertices))
            print(f"  {name}: found {pairs}")
    return 1 if found else 0


def _audit_one(label: str, bound: int) -> dict:
    G = cat.build(label)
    return report_to_dict(audit_group(G, bound), G)


def run_audit(labels: list[str], bound: int = DEFAULT_AUDIT_BOUND, jobs: int = 1) -> list[dict]:
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_audit_one, labels, [bound] * len(labels)))
    else:
        reports = [_audit_one(lab, bound) for lab in labels]
    return sorted(reports, key=lambda r: (r["order"], r["group"]))


def cmd_audit(args) -> int:
    fams = _families(args.families)
    labels = cat.catalog(args.max_order, fams)
    bound = max(args.bound, args.max_order)
    reports = run_audit(labels, bound, args.jobs)
    disagreeing = [r for r in reports if r["disagreements"]]
    doc = {
        "schema": SCHEMA,
        "max_order": args.max_order,
        "families": list(fams),
        "summary": {
            "groups": len(reports),
            "claims": sum(len(r["verdicts"]) for r in reports),
            "disagreements": sum(len(r["disagreements"]) for r in reports),
        },
        "groups": reports,
    }
    text = json.dumps(doc, indent=1) + "\n"
    if args.out:
        Path(args.out).write_text(text)
    for r in reports:
        print(f"{r['group']}\t{r['order']}\t{','.join(r['disagreements']) or 'none'}")
    s = doc["summary"]
    print(f"audited {s['groups']} groups, {s['claims']} claims, {s['disagreements']} disagreements")
    return 1 if disagreeing else 0


def cmd_export(args) -> int:
    G = cat.build(args.group)
    graph = power_graph(G)
    text = to_dot(graph) if args.format == "dot" else to_json(graph)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_ingest(args) -> int:
    G = from_cayley_table(read_cayley_table(Path(args.path).read_text()), args.label or Path(args.path).stem)
    print(f"label: {G.label}")
    print(f"order: {G.n}")
    print(f"identity: {G.identity}")
    print(f"exponent: {exponent(G)}")
    print(f"order spectrum: {sorted(order_spectrum(G))}")
    print(f"nilpotent: {is_nilpotent(G)}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="powergraph", description=__doc__.split("\n")[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("catalog", help="list catalog groups")
    p.add_argument("--max-order", type=int, default=60)
    p.add_argument("--families", default="all")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("check", help="look for forbidden induced subgraphs")
    p.add_argument("group")
    p.add_argument("--patterns", default=None, help="comma list of K1,3 K1,4 C4 K3")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("audit", help="audit every catalog group")
    p.add_argument("--max-order", type=int, default=DEFAULT_AUDIT_BOUND)
    p.add_argument("--families", default="all")
    p.add_argument("--out", default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--bound", type=int, default=DEFAULT_AUDIT_BOUND)
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("export", help="write the power graph as DOT or JSON")
    p.add_argument("group")
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("ingest", help="validate a Cayley-table file")
    p.add_argument("path")
    p.add_argument("--label", default=None)
    p.set_defaults(func=cmd_ingest)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GroupError, ValueError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
