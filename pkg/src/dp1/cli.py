"""Command line interface: ``dp1 <subcommand> [options]``.

Every subcommand accepts ``--format json|text`` and ``--seed``.  The exit
status is 0 only when every check performed by the command passes.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from collections import Counter

from .errors import Dp1Error, FixtureMismatch


def _emit(args, payload: dict, text: str | None = None) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True, default=str))
    else:
        print(text if text is not None else _as_text(payload))


def _as_text(obj, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(obj, dict):
        lines = []
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                lines.append(_as_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {v}")
        return "\n".join(lines)
    if isinstance(obj, list):
        if obj and all(isinstance(v, dict) and not any(isinstance(x, (dict, list)) for x in v.values()) for v in obj):
            return "\n".join(pad + "- " + ", ".join(f"{k}={x}" for k, x in v.items()) for v in obj)
        return "\n".join(_as_text(v, indent) if isinstance(v, (dict, list)) else f"{pad}- {v}" for v in obj)
    return f"{pad}{obj}"


def _jobs(args) -> int:
    from .egraph import default_jobs

    return args.jobs if getattr(args, "jobs", None) else default_jobs()


def _load_config(path: str):
    from .plane import Configuration

    with open(path, encoding="utf-8") as fh:
        return Configuration.from_json(fh.read())


# -- subcommands


def cmd_classes(args) -> int:
    from .picard import TABLE_ROWS, exceptional_classes, is_exceptional, row_of

    cs = exceptional_classes()
    rows = Counter(row_of(c) for c in cs)
    ok = len(cs) == 240 and all(is_exceptional(c) for c in cs)
    payload = {
        "count": len(cs),
        "rows": [{"a": TABLE_ROWS[i][0], "count": rows[i]} for i in range(len(TABLE_ROWS))],
        "all_exceptional": ok,
    }
    if args.list:
        payload["classes"] = [str(c) for c in cs]
    _emit(args, payload)
    return 0 if ok else 1


def cmd_graph_stats(args) -> int:
    from .egraph import build_graph
    from .picard import pair_scan

    g = build_graph()
    profiles = Counter(tuple(sorted(g.row_histogram(i).items())) for i in range(240))
    expected = ((0, 56), (1, 126), (2, 56), (3, 1))
    scans = {
        "w2_common_22": dict(pair_scan(2, (2, 2))),
        "w1_common_11": dict(pair_scan(1, (1, 1))),
        "w1_common_10": dict(pair_scan(1, (1, 0))),
    }
    ok = (
        list(profiles) == [expected]
        and set(scans["w2_common_22"]) == {1}
        and set(scans["w1_common_11"]) == {60}
        and set(scans["w1_common_10"]) == {32}
    )
    payload = {
        "vertices": 240,
        "degree_profiles": {str(dict(k)): v for k, v in profiles.items()},
        "pair_scans": {k: {str(c): n for c, n in v.items()} for k, v in scans.items()},
        "ok": ok,
    }
    _emit(args, payload)
    return 0 if ok else 1


def cmd_clique(args) -> int:
    from .egraph import CliqueQuery, build_graph, eleven_extends, is_Kn, max_clique

    g = build_graph()
    if args.exhaustive_11_check or args.sampled_11_check:
        t = time.time()
        rep = eleven_extends(g, samples=args.samples, seed=args.seed, exhaustive=args.exhaustive_11_check)
        payload = {
            "mode": rep.mode,
            "samples": rep.samples,
            "extended": rep.extended,
            "distinct": rep.distinct,
            "counterexamples": rep.counterexamples,
            "ok": rep.ok,
            "seconds": round(time.time() - t, 2),
        }
        _emit(args, payload)
        return 0 if rep.ok else 1
    allowed = {int(x) for x in args.weights.split(",")}
    if args.find_size:
        q = CliqueQuery(allowed, mode="find_one_of_size", size=args.find_size, jobs=_jobs(args))
    else:
        q = CliqueQuery(allowed, jobs=_jobs(args))
    t = time.time()
    res = max_clique(g, q)
    kn = is_Kn(g, res.witness) if res.found else None
    payload = {
        "allowed": sorted(allowed),
        "size": res.size,
        "found": res.found,
        "witness": res.witness,
        "witness_verified": res.found and g.is_clique(res.witness, allowed),
        "Kn": kn if kn else None,
        "nodes": res.nodes,
        "tasks": res.tasks,
        "seconds": round(time.time() - t, 2),
    }
    if args.expect is not None:
        payload["expected"] = args.expect
    _emit(args, payload)
    if args.expect is not None and res.size != args.expect:
        return 1
    return 0 if (res.found or not args.find_size) else 1


def _parse_index_set(text: str) -> list[int]:
    from .picard import PicClass, index_of

    out = []
    for part in text.split(" "):
        part = part.strip()
        if not part:
            continue
        out.append(index_of(PicClass.parse(part)) if ";" in part else int(part))
    return out


def cmd_weyl(args) -> int:
    from .picard import PicClass, class_at, index_of
    from .weyl import find_isometry, orbit, simple_reflections

    if args.action == "orbit":
        start = index_of(PicClass.parse(args.start)) if ";" in args.start else int(args.start)
        orb = orbit(start)
        refl = simple_reflections()
        preserved = all(r.preserves_pairing() for r in refl)
        payload = {"start": str(class_at(start)), "orbit_size": len(orb), "reflections_preserve_pairing": preserved}
        _emit(args, payload)
        return 0 if preserved and len(orb) == 240 else 1
    src, dst = _parse_index_set(args.src), _parse_index_set(args.dst)
    perm = find_isometry(src, dst)
    ok = perm is not None and perm.preserves_pairing() and perm.apply_set(src) == sorted(set(dst))
    payload = {"src": sorted(src), "dst": sorted(dst), "found": perm is not None, "verified": ok}
    if perm is not None and args.show_map:
        payload["images"] = list(perm.images)
    _emit(args, payload)
    return 0 if ok else 1


def cmd_verify_example(args) -> int:
    from .fixtures import fixture_ids
    from .verify import verify_example

    ids = fixture_ids() if args.id == "all" else [args.id]
    reports, rc = [], 0
    for fid in ids:
        try:
            rep = verify_example(fid, strict=False)
        except KeyError as exc:
            print(str(exc), file=sys.stderr)
            return 2
        reports.append(rep.to_json())
        if not rep.ok:
            rc = 1
    if args.format == "json":
        _emit(args, {"examples": reports, "ok": rc == 0})
    else:
        for r in reports:
            print(f"{r['id']:8s} {r['status']:8s} count={r['count']} ramified={r['on_ramification']}")
    return rc


def cmd_check_identities(args) -> int:
    from .identities import DEFAULT_PRIME, run_suite

    rep = run_suite(which=args.which, samples=args.samples, p=args.prime or DEFAULT_PRIME, seed=args.seed)
    payload = rep.to_json()
    if args.format == "json":
        _emit(args, payload)
    else:
        for r in payload["identities"]:
            print(f"{r['name']:32s} {'PASS' if r['ok'] else 'FAIL'}")
        for r in payload["loci"]:
            print(f"{r['name']:32s} {'PASS' if r['ok'] else 'FAIL'}")
        if payload["ratio"]:
            print(f"{'KEY1-RATIO':32s} {'PASS' if payload['ratio']['ok'] else 'FAIL'}")
        for r in payload["printed_findings"]:
            print(f"{r['name']:32s} {'holds' if r['holds'] else 'does not hold'} (as printed)")
    return 0 if rep.ok else 1


def cmd_interpolate(args) -> int:
    from .picard import PicClass
    from .plane import exceptional_curve, general_position

    cfg = _load_config(args.points)
    gp = general_position(cfg)
    if not gp.ok:
        _emit(args, {"general_position": False, "violation": str(gp.violation)})
        return 1
    c = PicClass.parse(args.cls)
    curve = exceptional_curve(cfg, c)
    payload = {"class": str(c), "curve": curve.canonical().to_json() if hasattr(curve, "canonical") else str(curve)}
    _emit(args, payload, str(curve.canonical()) if hasattr(curve, "canonical") else str(curve))
    return 0


def cmd_count(args) -> int:
    from .plane import concurrency_count, general_position, parse_point
    from .search import theorem_bound

    cfg = _load_config(args.points)
    gp = general_position(cfg)
    if not gp.ok:
        _emit(args, {"general_position": False, "violation": str(gp.violation)})
        return 1
    P = parse_point(cfg.field, args.at)
    rep = concurrency_count(cfg, P)
    bound = theorem_bound(cfg.field.characteristic, rep.on_ramification)
    payload = rep.to_json() | {"general_position": True, "bound": bound, "critical": rep.count > bound}
    _emit(args, payload)
    return 1 if rep.count > bound else 0


def cmd_search(args) -> int:
    from .search import SearchConfig, search

    cfg = SearchConfig(
        field=args.field,
        trials=args.trials,
        target=args.target,
        seed=args.seed,
        mode=args.mode,
        output=args.output,
        require_unramified=args.unramified,
    )
    t = time.time()
    res = search(cfg, jobs=_jobs(args))
    payload = res.to_json() | {"seconds": round(time.time() - t, 2)}
    if args.format == "json":
        payload["records"] = [json.loads(r.to_json()) for r in res.records]
    _emit(args, payload)
    for r in res.records:
        if r.critical:
            print(f"CRITICAL: count {r.count} in trial {r.trial}", file=sys.stderr)
    return 1 if res.critical else 0


def cmd_ten_curves(args) -> int:
    from .search import ten_curve_trials

    rep = ten_curve_trials(args.field, configs=args.configs, seed=args.seed, mode=args.mode)
    _emit(args, rep.to_json())
    return 0 if rep.ok else 1


# -- parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="text")
    common.add_argument("--seed", type=int, default=0)

    p = argparse.ArgumentParser(prog="dp1", description="Concurrent exceptional curves on degree-one del Pezzo surfaces")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("classes", parents=[common], help="the 240 exceptional classes")
    s.add_argument("--list", action="store_true")
    s.set_defaults(func=cmd_classes)

    s = sub.add_parser("graph-stats", parents=[common], help="pairing histograms and pair scans")
    s.set_defaults(func=cmd_graph_stats)

    s = sub.add_parser("clique", parents=[common], help="maximum cliques in the weighted graph")
    s.add_argument("--weights", default="1,2,3", help="allowed pairings, comma separated")
    s.add_argument("--find-size", type=int)
    s.add_argument("--expect", type=int, help="fail unless the maximum has this size")
    s.add_argument("--exhaustive-11-check", action="store_true")
    s.add_argument("--sampled-11-check", action="store_true")
    s.add_argument("--samples", type=int, default=10_000)
    s.add_argument("--jobs", type=int)
    s.set_defaults(func=cmd_clique)

    s = sub.add_parser("weyl", parents=[common], help="orbits and isometries")
    s.add_argument("action", choices=("orbit", "map"))
    s.add_argument("--start", default="0")
    s.add_argument("--src", default="", help="space separated indices or classes 'a;b1,..'")
    s.add_argument("--dst", default="")
    s.add_argument("--show-map", action="store_true")
    s.set_defaults(func=cmd_weyl)

    s = sub.add_parser("verify-example", parents=[common], help="re-derive a worked example")
    s.add_argument("id", help="example id, or 'all'")
    s.set_defaults(func=cmd_verify_example)

    s = sub.add_parser("check-identities", parents=[common], help="randomized polynomial identity checks")
    s.add_argument("--which", choices=("all", "key1", "key2"), default="all")
    s.add_argument("--samples", type=int, default=200)
    s.add_argument("--prime", type=int)
    s.set_defaults(func=cmd_check_identities)

    s = sub.add_parser("interpolate", parents=[common], help="plane model of one exceptional class")
    s.add_argument("--points", required=True, help="JSON file with 'field' and 'points'")
    s.add_argument("--class", dest="cls", required=True)
    s.set_defaults(func=cmd_interpolate)

    s = sub.add_parser("count", parents=[common], help="exceptional curves through a point")
    s.add_argument("--points", required=True)
    s.add_argument("--at", required=True, help="point as x:y:z")
    s.set_defaults(func=cmd_count)

    s = sub.add_parser("search", parents=[common], help="random configuration search")
    s.add_argument("--field", required=True)
    s.add_argument("--trials", type=int, default=100)
    s.add_argument("--target", type=int, default=10)
    s.add_argument("--mode", choices=("family", "random", "key2"), default="family")
    s.add_argument("--unramified", action="store_true", help="keep only points off the ramification curve")
    s.add_argument("--output", help="JSON-lines file to append records to")
    s.add_argument("--jobs", type=int)
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("ten-curves", parents=[common], help="sampled non-concurrency of the ten curves")
    s.add_argument("--field", required=True)
    s.add_argument("--configs", type=int, default=1000)
    s.add_argument("--mode", choices=("random", "key2"), default="random")
    s.set_defaults(func=cmd_ten_curves)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except FixtureMismatch as exc:
        print(f"fixture mismatch: {exc}", file=sys.stderr)
        return 1
    except Dp1Error as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
