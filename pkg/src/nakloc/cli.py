"""Command-line surface.

Exit codes: 0 ok, 1 verification failure, 2 usage error.  Output is
byte-identical across runs for identical invocations; timings only appear
under --timing.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from pathlib import Path

from .algebra import (
    NakayamaAlgebra,
    module_label,
    parse_algebra,
    parse_modules,
    sort_modules,
)
from .arcs import (
    count_noncrossing,
    enumerate_arc_diagrams,
    to_arc_diagram,
    _uniform_family,
)
from .localise import Localisation, canonicalise, enumerate_uniloc, hasse_uniloc
from .subcats import enumerate_orth_collections, enumerate_torsion_classes, enumerate_wide
from .tautilt import enumerate_stt, hasse_stt, sigma_prime
from .verify import run_battery


def _labels(algebra: NakayamaAlgebra, mods) -> list[str]:
    return [module_label(algebra, x) for x in sort_modules(mods)]


def loc_report(algebra: NakayamaAlgebra, loc: Localisation, sigma=None) -> dict:
    report = {
        "sigma": _labels(algebra, sigma) if sigma is not None else None,
        "trivial_set": _labels(algebra, loc.trivial),
        "w": _labels(algebra, loc.w),
        "w_tilde": _labels(algebra, loc.wtilde),
        "collection_mainnak": _labels(algebra, loc.mainnak_collection),
        "simples": _labels(algebra, loc.simples),
        "B": loc.algebra.as_json(),
        "AB": [module_label(algebra, x) for x in loc.ab],
        "dim_AB": loc.dim_ab,
        "flags": loc.flags,
    }
    return report


def cmd_localise(args) -> int:
    algebra = parse_algebra(args.algebra)
    sigma = parse_modules(algebra, args.sigma)
    start = time.perf_counter()
    loc = canonicalise(algebra, sigma)
    report = loc_report(algebra, loc, sigma)
    if args.timing:
        report["seconds"] = time.perf_counter() - start
    print(json.dumps(report))
    return 0


def _enumeration_lines(algebra: NakayamaAlgebra, what: str) -> list[str]:
    if what == "uniloc":
        return [json.dumps(loc_report(algebra, loc)) for loc in enumerate_uniloc(algebra)]
    if what == "homological":
        return [
            json.dumps(loc_report(algebra, loc))
            for loc in enumerate_uniloc(algebra)
            if loc.homological
        ]
    if what == "stt":
        return [json.dumps(stt.as_json(algebra)) for stt in enumerate_stt(algebra)]
    if what == "torsion":
        return [json.dumps(_labels(algebra, t)) for t in enumerate_torsion_classes(algebra)]
    if what == "wide":
        return [json.dumps(_labels(algebra, w)) for w in enumerate_wide(algebra)]
    if what == "orth":
        return [json.dumps(_labels(algebra, c)) for c in enumerate_orth_collections(algebra)]
    if what == "arcs":
        shape, n, h = _uniform_family(algebra)
        return [json.dumps(d.as_json()) for d in enumerate_arc_diagrams(shape, n, h)]
    raise ValueError(f"unknown enumeration {what!r}")


def cmd_enumerate(args) -> int:
    algebra = parse_algebra(args.algebra)
    cache_file = None
    if args.cache:
        key = hashlib.sha256(f"{algebra.as_text()}|{args.what}".encode()).hexdigest()[:24]
        cache_file = Path(args.cache) / f"enumerate-{key}.jsonl"
        if cache_file.exists():
            sys.stdout.write(cache_file.read_text())
            return 0
    lines = _enumeration_lines(algebra, args.what)
    payload = "".join(line + "\n" for line in lines) + json.dumps({"count": len(lines)}) + "\n"
    if cache_file is not None:
        cache_file.parent.mkdir(parents=True, exist_ok=True)
        cache_file.write_text(payload)
    sys.stdout.write(payload)
    return 0


def cmd_hasse(args) -> int:
    algebra = parse_algebra(args.algebra)
    quiver = hasse_stt(algebra) if args.what == "stt" else hasse_uniloc(algebra)
    if args.format == "json":
        print(json.dumps(quiver.as_json()))
    else:
        print(quiver.as_dot(name=f"hasse_{args.what}"))
    return 0


def cmd_stt(args) -> int:
    algebra = parse_algebra(args.algebra)
    for stt in enumerate_stt(algebra):
        if args.format == "json":
            entry = stt.as_json(algebra)
            entry["sigma_prime"] = _labels(algebra, sigma_prime(algebra, stt))
            print(json.dumps(entry))
        else:
            killed = "{" + ",".join(str(v) for v in sorted(stt.killed)) + "}"
            print(f"{stt.label(algebra)} | support:{killed}")
    return 0


def cmd_arcs(args) -> int:
    algebra = parse_algebra(args.algebra)
    shape, n, h = _uniform_family(algebra)
    if args.count:
        print(count_noncrossing(shape, n, h))
        return 0
    if args.of_sigma is not None:
        sigma = parse_modules(algebra, args.of_sigma)
        loc = canonicalise(algebra, sigma)
        diagram = to_arc_diagram(algebra, loc.wtilde)
        if args.format == "ascii":
            print(diagram.as_ascii())
        else:
            print(json.dumps(diagram.as_json()))
        return 0
    for diagram in enumerate_arc_diagrams(shape, n, h):
        if args.format == "ascii":
            print(diagram.as_ascii())
            print()
        else:
            print(json.dumps(diagram.as_json()))
    return 0


def cmd_verify(args) -> int:
    t0 = time.perf_counter()
    total = [0]

    def progress(name, fails):
        total[0] += 1
        status = "ok" if not fails else f"FAIL ({len(fails)})"
        print(f"{name:<28} {status}")

    failures = run_battery(
        args.nmax, args.hmax, oracle_checks=args.oracle, progress=progress
    )
    for failure in failures:
        print(f"  {failure}")
    summary = f"{total[0]} algebras checked, {len(failures)} failures"
    if args.timing:
        summary += f" in {time.perf_counter() - t0:.1f}s"
    print(summary)
    return 1 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nakloc",
        description="Universal localisations, torsion classes and tau-tilting "
        "modules of Nakayama algebras, exactly.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_algebra(p):
        p.add_argument("-A", "--algebra", required=True, help="line:n,h | cycle:n,h | kupisch:... | JSON")

    p = sub.add_parser("localise", help="canonicalise one localisation")
    add_algebra(p)
    p.add_argument("-S", "--sigma", default="", help='modules, e.g. "M(2,1),S1"')
    p.add_argument("--timing", action="store_true")
    p.set_defaults(func=cmd_localise)

    p = sub.add_parser("enumerate", help="stream one JSON line per object")
    add_algebra(p)
    p.add_argument(
        "--what",
        required=True,
        choices=["uniloc", "stt", "torsion", "wide", "orth", "arcs", "homological"],
    )
    p.add_argument("--cache", help="directory memoising enumeration output")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("hasse", help="Hasse quiver of a partial order")
    add_algebra(p)
    p.add_argument("--what", required=True, choices=["stt", "uniloc"])
    p.add_argument("--format", default="dot", choices=["dot", "json"])
    p.set_defaults(func=cmd_hasse)

    p = sub.add_parser("stt", help="list support tau-tilting modules")
    add_algebra(p)
    p.add_argument("--format", default="text", choices=["text", "json"])
    p.set_defaults(func=cmd_stt)

    p = sub.add_parser("arcs", help="non-crossing arc diagrams (uniform families)")
    add_algebra(p)
    p.add_argument("--count", action="store_true")
    p.add_argument("--of-sigma", help="diagram of the localisation at these modules")
    p.add_argument("--format", default="json", choices=["json", "ascii"])
    p.set_defaults(func=cmd_arcs)

    p = sub.add_parser("verify", help="run the exhaustive invariant battery")
    p.add_argument("nmax", type=int)
    p.add_argument("hmax", type=int)
    p.add_argument("--oracle", action="store_true", help="include linear-algebra sweeps")
    p.add_argument("--timing", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, AssertionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
