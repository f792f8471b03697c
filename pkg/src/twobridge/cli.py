"""Command line front end.

Subcommands
-----------
cf <q/p>           even continued fraction expansion
profile <q/p>      genus, equivariant genera, symmetry attributes
classify <q/p>     symmetry type and marked classes
kakimizu <q/p>     the Kakimizu complex and its involution actions
table              compute and render the knot catalog
verify             run the full property suite
gap <g> <ghat>     witness with (genus, equivariant genus) = (g, ghat)
arc-gap <d>        witness with short-arc minus long-arc genus = d

All numeric output is exact (integers and fractions).  Exit codes:
0 success, 1 validation error, 2 property-suite failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import catalog, genera, kakimizu, slopes
from .verify import run_verify


def _slope_arg(text: str) -> slopes.Slope:
    return catalog.parse_fraction(text)


def _profile_dict(s: slopes.Slope) -> dict:
    prof = genera.genus_profile(s)
    return {
        "p": s.p,
        "q": s.q,
        "qprime": slopes.inverse_slope(s).q,
        "cf": list(slopes.expand_even_cf(s).entries),
        "genus": prof.genus,
        "symmetry": prof.symmetry_type.value,
        "genera": [[mc.label, v] for mc, v in prof.entries],
        "attributes": list(catalog.compute_record("-", s).attribute_list),
    }


def _cmd_cf(args) -> int:
    print(slopes.expand_even_cf(_slope_arg(args.fraction)))
    return 0


def _cmd_profile(args) -> int:
    s = _slope_arg(args.fraction)
    info = _profile_dict(s)
    if args.json:
        print(json.dumps(info, indent=2))
        return 0
    print(f"slope {s}   q' = {info['qprime']}")
    print(f"cf {slopes.format_cf(info['cf'])}")
    print(f"genus {info['genus']}")
    print(f"symmetry {info['symmetry']}")
    for label, value in info["genera"]:
        print(f"g[{label}] = {value}")
    if info["attributes"]:
        print("attributes " + " ".join(info["attributes"]))
    return 0


def _cmd_classify(args) -> int:
    s = _slope_arg(args.fraction)
    sym, classes = genera.classify_marked_classes(s)
    print(f"slope {s}: {sym.value}, {len(classes)} marked classes")
    for mc in classes:
        print(mc.label)
    return 0


def _cmd_kakimizu(args) -> int:
    s = _slope_arg(args.fraction)
    kc = kakimizu.build_quotient_complex(s, max_n=args.max_n)
    if args.export == "json":
        print(json.dumps(kakimizu.complex_to_dict(kc), indent=2))
        return 0
    if args.export == "graph":
        print(json.dumps(kakimizu.complex_to_graph_dict(kc), indent=2))
        return 0
    print(f"slope {s}: K(n;H) with n = {kc.n}, H = {sorted(kc.hopf.h_set)}")
    print(f"vertices {len(kc.vertices)}")
    print(f"simplices {len(kc.simplices)}")
    print(f"dim {kc.dim}")
    print(f"euler_characteristic {kc.euler_characteristic}")
    rep = kakimizu.involution_h_report(s, kc)
    if rep.fixed_vertex is not None:
        print(f"h-action: fixed vertex {list(rep.fixed_vertex)}")
    else:
        u, v = rep.inverted_edge
        print(f"h-action: inverted edge {list(u)} -- {list(v)}")
    if (s.q * s.q) % s.p == 1:
        hp = kakimizu.involution_hprime_report(s, kc)
        print(f"h'-action: fixed subspace dimension {hp.fixed_subspace_dimension}, "
              f"{len(hp.fixed_vertices)} fixed vertices")
    return 0


def _cmd_table(args) -> int:
    records = catalog.compute_catalog(args.input)
    sys.stdout.write(catalog.render_table(records, args.format))
    return 0


def _cmd_verify(args) -> int:
    ok = run_verify(p_max=args.p_max, out=sys.stdout)
    return 0 if ok else 2


def _cmd_gap(args) -> int:
    s, mc = genera.find_gap_example(args.g, args.ghat)
    print(f"slope {s} class {mc.label}: genus {genera.seifert_genus(s)}, "
          f"equivariant genus {genera.equivariant_genus(s, mc)}")
    return 0


def _cmd_arc_gap(args) -> int:
    s, (short, long_) = genera.find_arc_gap_example(args.d)
    gs = genera.equivariant_genus(s, short)
    gl = genera.equivariant_genus(s, long_)
    print(f"slope {s} inversion {short.inversion.value}: "
          f"short {gs}, long {gl}, difference {gs - gl}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twobridge",
        description="Exact invariants of 2-bridge knots.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cf", help="even continued fraction of a slope")
    p.add_argument("fraction")
    p.set_defaults(fn=_cmd_cf)

    p = sub.add_parser("profile", help="genus and equivariant genera")
    p.add_argument("fraction")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_profile)

    p = sub.add_parser("classify", help="symmetry type and marked classes")
    p.add_argument("fraction")
    p.set_defaults(fn=_cmd_classify)

    p = sub.add_parser("kakimizu", help="Kakimizu complex and involution actions")
    p.add_argument("fraction")
    p.add_argument("--export", choices=["json", "graph"])
    p.add_argument("--max-n", type=int, default=None,
                   help="refuse slopes of genus above this bound")
    p.set_defaults(fn=_cmd_kakimizu)

    p = sub.add_parser("table", help="compute and render the knot catalog")
    p.add_argument("--input", help="CSV with name,fraction columns (default: embedded)")
    p.add_argument("--format", choices=["csv", "json", "latex"], default="csv")
    p.set_defaults(fn=_cmd_table)

    p = sub.add_parser("verify", help="run the full property suite")
    p.add_argument("--p-max", type=int, default=1001)
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("gap", help="genus vs equivariant genus witness")
    p.add_argument("g", type=int)
    p.add_argument("ghat", type=int)
    p.set_defaults(fn=_cmd_gap)

    p = sub.add_parser("arc-gap", help="short-arc vs long-arc genus witness")
    p.add_argument("d", type=int)
    p.set_defaults(fn=_cmd_arc_gap)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
