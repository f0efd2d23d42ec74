"""Command line front end.

Line-oriented key=value output by default, --json where offered.  Exit
codes: 0 success, 1 usage error, 2 data error (unknown entry, bad file),
3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from .affine import (
    affine_to_json_dict,
    shape_box,
    shape_line,
    shape_rectangle,
    twisted_harmonic_exists,
)
from .catalog import default_catalog, entry_by_name
from .dot import hypergraph_to_dot
from .dualgroup import (
    a2n_exception_factors,
    parameter_factors_through_iota,
    sp_embedding_jordan_type,
    steinberg_chi0_distinguished,
    unipotent_criterion,
)
from .errors import OrbitHarmonicsError
from .hypergraph import full_closed_vertices, harmonic_space, support_function, to_json_dict
from .involution import quasi_split_flag
from .rootsystem import (
    character_from_exponents,
    chi0_character,
    fundamental_group,
    trivial_character,
    twisted_character_trivial_on,
)
from .verification import run_verifications

USAGE_EXIT = 1
DATA_EXIT = 2
VERIFY_EXIT = 3


def _bool(x) -> str:
    return "true" if x else "false"


def _entry(name):
    try:
        return entry_by_name(name)
    except KeyError:
        raise SystemExit(_fail(f"unknown catalog entry {name!r}", DATA_EXIT))


def _fail(message, code):
    print(f"error: {message}", file=sys.stderr)
    return code


def _graph_for_mode(entry, mode):
    if mode == "rational":
        if entry.hypergraph_rational is None:
            raise SystemExit(_fail(f"entry {entry.name!r} has no rational-mode graph",
                                   DATA_EXIT))
        return entry.hypergraph_rational
    return entry.hypergraph_closed


def cmd_catalog(args) -> int:
    if args.action == "list":
        for e in default_catalog():
            print(f"name={e.name} quasi_split={_bool(e.expected['quasi_split'])} "
                  f"full_closed_count={e.expected['full_closed_count']} "
                  f"harmonic_dim_closed={e.expected['harmonic_dim_closed']} "
                  f"st_chi0_distinguished={_bool(e.expected['st_chi0_distinguished'])}")
    return 0


def cmd_hypergraph(args) -> int:
    entry = _entry(args.entry)
    g = _graph_for_mode(entry, args.mode)
    print(f"entry={entry.name} mode={g.mode}")
    for v in g.vertices:
        print(f"vertex={v} rank={g.rank_of[v]}")
    for e in g.edges:
        print(f"edge label={e.label} type={e.kind} "
              f"members={','.join(e.sorted_members())}")
    return 0


def cmd_harmonic(args) -> int:
    entry = _entry(args.entry)
    g = _graph_for_mode(entry, args.mode)
    space = harmonic_space(g)
    if args.json:
        print(json.dumps({"entry": entry.name, "mode": g.mode,
                          "dimension": space.dimension,
                          "vertices": list(space.vertices),
                          "basis": [list(v) for v in space.basis]}, indent=2))
        return 0
    print(f"entry={entry.name} mode={g.mode} dimension={space.dimension}")
    for i, vec in enumerate(space.basis):
        terms = " ".join(f"{v}:{c}" for v, c in zip(space.vertices, vec) if c != 0)
        print(f"basis[{i}] {terms}")
    return 0


def cmd_support(args) -> int:
    entry = _entry(args.entry)
    g = _graph_for_mode(entry, args.mode)
    s = support_function(g)
    print(f"entry={entry.name} mode={g.mode} "
          f"full_closed={','.join(s.generators) if s.generators else '-'}")
    for v, combo in s.values:
        text = " ".join(f"{x}:{c}" for x, c in combo) if combo else "0"
        print(f"s[{v}] = {text}")
    return 0


def _parse_character(entry, spec):
    aff = fundamental_group(entry.involution.root_system)
    if spec == "chi0":
        return chi0_character(aff)
    if spec == "trivial":
        return trivial_character(aff)
    try:
        exps = [int(x) for x in spec.split(",")]
    except ValueError:
        raise SystemExit(_fail(f"bad character spec {spec!r}; use 'chi0', 'trivial' "
                               "or comma-separated generator exponents", USAGE_EXIT))
    try:
        return character_from_exponents(aff, entry.involution.root_system.cartan, exps)
    except OrbitHarmonicsError as exc:
        raise SystemExit(_fail(str(exc), USAGE_EXIT))


def cmd_decide(args) -> int:
    entry = _entry(args.entry)
    inv = entry.involution
    out = {
        "entry": entry.name,
        "quasi_split": quasi_split_flag(inv),
        "st_chi0_distinguished": steinberg_chi0_distinguished(inv),
        "dual_unipotent_criterion": unipotent_criterion(inv),
        "dual_parameter_factors": parameter_factors_through_iota(inv),
    }
    jordan = {}
    for k in a2n_exception_factors(inv):
        _, r = inv.root_system.cartan.factors[k]
        jordan[f"factor{k}"] = sp_embedding_jordan_type(r // 2)
    if args.character is not None:
        chi = _parse_character(entry, args.character)
        aff = fundamental_group(inv.root_system)
        verdict = (out["st_chi0_distinguished"]
                   and twisted_character_trivial_on(chi, aff, entry.omega_h))
        out["st_chi_distinguished"] = verdict
        out["character"] = args.character
        if entry.affine is not None:
            fragment_says = twisted_harmonic_exists(
                entry.affine.gamma1_graph, list(entry.affine.h_action), chi,
                entry.affine.stabilizer_map())
            if fragment_says != verdict:
                return _fail(
                    f"twisted fragment check ({fragment_says}) disagrees with the "
                    f"character criterion ({verdict})", VERIFY_EXIT)
    if args.json:
        payload = {k: v for k, v in out.items()}
        payload["jordan_types"] = {k: list(v) for k, v in jordan.items()}
        print(json.dumps(payload, indent=2))
        return 0
    for key, value in out.items():
        if key == "entry":
            print(f"entry={value}")
        elif isinstance(value, bool):
            print(f"{key}={_bool(value)}")
        else:
            print(f"{key}={value}")
    for key, part in jordan.items():
        print(f"jordan_type_{key}={','.join(str(x) for x in part)}")
    return 0


def cmd_verify_all(args) -> int:
    ok, _ = run_verifications(emit=print)
    return 0 if ok else VERIFY_EXIT


def cmd_export(args) -> int:
    entry = _entry(args.entry)
    if args.format == "json":
        text = json.dumps(entry.raw, indent=1, sort_keys=True) + "\n"
    else:
        g = _graph_for_mode(entry, args.mode)
        text = hypergraph_to_dot(g, name=entry.name)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_shape(args) -> int:
    if args.shape == "rectangle":
        if args.rows != 2:
            return _fail("rectangle supports exactly two rows", USAGE_EXIT)
        g = shape_rectangle(args.cols)
    elif args.shape == "box":
        g = shape_box(args.cols)
    else:
        g = shape_line(args.cols, full_base=args.full_base)
    if args.format == "dot":
        sys.stdout.write(hypergraph_to_dot(g.as_hypergraph(), name=args.shape))
    else:
        print(json.dumps(affine_to_json_dict(g), indent=2, sort_keys=True))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orbitharmonics",
        description="orbit hypergraphs of split symmetric pairs: harmonic spaces, "
                    "support functions, and distinction verdicts")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("catalog", help="catalog inspection")
    p.add_argument("action", choices=["list"])
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("hypergraph", help="print a stored hypergraph")
    p.add_argument("action", choices=["show"])
    p.add_argument("entry")
    p.add_argument("--mode", choices=["closed", "rational"], default="closed")
    p.set_defaults(func=cmd_hypergraph)

    p = sub.add_parser("harmonic", help="harmonic space of an entry")
    p.add_argument("entry")
    p.add_argument("--mode", choices=["closed", "rational"], default="closed")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_harmonic)

    p = sub.add_parser("support", help="support function of an entry")
    p.add_argument("entry")
    p.add_argument("--mode", choices=["closed", "rational"], default="closed")
    p.set_defaults(func=cmd_support)

    p = sub.add_parser("decide", help="distinction verdicts for an entry")
    p.add_argument("entry")
    p.add_argument("--character", default=None,
                   help="'chi0', 'trivial', or comma-separated generator exponents")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("verify-all", help="run the whole cross-check battery")
    p.set_defaults(func=cmd_verify_all)

    p = sub.add_parser("export", help="export an entry")
    p.add_argument("entry")
    p.add_argument("--format", choices=["dot", "json"], required=True)
    p.add_argument("--mode", choices=["closed", "rational"], default="closed")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("shape", help="emit an affine shape")
    p.add_argument("shape", choices=["line", "rectangle", "box"])
    p.add_argument("--cols", type=int, required=True)
    p.add_argument("--rows", type=int, default=2)
    p.add_argument("--full-base", action="store_true")
    p.add_argument("--format", choices=["json", "dot"], default="json")
    p.set_defaults(func=cmd_shape)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else USAGE_EXIT
    try:
        return args.func(args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE_EXIT
    except OrbitHarmonicsError as exc:
        return _fail(str(exc), DATA_EXIT)


if __name__ == "__main__":
    raise SystemExit(main())
