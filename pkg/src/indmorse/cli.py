"""Command-line entry point.

Exit status: 0 success, 1 a checked inequality failed, 2 bad input or an
unmet precondition, 3 a resource cap was hit.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from contextlib import contextmanager

from . import bounds
from .complex import DEFAULT_FACE_CAP, FIELDS, betti_numbers, build_complex
from .cycles import DEFAULT_CYCLE_CAP, analyze
from .errors import IndMorseError, InputError, ResourceError, VerificationError
from .io import FAMILY_HELP, family, read_graph_file
from .lucas import lucas, lucas_sweep
from .morse import MorseEngine, is_acyclic, is_valid_matching, main_bound
from .verify import verify_corpus

EXIT_OK, EXIT_VERIFY, EXIT_INPUT, EXIT_RESOURCE = 0, 1, 2, 3

log = logging.getLogger("indmorse")


def _load(args):
    if args.family and args.graph:
        raise InputError("give either a graph file or --family, not both")
    if args.family:
        return family(args.family), args.family
    if args.graph:
        return read_graph_file(args.graph), args.graph
    raise InputError("no input graph; pass a file path or --family SPEC")


@contextmanager
def _sink(path):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w") as fh:
            yield fh


def _emit(args, obj):
    with _sink(args.output) as out:
        if isinstance(obj, str):
            out.write(obj + "\n")
        elif isinstance(obj, list):
            for line in obj:
                out.write(json.dumps(line, sort_keys=False) + "\n")
        else:
            out.write(json.dumps(obj) + "\n")


# commands ----------------------------------------------------------------------


def cmd_betti(args) -> int:
    g, name = _load(args)
    rep = betti_numbers(build_complex(g, args.face_cap), args.field)
    _emit(args, rep.to_json(name))
    return EXIT_OK


def _certify(args, g, emit_matching):
    engine = MorseEngine(cycle_cap=args.cycle_cap)
    cert = main_bound(g, engine)
    b = betti_numbers(build_complex(g, args.face_cap), args.field).total
    out = {"graph": None, "betti_total": b, **cert.to_json(emit_matching)}
    ok = b <= cert.bound
    if emit_matching:
        m = cert.matching
        valid = is_valid_matching(m)
        acyclic = valid and is_acyclic(m)
        out["valid"], out["acyclic"] = valid, acyclic
        ok = ok and acyclic and m.num_critical == cert.bound
    return cert, out, ok


def cmd_bound(args) -> int:
    g, name = _load(args)
    _, out, ok = _certify(args, g, args.emit_matching)
    out["graph"] = name
    _emit(args, out)
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_matching(args) -> int:
    g, name = _load(args)
    _, out, ok = _certify(args, g, True)
    out["graph"] = name
    _emit(args, out)
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_verify_corollary(args) -> int:
    g, name = _load(args)
    cert, rep, ok = _certify(args, g, args.emit_matching)
    k = cert.args[0]
    out = {
        "graph": name,
        "k": k,
        "bound": cert.bound,
        "product_bound": cert.nominal,
        "betti_total": rep["betti_total"],
    }
    if k >= 2:
        cb = bounds.corollary_bound(k)
        out["comparator"] = cb.indicative
        out["note"] = cb.note
    ok = ok and cert.bound <= cert.nominal
    out["passed"] = ok
    _emit(args, out)
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_lucas_sweep(args) -> int:
    checked, bad = lucas_sweep(args.n)
    if bad is None:
        _emit(args, f"verified {checked} sequences ≤ ℓ({args.n})={lucas(args.n)}")
        return EXIT_OK
    s, why = bad
    _emit(args, f"counterexample {''.join(map(str, s))}: {why}")
    return EXIT_VERIFY


def cmd_analyze(args) -> int:
    g, name = _load(args)
    _emit(args, {"graph": name, **analyze(g).to_json(g)})
    return EXIT_OK


def cmd_bounds(args) -> int:
    if args.what == "table":
        _emit(args, bounds.format_table(bounds.comparison_table(args.kmax)))
    elif args.what == "threshold":
        _emit(args, repr(bounds.ramanujan_threshold(args.n, args.chi)))
    elif args.what == "planar":
        pb = bounds.planar_lower_bound(args.m)
        _emit(args, {"m": pb.m, "exponent": float(pb.exponent), "value": pb.value, "vacuous": pb.vacuous})
    else:
        cb = bounds.corollary_bound(args.k)
        _emit(args, {"k": cb.k, "exact": cb.exact, "indicative": cb.indicative, "note": cb.note})
    return EXIT_OK


def cmd_verify(args) -> int:
    rep = verify_corpus(args.vertex_cap, args.sample, args.seed, lucas_max=args.lucas_max,
                        face_cap=args.face_cap)
    if args.table:
        _emit(args, rep.table())
    else:
        _emit(args, rep.json_lines())
    return EXIT_OK if rep.passed else EXIT_VERIFY


# parser --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="indmorse",
        description="Homology and discrete Morse bounds for independence complexes.",
        epilog=FAMILY_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def graph_cmd(name, help_):
        sp = sub.add_parser(name, help=help_, epilog=FAMILY_HELP,
                            formatter_class=argparse.RawDescriptionHelpFormatter)
        sp.add_argument("graph", nargs="?", help="edge-list file (or .g6 for graph6)")
        sp.add_argument("--family", help="named family, e.g. cycle:6 (see below)")
        sp.add_argument("--field", choices=FIELDS, default="gf2")
        sp.add_argument("--face-cap", type=int, default=DEFAULT_FACE_CAP)
        sp.add_argument("--cycle-cap", type=int, default=DEFAULT_CYCLE_CAP)
        sp.add_argument("--emit-matching", action="store_true", help="list critical faces and matched pairs")
        sp.add_argument("--output", "-o", help="write here instead of stdout")
        return sp

    graph_cmd("betti", "reduced Betti numbers of Ind(G)").set_defaults(func=cmd_betti)
    graph_cmd("bound", "Morse bound certificate with a homology cross-check").set_defaults(func=cmd_bound)
    graph_cmd("matching", "certificate plus the explicit acyclic matching").set_defaults(func=cmd_matching)
    graph_cmd("verify-corollary", "compare the achieved bound with the cycle-packing product").set_defaults(
        func=cmd_verify_corollary)
    graph_cmd("analyze", "girth, packing and feedback data as JSON").set_defaults(func=cmd_analyze)

    sp = sub.add_parser("lucas-sweep", help="check every constraint sequence of length n")
    sp.add_argument("n", type=int)
    sp.add_argument("--output", "-o")
    sp.set_defaults(func=cmd_lucas_sweep)

    sp = sub.add_parser("bounds", help="closed-form evaluators")
    bsub = sp.add_subparsers(dest="what", required=True)
    t = bsub.add_parser("table")
    t.add_argument("--kmax", type=int, default=10)
    t = bsub.add_parser("threshold")
    t.add_argument("--n", type=int, required=True)
    t.add_argument("--chi", type=int, required=True)
    t = bsub.add_parser("planar")
    t.add_argument("--m", type=int, required=True)
    t = bsub.add_parser("corollary")
    t.add_argument("--k", type=int, required=True)
    for t in bsub.choices.values():
        t.add_argument("--output", "-o")
    sp.set_defaults(func=cmd_bounds)

    sp = sub.add_parser("verify", help="run the property battery over a graph corpus")
    sp.add_argument("--vertex-cap", type=int, default=6)
    sp.add_argument("--sample", type=int, help="random subset of this many graphs")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--lucas-max", type=int, default=9, help="longest constraint sequences to sweep")
    sp.add_argument("--face-cap", type=int, default=DEFAULT_FACE_CAP)
    sp.add_argument("--table", action="store_true", help="plain-text matrix instead of JSON lines")
    sp.add_argument("--output", "-o")
    sp.set_defaults(func=cmd_verify)
    return p


def _check_caps(args):
    for cap in ("face_cap", "cycle_cap"):
        if getattr(args, cap, 1) < 1:
            raise InputError(f"--{cap.replace('_', '-')} must be positive")


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        _check_caps(args)
        return args.func(args)
    except ResourceError as exc:
        log.error("%s", exc)
        return EXIT_RESOURCE
    except VerificationError as exc:
        log.error("%s", exc)
        return EXIT_VERIFY
    except (IndMorseError, OSError) as exc:
        log.error("%s", exc)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
