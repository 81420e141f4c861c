"""``matflat`` command-line interface."""

import argparse
import json
import logging
import sys

from . import serialize
from .bits import bits, to_list
from .errors import FormatError, MatflatError, NotInClass, ResourceLimit
from .flats import DEFAULT_CAP, enumerate_flats, predicted_level_bound
from .geometry import build_ag, build_blokhuis, build_pg, build_pg_plus_free_point, build_uniform
from .gf import moduli_table
from .matroid import contract, delete, is_gfq_representable_rank_le3, is_simple, simplify
from .minors import check_kung, check_whitney_bound, corollary_check, max_line_length
from .qbinom import qbinom_product, qbinom_recursive
from .verify import summarize, verify_paper

EX_OK = 0
EX_FAIL = 1
EX_VIOLATED = 2
EX_USAGE = 64
EX_NOINPUT = 66
EX_UNAVAILABLE = 69


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EX_USAGE)


COMMON_DEFAULTS = {"format": "table", "threads": 1, "cap": DEFAULT_CAP, "verbose": False}


def _int_list(text):
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def build_parser():
    # Shared options may appear before or after the subcommand.
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("table", "json"), default=argparse.SUPPRESS)
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS,
                        help="worker processes for flat enumeration")
    common.add_argument("--cap", type=int, default=argparse.SUPPRESS, help="flat-count limit per level")
    common.add_argument("-v", "--verbose", action="store_true", default=argparse.SUPPRESS)

    parser = _Parser(prog="matflat", parents=[common],
                     description="Flats, Whitney numbers and U_{2,n}-minors of small matroids.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    minor_opts = _Parser(add_help=False)
    minor_opts.add_argument("--contract", type=_int_list, default=[], metavar="E,E,...")
    minor_opts.add_argument("--delete", type=_int_list, default=[], metavar="E,E,...")
    minor_opts.add_argument("--simplify", action="store_true")

    p = sub.add_parser("construct", parents=[common], help="build a named geometry as matroid JSON")
    p.add_argument("family", choices=("pg", "ag", "blokhuis", "pgfree", "uniform"))
    p.add_argument("--r", type=int, default=3, help="rank (pg, ag, uniform)")
    p.add_argument("--q", type=int, help="field size")
    p.add_argument("--n", type=int, help="ground-set size (uniform)")
    p.add_argument("-o", "--output", help="output path (default stdout)")

    p = sub.add_parser("flats", parents=[common, minor_opts], help="count or list flats")
    p.add_argument("file")
    p.add_argument("--k", type=int, help="rank of flats (default: all ranks)")
    p.add_argument("--list", action="store_true", help="print the flats themselves")

    p = sub.add_parser("qbinom", parents=[common], help="Gaussian binomial coefficient [r k]_q")
    p.add_argument("q", type=int)
    p.add_argument("r", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--method", choices=("product", "recursive"), default="product")

    p = sub.add_parser("minor", parents=[common, minor_opts], help="longest U_{2,n}-minor")
    p.add_argument("file")
    p.add_argument("--max-line", action="store_true", required=True)
    p.add_argument("--early-exit", type=int)
    p.add_argument("--histogram", action="store_true")

    p = sub.add_parser("check", parents=[common, minor_opts], help="check the U(l) bounds")
    p.add_argument("file")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--k", type=int, help="rank of flats (default: every k)")

    p = sub.add_parser("corollary", parents=[common], help="rank-3 counterexample chain for q > 125")
    p.add_argument("q", type=int)

    p = sub.add_parser("info", parents=[common, minor_opts], help="summary of a matroid file")
    p.add_argument("file")
    p.add_argument("--gf", type=int, metavar="Q", help="test GF(Q)-representability (rank <= 3)")

    sub.add_parser("moduli", parents=[common], help="print the default GF(q) moduli table")

    p = sub.add_parser("verify-paper", parents=[common], help="run every desk-checkable claim")
    p.add_argument("--profile", choices=("quick", "full"), default="quick")
    p.add_argument("--out", help="write the JSON report here instead of stdout")
    return parser


def _emit(args, obj, table):
    if args.format == "json":
        print(json.dumps(obj, indent=2))
    else:
        print(table)


def _load(args):
    try:
        M = serialize.load_matroid(args.file)
    except OSError as exc:
        raise FileNotFoundError(str(exc)) from None
    if getattr(args, "contract", None):
        M = contract(M, args.contract)
    if getattr(args, "delete", None):
        M = delete(M, args.delete)
    if getattr(args, "simplify", False):
        M, _ = simplify(M)
    return M


def cmd_construct(args):
    if args.family == "uniform":
        if args.n is None:
            raise UsageError("uniform needs --n")
        M = build_uniform(args.r, args.n)
    else:
        if args.q is None:
            raise UsageError(f"{args.family} needs --q")
        M = {
            "pg": lambda: build_pg(args.r, args.q),
            "ag": lambda: build_ag(args.r, args.q),
            "blokhuis": lambda: build_blokhuis(args.q),
            "pgfree": lambda: build_pg_plus_free_point(args.q),
        }[args.family]()
    if args.output:
        serialize.dump_matroid(M, args.output)
    else:
        print(serialize.dumps(M))
    return EX_OK


def cmd_flats(args):
    M = _load(args)
    r = M.full_rank
    top = r if args.k is None else args.k
    if not 0 <= top <= r:
        raise UsageError(f"--k must lie in 0..{r}")
    if args.format == "table":
        print(f"# predicted W_{top} <= {predicted_level_bound(M, top)}", file=sys.stderr)
    lv = enumerate_flats(M, top, cap=args.cap, workers=args.threads)
    ks = range(r + 1) if args.k is None else [args.k]
    if args.format == "json":
        out = {"rank": r, "whitney": {str(k): len(lv.levels[k]) for k in ks}}
        if args.list:
            out["flats"] = {str(k): [to_list(F) for F in lv.levels[k]] for k in ks}
        print(json.dumps(out, indent=2))
        return EX_OK
    for k in ks:
        if args.list:
            for F in lv.levels[k]:
                print(to_list(F))
        elif args.k is None:
            print(f"W_{k}\t{len(lv.levels[k])}")
        else:
            print(len(lv.levels[k]))
    return EX_OK


def cmd_qbinom(args):
    if args.q < 2 or args.r < 0:
        raise UsageError("need q >= 2 and r >= 0")
    fn = qbinom_product if args.method == "product" else qbinom_recursive
    v = fn(args.q, args.r, args.k).value
    _emit(args, {"q": args.q, "r": args.r, "k": args.k, "value": str(v)}, str(v))
    return EX_OK


def cmd_minor(args):
    M = _load(args)
    lv = enumerate_flats(M, cap=args.cap, workers=args.threads)
    rep = max_line_length(M, early_exit_at=args.early_exit, levels=lv, histogram=args.histogram)
    if args.format == "json":
        print(json.dumps(rep.to_dict(), indent=2))
    else:
        print(rep.max_line_length)
        if args.verbose and rep.witness:
            F, G = rep.witness
            print(f"# contract {to_list(F)}, restrict to {to_list(G)}", file=sys.stderr)
    return EX_OK


def cmd_check(args):
    M = _load(args)
    lv = enumerate_flats(M, cap=args.cap, workers=args.threads)
    try:
        kung = check_kung(M, args.ell, lv)
    except NotInClass as exc:
        witness = max_line_length(M, levels=lv).to_dict()
        print(json.dumps({"in_class": False, "ell": args.ell, "reason": str(exc), "minor": witness}, indent=2))
        return EX_FAIL
    ks = range(M.full_rank + 1) if args.k is None else [args.k]
    if args.k is not None and not 0 <= args.k <= M.full_rank:
        raise UsageError(f"--k must lie in 0..{M.full_rank}")
    reps = [check_whitney_bound(M, args.ell, k, lv) for k in ks]
    violated = [r for r in reps if not r.passed] + ([] if kung.passed else [kung])
    if violated:
        print(json.dumps({"in_class": True, "violations": [r.to_dict() for r in violated]}, indent=2))
        return EX_VIOLATED
    if args.format == "json":
        print(json.dumps({"in_class": True, "kung": kung.to_dict(), "whitney": [r.to_dict() for r in reps]},
                         indent=2))
    else:
        print(f"kung\tW_1={kung.values['W_1']}\tbound={kung.values['bound']}\tholds")
        for r in reps:
            v = r.values
            print(f"k={v['k']}\tW_k={v['W_k']}\t[{v['rank']} {v['k']}]_{v['q']}={v['bound']}\tholds")
    return EX_OK


def cmd_corollary(args):
    rep = corollary_check(args.q)
    if args.format == "json":
        print(json.dumps(rep.to_dict(), indent=2))
    else:
        v = rep.values
        print(f"q={v['q']} q'={v['q_prime']} W_2={v['W_2']} [3 2]_q={v['qbinom_3_2']} {rep.status}")
    return EX_OK if rep.passed else EX_FAIL


def cmd_info(args):
    M = _load(args)
    lv = enumerate_flats(M, min(1, M.full_rank), cap=args.cap)
    info = {
        "kind": M.kind,
        "size": M.size,
        "rank": M.full_rank,
        "W_1": len(lv.levels[1]) if M.full_rank else 0,
        "simple": is_simple(M),
        "loops": list(bits(M.loops())),
    }
    if args.gf is not None:
        info[f"GF({args.gf})-representable"] = is_gfq_representable_rank_le3(M, args.gf)
    _emit(args, info, "\n".join(f"{k}\t{v}" for k, v in info.items()))
    return EX_OK


def cmd_moduli(args):
    print(moduli_table(), end="")
    return EX_OK


def cmd_verify(args):
    reports = verify_paper(args.profile, cap=args.cap)
    doc = summarize(reports, args.profile)
    text = json.dumps(doc, indent=2)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    if args.format == "json" and not args.out:
        print(text)
    else:
        for r in reports:
            print(f"{r.status.upper():8s}{r.claim_id:32s}{_brief(r.values)}")
        s = doc["summary"]
        print(f"{s['pass']} passed, {s['fail']} failed, {s['skipped']} skipped")
    return EX_FAIL if doc["summary"]["fail"] else EX_OK


def _brief(values):
    keys = ("r", "q", "k", "computed", "expected", "failures", "reason")
    return " ".join(f"{k}={values[k]}" for k in keys if k in values and values[k] not in ([], None))


COMMANDS = {
    "construct": cmd_construct,
    "flats": cmd_flats,
    "qbinom": cmd_qbinom,
    "minor": cmd_minor,
    "check": cmd_check,
    "corollary": cmd_corollary,
    "info": cmd_info,
    "moduli": cmd_moduli,
    "verify-paper": cmd_verify,
}


def run(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    # Parent-parser actions are shared objects, so defaults are filled in here.
    for key, value in COMMON_DEFAULTS.items():
        if not hasattr(args, key):
            setattr(args, key, value)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"matflat: {exc}", file=sys.stderr)
        return EX_USAGE
    except (FileNotFoundError, FormatError) as exc:
        print(f"matflat: {exc}", file=sys.stderr)
        return EX_NOINPUT
    except ResourceLimit as exc:
        print(f"matflat: {exc}", file=sys.stderr)
        return EX_UNAVAILABLE
    except (MatflatError, ValueError) as exc:
        print(f"matflat: {exc}", file=sys.stderr)
        return EX_USAGE


def main():
    sys.exit(run())
