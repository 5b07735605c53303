"""Command line entry point: ``slitmaps <command> [flags]``."""
import argparse
import sys

from .bijections import CaseTag, MarkedTree, apply_case, case_of, invert_case
from .covered import covered_inverse, covered_suite, from_edges, is_covering
from .enumeration import (
    gen_covered,
    gen_maps,
    gen_maps_of_type,
    gen_marked_trees,
    gen_unicellular,
    verify_eq1_numeric,
    verify_eq2,
    verify_eq3,
)
from .errors import MapError
from .paths import Sign
from .rightmost import psi
from .slide import rotate
from .textio import format_blocks, format_map, parse_blocks
from .torus import classify

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _int_list(text):
    parts = text.replace(",", " ").split()
    try:
        return tuple(int(p) for p in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected integers, got {text!r}") from None


def _sign(text):
    try:
        return Sign.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _blocks(args):
    return parse_blocks(_read(args.input))


def _covering_of(blk):
    if blk.covering is None:
        raise UsageError("input block has no 'covering' line")
    cm = from_edges(blk.map, blk.covering)
    if not is_covering(blk.map, cm.cover):
        raise UsageError("the 'covering' edges do not form a spanning unicellular submap")
    return cm


def _marked(blk, cover=None):
    if blk.marks is None:
        raise UsageError("input block has no 'marks' line")
    return MarkedTree(blk.map, frozenset(blk.marks), cover)


def _emit_marked(t):
    cov = None if t.cover is None else sorted(d for d in t.cover if d < t.tree.iota[d])
    return format_map(t.tree, marks=t.marks, covering=cov)


def _emit_covered(cm):
    return format_map(cm.ambient, covering=cm.covering_edges)


def cmd_enumerate(args, out):
    if args.what == "unicellular":
        items = [format_map(m) for m in gen_unicellular(_need(args.n, "--n"), args.genus)]
    elif args.what == "maps":
        items = [format_map(m) for m in gen_maps(_need(args.n, "--n"), args.genus)]
    elif args.what == "trees":
        items = [_emit_marked(t) for t in gen_marked_trees(_need(args.n, "--n"))]
    elif args.what == "type":
        items = [format_map(m) for m in gen_maps_of_type(_need(args.type, "--type"), _genus(args))]
    else:
        items = [_emit_covered(cm) for cm in gen_covered(_need(args.type, "--type"), _genus(args))]
    out.write(format_blocks(items))
    return EXIT_OK


def _need(value, flag):
    if value is None:
        raise UsageError(f"{flag} is required")
    return value


def _genus(args):
    return 1 if args.genus is None else args.genus


def cmd_classify(args, out):
    for blk in _blocks(args):
        u = blk.map
        if blk.covering is not None:
            u = _covering_of(blk).covering
        out.write(classify(u).summary() + "\n")
    return EXIT_OK


def cmd_rotate(args, out):
    items = []
    for blk in _blocks(args):
        loop = args.loop if args.loop is not None else blk.loop
        if loop is None:
            raise UsageError("give the loop with --loop or a 'loop' line")
        res = rotate(blk.map, loop, args.sign)
        items.append(format_map(res.map, loop=res.loop))
    out.write(format_blocks(items))
    return EXIT_OK


def cmd_psi(args, out):
    out.write(format_blocks([format_map(psi(blk.map, args.sign)) for blk in _blocks(args)]))
    return EXIT_OK


def cmd_bijection(args, out):
    items = []
    for blk in _blocks(args):
        if args.direction == "fwd":
            tag = case_of(blk.map)
            if args.case is not None and str(tag) != args.case:
                raise UsageError(f"map belongs to case {tag}, not {args.case}")
            _, img = apply_case(blk.map)
            items.append(_emit_marked(img) if isinstance(img, MarkedTree) else format_map(img))
        else:
            tag = CaseTag(_need(args.case, "--case"))
            x = _marked(blk) if tag is CaseTag.G else blk.map
            items.append(format_map(invert_case(x, tag)))
    out.write(format_blocks(items))
    return EXIT_OK


def cmd_covered(args, out):
    items = []
    for blk in _blocks(args):
        if args.direction == "fwd":
            cm = _covering_of(blk)
            tag, img = covered_suite(cm)
            if args.case is not None and str(tag) != args.case:
                raise UsageError(f"covered map belongs to cell {tag}, not {args.case}")
            items.append(_emit_marked(img) if isinstance(img, MarkedTree) else _emit_covered(img))
        else:
            tag = _need(args.case, "--case")
            if tag == "g":
                cov = blk.covering or ()
                x = _marked(blk, frozenset(cov) | frozenset(blk.map.iota[e] for e in cov))
            else:
                x = _covering_of(blk)
            items.append(_emit_covered(covered_inverse(tag, x)))
    out.write(format_blocks(items))
    return EXIT_OK


def cmd_verify(args, out):
    reports = []
    if args.identity in ("eq2", "all"):
        ns = [args.n] if args.n is not None else [2, 3, 4, 5]
        reports += [verify_eq2(n, jobs=args.jobs) for n in ns]
    if args.identity in ("eq1", "all"):
        ns = [args.n] if args.n is not None else [1, 2, 3]
        reports += [verify_eq1_numeric(n) for n in ns]
    if args.identity in ("eq3", "all"):
        from .enumeration import even_types

        types = [args.type] if args.type is not None else even_types(4)
        reports += [verify_eq3(a, jobs=args.jobs) for a in types]
    out.write("\n".join(str(r) for r in reports))
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def build_parser():
    p = argparse.ArgumentParser(prog="slitmaps", description="Rooted maps and slit-slide-sew bijections.")
    sub = p.add_subparsers(dest="command", required=True)

    def io(sp):
        sp.add_argument("--input", default="-", help="map file, or - for stdin (default)")

    sp = sub.add_parser("enumerate", help="list maps, marked trees or covered maps")
    sp.add_argument("what", choices=("unicellular", "maps", "trees", "type", "covered"))
    sp.add_argument("--n", type=int)
    sp.add_argument("--genus", type=int)
    sp.add_argument("--type", type=_int_list)
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("classify", help="scheme and loop system of unicellular toroidal maps")
    io(sp)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("rotate", help="slit, slide and sew along a loop")
    io(sp)
    sp.add_argument("--loop", type=_int_list)
    sp.add_argument("--sign", type=_sign, required=True)
    sp.set_defaults(func=cmd_rotate)

    sp = sub.add_parser("psi", help="rotate along the rightmost noncontractible loop")
    io(sp)
    sp.add_argument("--sign", type=_sign, required=True)
    sp.set_defaults(func=cmd_psi)

    sp = sub.add_parser("bijection", help="apply or invert one of the cases a..g")
    io(sp)
    sp.add_argument("--case", choices=tuple("abcdefg"))
    sp.add_argument("--direction", choices=("fwd", "rev"), default="fwd")
    sp.set_defaults(func=cmd_bijection)

    sp = sub.add_parser("covered", help="covered version of the case suite")
    io(sp)
    sp.add_argument("--case", choices=("bip", "psi") + tuple("abcdefg"))
    sp.add_argument("--direction", choices=("fwd", "rev"), default="fwd")
    sp.set_defaults(func=cmd_covered)

    sp = sub.add_parser("verify", help="run an identity check and print its report")
    sp.add_argument("identity", choices=("eq1", "eq2", "eq3", "all"))
    sp.add_argument("--n", type=int)
    sp.add_argument("--type", type=_int_list)
    sp.add_argument("--jobs", type=int, default=1)
    sp.set_defaults(func=cmd_verify)
    return p


def run(argv=None, out=None):
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if getattr(args, "jobs", 1) < 1:
        print("error: --jobs must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args, out)
    except (UsageError, MapError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
