"""Command-line front end.

Exit status: 0 on success, 1 when a mathematical check fails or a computation
is refused on the given data, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import contextlib
import sys
from typing import Sequence

from . import green, tform, za
from .category import emit, parse_file, validate
from .errors import (
    DualityViolation,
    FiniteSupportRequired,
    InfiniteOrbit,
    InvalidRim,
    MissingCrossForm,
    ParseError,
    UnknownObject,
    WindowTooSmall,
)
from .laurent import parse_laurent
from .oracle.perfect import dual_numbers_component
from .oracle.uniserial import uniserial_category


class CheckFailed(Exception):
    """A mathematical check ran and failed (exit status 1)."""


def _load(path: str):
    return parse_file(path)


def _laurent_arg(text: str):
    try:
        return parse_laurent(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _nat(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("expected a nonnegative integer")
    return v


# -- category commands ---------------------------------------------------------

def cmd_validate(args, out):
    p = _load(args.file)
    report = validate(p)
    print(report, file=out)
    if not report.ok:
        raise CheckFailed()


def cmd_gram(args, out):
    p = _load(args.file)
    g = green.gram_matrix(p)
    print("objects: " + " ".join(p.display(r) for r in p.enumerate_objects()), file=out)
    print(g, file=out)


def _print_basis(title, elements, p, out):
    print(f"{title}:", file=out)
    if not elements:
        print("  (none)", file=out)
    for x in elements:
        print(f"  {x.format(p)}", file=out)


def cmd_kernel(args, out):
    p = _load(args.file)
    cmp = green.compare_kernels(p)
    _print_basis("closed form", cmp.closed, p, out)
    _print_basis("left kernel", [green.vector_to_element(p, v) for v in cmp.left], p, out)
    _print_basis("right kernel", [green.vector_to_element(p, v) for v in cmp.right], p, out)
    if cmp.equal:
        print("LATTICES EQUAL", file=out)
    else:
        print("LATTICES DIFFER", file=out)
        raise CheckFailed()


def cmd_prop31(args, out):
    p = _load(args.file)
    report = green.check_ar_orthogonality(p)
    print(f"checked {report.checked} pairings over {len(p.triangles)} triangles", file=out)
    if report.fixed_point_triangles:
        idx = " ".join(str(k) for k in report.fixed_point_triangles)
        print(f"shift-fixed end terms (value 2) in triangles: {idx}", file=out)
    for m in report.mismatches:
        print(
            f"MISMATCH triangle {m.triangle}: <{p.display(m.W)}, Z^> = {m.got}, expected {m.expected}",
            file=out,
        )
    if not report.ok:
        raise CheckFailed()
    print("PASS", file=out)


def _objects(p, texts):
    return [tform.canonicalize(p, p.resolve(t)) for t in texts]


def cmd_tform(args, out):
    p = _load(args.file)
    if not p.hypothesis_42:
        raise FiniteSupportRequired(f"category {p.name} does not have finite hom support in the shift")
    x, y = _objects(p, (args.left, args.right))
    print(tform.t_form(p, x, y), file=out)


def cmd_euler(args, out):
    p = _load(args.file)
    if not p.hypothesis_42:
        raise FiniteSupportRequired(f"category {p.name} does not have finite hom support in the shift")
    x, y = _objects(p, (args.left, args.right))
    print(tform.euler_specialization(p, x, y), file=out)


def cmd_dual(args, out):
    p = _load(args.file)
    if not p.hypothesis_42:
        raise FiniteSupportRequired(f"category {p.name} does not have finite hom support in the shift")
    if not 0 <= args.index < len(p.triangles):
        raise UnknownObject(f"triangle {args.index}")
    tr = p.triangles[args.index]
    mid = " + ".join(p.display(y) for y in tr.Y) if tr.Y else "-"
    print(f"triangle {args.index}: {p.display(tr.X)} | {mid} | {p.display(tr.Z)}", file=out)
    print(f"Z^ = {tform.z_hat_t(p, tr).format(p)}", file=out)
    print(f"right dual of Z = {tform.dual_element(p, tr).format(p)}", file=out)
    print(f"left dual of X = {tform.left_dual_element(p, tr).format(p)}", file=out)
    tform.verify_duality(p, tr)
    print("DUALITY OK", file=out)


def cmd_hermitian(args, out):
    p = _load(args.file)
    report = tform.hermitian_check(p)
    for a, b in report.failures:
        print(f"NOT HERMITIAN: hom {a} {b} vs hom {b} {a}", file=out)
    if not report.ok:
        raise CheckFailed()
    print("HERMITIAN" + (" (cyclic hom data)" if report.cyclic else ""), file=out)


def cmd_orbits(args, out):
    p = _load(args.file)
    mods, dim = tform.orbit_structure(p)
    for m in mods:
        print(m, file=out)
    print(f"dimension over Q(t): {dim}", file=out)


# -- za commands -----------------------------------------------------------------

def cmd_za_form(args, out):
    r = za.RimData(args.self_form, args.cross)
    if args.cross is not None:
        closed = lambda: za.cross_component_form(r, args.m, args.n)  # noqa: E731
        recur = lambda: za.cross_component_recurrence(r, args.m, args.n)  # noqa: E731
    else:
        closed = lambda: za.same_component_form(r, args.m, args.n)  # noqa: E731
        recur = lambda: za.same_component_recurrence(r, args.m, args.n)  # noqa: E731
    if args.method == "closed":
        print(closed(), file=out)
    elif args.method == "recurrence":
        print(recur(), file=out)
    else:
        a, b = closed(), recur()
        print(f"closed:     {a}", file=out)
        print(f"recurrence: {b}", file=out)
        if a != b:
            print("DISAGREE", file=out)
            raise CheckFailed()
        print("AGREE", file=out)


def cmd_za_triangles(args, out):
    for tr in za.component_triangles(args.depth):
        mid = " + ".join(str(y) for y in tr.Y) if tr.Y else "-"
        print(f"triangle {tr.X} | {mid} | {tr.Z}", file=out)


def cmd_za_brick(args, out):
    r = za.RimData(args.self_form)
    scan = za.brick_strip_scan(r, args.max)
    if scan.simple_projective_stalk:
        print("simple projective stalk: endomorphism dimension 1", file=out)
    for row in scan.rows:
        print(row, file=out)
    print(f"dim-2 strip reaches distance {scan.dim_two_extent}", file=out)
    if scan.t_coefficient:
        print(f"coefficient of t in the rim form is {scan.t_coefficient}", file=out)


# -- oracle commands ---------------------------------------------------------------

def _deliver(p, args, out):
    text = emit(p)
    if args.emit:
        with open(args.emit, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"wrote {args.emit}", file=out)
    else:
        out.write(text)


def cmd_oracle_uniserial(args, out):
    if args.n < 2:
        raise argparse.ArgumentTypeError("N must be at least 2")
    _deliver(uniserial_category(args.n), args, out)


def cmd_oracle_dual(args, out):
    _deliver(dual_numbers_component(args.depth, args.window), args, out)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="arforms", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def file_cmd(name, fn, help_text):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("file")
        sp.set_defaults(func=fn)
        return sp

    file_cmd("validate", cmd_validate, "check a category file for consistency")
    file_cmd("gram", cmd_gram, "Gram matrix of the hom-dimension form")
    file_cmd("kernel", cmd_kernel, "kernel of the form: closed form vs brute force")
    file_cmd("prop31", cmd_prop31, "pair every object with every Z^ from the AR triangles")
    file_cmd("hermitian", cmd_hermitian, "check <A,B>^t = bar <B,A>^t")
    file_cmd("orbits", cmd_orbits, "module structure of each shift orbit")
    for name, fn in (("tform", cmd_tform), ("euler", cmd_euler)):
        sp = file_cmd(name, fn, "t-form of two objects" if name == "tform" else "t-form at t = -1")
        sp.add_argument("left")
        sp.add_argument("right")
    sp = file_cmd("dual", cmd_dual, "dual elements of an AR triangle")
    sp.add_argument("index", type=int)

    zap = sub.add_parser("za", help="ZA-infinity component engine")
    zsub = zap.add_subparsers(dest="za_command", required=True)
    sp = zsub.add_parser("form", help="<C_m, C_n>^t, or <C_m, D_n>^t with --cross")
    sp.add_argument("--self", dest="self_form", type=_laurent_arg, required=True)
    sp.add_argument("--cross", type=_laurent_arg)
    sp.add_argument("--method", choices=("closed", "recurrence", "both"), default="closed")
    sp.add_argument("m", type=_nat)
    sp.add_argument("n", type=_nat)
    sp.set_defaults(func=cmd_za_form)
    sp = zsub.add_parser("triangles", help="AR triangles near the rim")
    sp.add_argument("depth", type=_nat)
    sp.set_defaults(func=cmd_za_triangles)
    sp = zsub.add_parser("brick", help="endomorphism dimensions along the strip")
    sp.add_argument("--self", dest="self_form", type=_laurent_arg, required=True)
    sp.add_argument("--max", type=_nat, required=True)
    sp.set_defaults(func=cmd_za_brick)

    op = sub.add_parser("oracle", help="generate categories from first principles")
    osub = op.add_subparsers(dest="oracle_command", required=True)
    sp = osub.add_parser("uniserial", help="stable category of k[X]/(X^N)")
    sp.add_argument("n", type=int)
    sp.add_argument("--emit")
    sp.set_defaults(func=cmd_oracle_uniserial)
    sp = osub.add_parser("dual-numbers", help="x-chain component over k[x]/(x^2)")
    sp.add_argument("depth", type=_nat)
    sp.add_argument("--window", type=_nat)
    sp.add_argument("--emit")
    sp.set_defaults(func=cmd_oracle_dual)
    return ap


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stderr(err):
            args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        args.func(args, out)
    except CheckFailed:
        return 1
    except (FiniteSupportRequired, DualityViolation, WindowTooSmall, InfiniteOrbit) as e:
        print(e, file=out)
        return 1
    except (ParseError, UnknownObject, InvalidRim, MissingCrossForm, ValueError,
            argparse.ArgumentTypeError, OSError) as e:
        print(f"error: {e}", file=err)
        return 2
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
