"""Command-line entry point.

Exit codes: 0 success, 1 a verification failed, 2 bad usage or input.
"""
from __future__ import annotations

import argparse
import csv
import sys
from pathlib import Path

from . import serialize as ser
from .chain import chain_from_cycle, verify_chain
from .cycles import build_cycle, parse_spec
from .maya import blocks, genus, parse_maya, render, standard_shift, xi
from .painleve import (
    PainleveSolution,
    SingularTransformation,
    apply_word,
    p4_reduction,
    painleve_from_chain,
    parse_word,
    verify_painleve,
)
from .ratfunc import RationalFunction, frac_to_str
from .exceptional import ExceptionalDegreeError, orthogonality_table, potential_U, xhermite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _fmt_fracs(xs) -> str:
    return ",".join(frac_to_str(x) for x in xs)


def _spec(text: str):
    try:
        return parse_spec(text)
    except (ValueError, NotImplementedError) as e:
        raise UsageError(f"invalid spec: {e}") from None


def _write(path: str, data: bytes | str) -> None:
    p = Path(path)
    if isinstance(data, str):
        p.write_text(data)
    else:
        p.write_bytes(data)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_maya_show(args) -> int:
    try:
        if args.frobenius is not None:
            M = parse_maya(args.frobenius)
        else:
            M = xi([int(x) for x in args.blocks.split(",")])
    except ValueError as e:
        raise UsageError(str(e)) from None
    print(f"frobenius: {M}")
    print(f"index: {M.index}")
    print(f"blocks: {','.join(map(str, blocks(M)))}")
    print(f"genus: {genus(M)}")
    print(f"standard shift: {standard_shift(M)}")
    print(f"diagram: {render(M)}")
    return EXIT_OK


def cmd_maya_cycle(args) -> int:
    cyc = build_cycle(_spec(args.spec))
    print(f"spec: {cyc.spec.to_text()}")
    print(f"canonical flips: {','.join(map(str, cyc.canonical))}")
    print(f"flips: {','.join(map(str, cyc.flips))}")
    print(f"degenerate: {str(cyc.degenerate).lower()}")
    for i, M in enumerate(cyc.diagrams):
        print(f"M_{i} = Ξ({','.join(map(str, blocks(M)))}) = {M}")
    ok = cyc.check()
    print(f"closure: {'pass' if ok else 'FAIL'}")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_chain_build(args) -> int:
    chain = chain_from_cycle(build_cycle(_spec(args.spec)))
    ok = verify_chain(chain)
    print(f"delta: {chain.delta}")
    print(f"a: {','.join(map(str, chain.a))}")
    print(f"signs: {','.join('+' if s > 0 else '-' for s in chain.signs)}")
    for i, t in enumerate(chain.wronskian_indices):
        print(f"H_M{i} = Wr({','.join(f'H_{j}' for j in t)})")
    for i, w in enumerate(chain.w):
        print(f"w_{i} = {w.to_str('x')}")
    print(f"chain residuals: {'pass' if ok else 'FAIL'}")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_painleve_solve(args) -> int:
    spec = _spec(args.spec)
    doc = ser.build_document(spec)
    ok = doc.verified
    pv = doc.painleve
    print(f"alpha: {','.join(pv['alpha'])}")
    print(f"d: {pv['d']}")
    sol = doc.painleve_solution()
    for i, f in enumerate(sol.f):
        print(f"f_{i} = {f.to_str('z')}")
    print(f"verification: {'pass' if ok else 'FAIL'}")
    if not ok:
        return EXIT_FAIL
    if args.json:
        _write(args.json, ser.serialize(doc))
    if args.latex:
        _write(args.latex, ser.latex_report(doc))
    return EXIT_OK


def _load_doc(path: str) -> ser.SolutionDocument:
    try:
        return ser.deserialize(Path(path).read_bytes())
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e}") from None
    except ser.DocumentError as e:
        raise UsageError(str(e)) from None


def cmd_painleve_verify(args) -> int:
    if args.json:
        sol = _load_doc(args.json).painleve_solution()
    elif args.spec:
        sol = painleve_from_chain(chain_from_cycle(build_cycle(_spec(args.spec))))
    else:
        raise UsageError("give --json or --spec")
    ok = verify_painleve(sol)
    print(f"alpha: {_fmt_fracs(sol.alpha)}")
    print(f"system residuals and normalisation: {'pass' if ok else 'FAIL'}")
    return EXIT_OK if ok else EXIT_FAIL


def _seed(n: int) -> PainleveSolution:
    z = RationalFunction.x()
    m = 2 * n + 1
    return PainleveSolution.make([z] + [0] * (m - 1), [1] + [0] * (m - 1))


def cmd_painleve_backlund(args) -> int:
    try:
        word = parse_word(args.word)
    except ValueError as e:
        raise UsageError(str(e)) from None
    if args.json:
        sol = _load_doc(args.json).painleve_solution()
    elif args.spec:
        sol = painleve_from_chain(chain_from_cycle(build_cycle(_spec(args.spec))))
    else:
        sol = _seed(args.n)
    try:
        out = apply_word(sol, word)
    except SingularTransformation as e:
        print(f"singular: {e}", file=sys.stderr)
        return EXIT_FAIL
    for i, f in enumerate(out.f):
        print(f"f_{i} = {f.to_str('z')}")
    print(f"alpha: {_fmt_fracs(out.alpha)}")
    ok = verify_painleve(out)
    print(f"verification: {'pass' if ok else 'FAIL'}")
    if args.p4:
        if len(out.f) != 3:
            raise UsageError("--p4 needs an A_2 solution (n=1)")
        try:
            red = p4_reduction(out)
        except ValueError as e:
            print(f"p4: {e}", file=sys.stderr)
            return EXIT_FAIL
        print(f"y(t) = {red.y.to_str('t')}")
        print(f"a: {frac_to_str(red.a)}  b: {frac_to_str(red.b)}")
        p4ok = not red.residual
        print(f"p4 residual: {'pass' if p4ok else 'FAIL'}")
        ok = ok and p4ok
    return EXIT_OK if ok else EXIT_FAIL


def cmd_xhermite(args) -> int:
    try:
        H = xhermite(args.n)
    except (ExceptionalDegreeError, ValueError) as e:
        raise UsageError(str(e)) from None
    print(str(H))
    if args.latex:
        print(_latex_poly(H.c))
    if args.orthogonality:
        degs = [int(x) for x in args.degrees.split(",")]
        rows = orthogonality_table(degs)
        with open(args.orthogonality, "w", newline="") as fh:
            w = csv.DictWriter(fh, fieldnames=["m", "n", "order", "inner", "normalized"])
            w.writeheader()
            for r in rows:
                w.writerow({k: (repr(v) if isinstance(v, float) else v) for k, v in r.items()})
    return EXIT_OK


def _latex_poly(c) -> str:
    out = []
    for i in range(len(c) - 1, -1, -1):
        a = c[i]
        if not a:
            continue
        mag = abs(a)
        coef = "" if (mag == 1 and i) else str(mag)
        term = coef + ("z" if i else "") + (f"^{{{i}}}" if i > 1 else "")
        out.append(("-" if a < 0 else "+") + term)
    s = "".join(out) or "0"
    return s[1:] if s.startswith("+") else s


def cmd_potential(args) -> int:
    try:
        M = parse_maya(args.maya)
    except ValueError as e:
        raise UsageError(str(e)) from None
    U = potential_U(M)
    print(f"U = x^2 + {U.tail.to_str('x')}")
    return EXIT_OK


def cmd_verify_all(args) -> int:
    doc = _load_doc(args.document)
    report = ser.verify_document(doc)
    for k in sorted(report):
        if k == "all_pass":
            continue
        print(f"{k}: {'pass' if report[k]['pass'] else 'FAIL'}")
    ok = report["all_pass"]
    print(f"all: {'pass' if ok else 'FAIL'}")
    return EXIT_OK if ok else EXIT_FAIL


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="mayachain", description="Maya cycles, dressing chains and rational Painleve solutions")
    sub = ap.add_subparsers(dest="cmd", required=True)

    maya = sub.add_parser("maya", help="Maya diagrams and cycles")
    msub = maya.add_subparsers(dest="sub", required=True)
    show = msub.add_parser("show", help="describe one diagram")
    g = show.add_mutually_exclusive_group(required=True)
    g.add_argument("--frobenius", help='Frobenius symbol, e.g. "5,2,1|1,2"')
    g.add_argument("--blocks", help='block coordinates, e.g. "0,2,5,6,7"')
    show.set_defaults(fn=cmd_maya_show)
    cyc = msub.add_parser("cycle", help="build a Maya cycle")
    cyc.add_argument("--spec", required=True)
    cyc.set_defaults(fn=cmd_maya_cycle)

    chain = sub.add_parser("chain", help="dressing chains")
    csub = chain.add_subparsers(dest="sub", required=True)
    cb = csub.add_parser("build", help="build and verify a chain")
    cb.add_argument("--spec", required=True)
    cb.set_defaults(fn=cmd_chain_build)

    pv = sub.add_parser("painleve", help="A_2n Painleve solutions")
    psub = pv.add_subparsers(dest="sub", required=True)
    solve = psub.add_parser("solve", help="solve from a cycle spec")
    solve.add_argument("--spec", required=True)
    solve.add_argument("--json", help="write the solution document here")
    solve.add_argument("--latex", help="write a LaTeX fragment here")
    solve.set_defaults(fn=cmd_painleve_solve)
    ver = psub.add_parser("verify", help="check system residuals")
    ver.add_argument("--json")
    ver.add_argument("--spec")
    ver.set_defaults(fn=cmd_painleve_verify)
    bl = psub.add_parser("backlund", help="apply a word in s_k and pi")
    bl.add_argument("--word", required=True, help='e.g. "s1 s0" (rightmost acts first)')
    bl.add_argument("--n", type=int, default=1, help="seed (z,0,..|1,0,..) of size 2n+1")
    bl.add_argument("--json", help="start from a solution document")
    bl.add_argument("--spec", help="start from a cycle spec")
    bl.add_argument("--p4", action="store_true", help="also reduce to scalar P_IV")
    bl.set_defaults(fn=cmd_painleve_backlund)

    xh = sub.add_parser("xhermite", help="exceptional Hermite polynomial")
    xh.add_argument("--n", type=int, required=True)
    xh.add_argument("--latex", action="store_true")
    xh.add_argument("--orthogonality", metavar="CSV", help="write quadrature diagnostics")
    xh.add_argument("--degrees", default="0,3,4,5,6,7")
    xh.set_defaults(fn=cmd_xhermite)

    pot = sub.add_parser("potential", help="rational extension U_M of the oscillator")
    pot.add_argument("--maya", required=True)
    pot.set_defaults(fn=cmd_potential)

    va = sub.add_parser("verify-all", help="re-verify a solution document")
    va.add_argument("document")
    va.set_defaults(fn=cmd_verify_all)
    return ap


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        return args.fn(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
