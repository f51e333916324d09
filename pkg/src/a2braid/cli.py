"""Command line interface.

Exit codes: 0 success, 2 usage or parse error, 3 numeric pole,
4 verification failure.
"""

from __future__ import annotations

import argparse
import cmath
import math
import os
import sys
import tempfile
from typing import List, Optional

from .braid import (PureBraidWord, basis, check_pure_braid_relations, parse_word, rho_generator,
                    rho_word)
from .coefficients import PoleError
from .linalg import RepMatrix

EXIT_OK, EXIT_USAGE, EXIT_POLE, EXIT_VERIFY = 0, 2, 3, 4


class UsageError(Exception):
    pass


def _word_from_args(args) -> PureBraidWord:
    text = args.gen if args.gen is not None else args.word
    if text is None:
        raise UsageError("give --gen or --word")
    try:
        w = parse_word(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.gen is not None and len(w) != 1:
        raise UsageError("--gen takes a single generator; use --word for products")
    try:
        w.check(args.k)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return w


def _check_nk(args) -> None:
    if args.n < 0:
        raise UsageError("--n must be >= 0")
    if args.k < 2:
        raise UsageError("--k must be >= 2")


def _matrix(args) -> RepMatrix:
    _check_nk(args)
    return rho_word(args.n, args.k, _word_from_args(args))


def _emit(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    d = os.path.dirname(os.path.abspath(out))
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".a2braid-")
    with os.fdopen(fd, "w", encoding="utf-8") as fh:
        fh.write(text)
    os.replace(tmp, out)


# ---------------------------------------------------------------------------
# matrix


def cmd_matrix(args) -> int:
    m = _matrix(args)
    if args.format == "json":
        text = m.dumps() + "\n"
    elif args.format == "latex":
        text = m.to_latex() + "\n"
    else:
        idx = basis(args.n, args.k)
        text = f"# {m.label}  n={args.n} k={args.k}  basis (lex): {', '.join(map(str, idx))}\n"
        text += str(m) + "\n"
    _emit(text, args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# eval


def _fmt(z: complex) -> str:
    return f"{z.real:.12g}{z.imag:+.12g}j"


def cmd_eval(args) -> int:
    if args.root is None and args.v_arg is None:
        raise UsageError("give --root L or --v-arg THETA")
    if args.root is not None and args.root < 1:
        raise UsageError("--root must be >= 1")
    arg = args.v_arg if args.v_arg is not None else 2 * math.pi / (6 * args.root)
    v0 = cmath.exp(1j * arg)
    m = _matrix(args)
    rows = []
    for r, row in enumerate(m.rows):
        vals = []
        for c, x in enumerate(row):
            try:
                vals.append(x(v0))
            except PoleError:
                sys.stderr.write(f"pole at entry ({r},{c}): {x}\n")
                return EXIT_POLE
        rows.append(vals)
    print(f"# {m.label} at v = exp({arg:.12g} i)")
    for vals in rows:
        print("  ".join(_fmt(z) for z in vals))
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify


def _report(rows: List[tuple]) -> int:
    width = max((len(r[0]) for r in rows), default=10)
    fails = 0
    for name, ok, detail in rows:
        fails += not ok
        print(f"{'PASS' if ok else 'FAIL'}  {name:<{width}}  {detail}")
    print(f"{len(rows) - fails}/{len(rows)} passed")
    return EXIT_OK if fails == 0 else EXIT_VERIFY


def _suite_formulas(args) -> List[tuple]:
    from .spider import theta_closed, theta_sum

    rows = []
    for n in range(args.max_n + 1):
        for i in range(n + 1):
            rows.append((f"theta n={n} i={i}", theta_sum(n, i) == theta_closed(n, i), ""))
    return rows


def _suite_recoupling(args) -> List[tuple]:
    from .spider import delta, recoupling_matrix, sixj_mixed, sixj_square, theta

    rows = []
    top = min(args.max_n, 3) if args.max_n is not None else 3
    for n in range(top + 1):
        f = RepMatrix(recoupling_matrix(n))
        rows.append((f"F^2 = I  n={n}", (f @ f).is_identity(), ""))
    for n in range(top + 1):
        ok = all(theta(n, t) / delta(n, 0)
                 == sixj_mixed(n, s, t) * sixj_square(n, t, s) * theta(n, s) / delta(s, s)
                 for s in range(n + 1) for t in range(n + 1))
        rows.append((f"mixed 6j identity n={n}", ok, ""))
    return rows


def _suite_relations(args) -> List[tuple]:
    _check_nk(args)
    return [(r.name, r.passed, "" if r.passed else f"{r.lhs} vs {r.rhs}")
            for r in check_pure_braid_relations(args.n, args.k)]


def _suite_oracle(args) -> List[tuple]:
    from .webs.oracle import oracle_generator_matrix

    _check_nk(args)
    rows = []
    for i in range(1, 2 * args.k + 1):
        for j in range(i + 1, 2 * args.k + 1):
            ok = oracle_generator_matrix(args.n, args.k, i, j) == rho_generator(args.n, args.k, i, j)
            rows.append((f"A({i},{j})", ok, "web oracle vs closed form"))
    return rows


SUITES = {
    "formulas": _suite_formulas,
    "recoupling": _suite_recoupling,
    "relations": _suite_relations,
    "oracle": _suite_oracle,
}


def cmd_verify(args) -> int:
    try:
        suite = SUITES[args.suite]
    except KeyError:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)}") from None
    return _report(suite(args))


# ---------------------------------------------------------------------------
# oracle


def cmd_oracle(args) -> int:
    from .webs import Budget, BudgetExceeded, DiagramError, parse_diagram, reduce
    from .webs.oracle import oracle_generator_matrix
    from .webs.textfmt import format_diagram

    if args.diagram is not None:
        try:
            text = sys.stdin.read() if args.diagram == "-" else open(args.diagram, encoding="utf-8").read()
            w = parse_diagram(text)
        except (OSError, DiagramError) as exc:
            raise UsageError(str(exc)) from None
        try:
            el = reduce(w, budget=Budget())
        except BudgetExceeded as exc:
            sys.stderr.write(f"{exc}\n")
            return EXIT_VERIFY
        if w.is_closed():
            print(el.scalar() if not el.is_zero() else 0)
            return EXIT_OK
        print(f"# {len(el)} reduced webs")
        for c, u in el.items():
            print(f"## coefficient {c}")
            sys.stdout.write(format_diagram(u))
        return EXIT_OK
    _check_nk(args)
    w = _word_from_args(args)
    if len(w) != 1 or w.letters[0][2] != 1:
        raise UsageError("oracle matrices are computed for single generators")
    i, j, _ = w.letters[0]
    m = oracle_generator_matrix(args.n, args.k, i, j)
    if args.format == "json":
        _emit(m.dumps() + "\n", args.out)
    else:
        _emit(str(m) + "\n", args.out)
    if args.compare:
        same = m == rho_generator(args.n, args.k, i, j)
        print(f"closed form {'agrees' if same else 'DISAGREES'}", file=sys.stderr)
        return EXIT_OK if same else EXIT_VERIFY
    return EXIT_OK


# ---------------------------------------------------------------------------


def _add_nk(p, n_default=1, k_default=2):
    p.add_argument("--n", type=int, default=n_default, help="color of each boundary point")
    p.add_argument("--k", type=int, default=k_default, help="half the number of strands")


def _add_word(p):
    g = p.add_mutually_exclusive_group()
    g.add_argument("--gen", help='one generator, e.g. "A(2,3)"')
    g.add_argument("--word", help='product of generators, e.g. "A(1,3) A(2,4)^-1"')


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="a2braid",
        description="Exact pure braid matrices on clasped A2 web spaces, with a brute-force web check.",
        epilog="exit codes: 0 ok, 2 usage or parse error, 3 pole, 4 verification failure")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("matrix", help="exact matrix of a generator or word")
    _add_nk(p)
    _add_word(p)
    p.add_argument("--format", choices=("json", "latex", "text"), default="json")
    p.add_argument("--out", help="write to this file instead of stdout")
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("eval", help="evaluate a matrix at a root of unity")
    _add_nk(p)
    _add_word(p)
    p.add_argument("--root", type=int, help="q = exp(2 pi i / L), v its principal sixth root")
    p.add_argument("--v-arg", type=float, help="use v = exp(i * THETA) instead")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True, help="formulas | recoupling | relations | oracle")
    _add_nk(p)
    p.add_argument("--max-n", type=int, default=6, help="largest color for formula suites")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="reduce a diagram file or compute a generator from webs")
    p.add_argument("--diagram", help="diagram text file, or - for stdin")
    _add_nk(p)
    _add_word(p)
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("--out")
    p.add_argument("--compare", action="store_true", help="also compare with the closed form")
    p.set_defaults(func=cmd_oracle)
    return ap


def main(argv: Optional[List[str]] = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        ap.exit(EXIT_USAGE, f"{ap.prog}: error: {exc}\n")


if __name__ == "__main__":
    sys.exit(main())
