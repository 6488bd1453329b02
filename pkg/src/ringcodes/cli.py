"""Command-line front end.

Code files use a small line-oriented grammar:

    # comment
    q: 2
    f: x^4+x^2
    rows:
    x | x^2
    0 | x^3+x

Entries follow the polynomial term syntax (descending exponents, '+' only,
coefficients in [1, q)); '|' separates the coordinates of a row.  Entries of
degree at or above deg f are accepted and reduced, with a note on stderr.

Exit status: 0 when the requested computation ran, 1 on domain errors
(inputs that parse but violate a precondition), 2 on malformed files or
unreadable paths.
"""

import argparse
import json
import sys

from ringcodes.codes import Code, CodeMatrix, CodeWord, is_cgm, is_divisor_basis
from ringcodes.dual import dual_code, gen_mat_dual, reverse_cgm
from ringcodes.errors import CodeFileError, RingCodesError
from ringcodes.expansion import f_dual, is_acode
from ringcodes.fields import FieldCtx
from ringcodes.polynomials import parse_poly
from ringcodes.quotient import QuotRing
from ringcodes.selfdual import (
    classify_length2,
    enumerate_selfdual,
    is_isodual,
    is_self_dual,
    is_self_reciprocal_dual,
    selfdual_existence,
)


def parse_code_file(text):
    """Parse the file grammar into (ring, rows of Poly)."""
    ctx = None
    f = None
    rows = []
    in_rows = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        stripped = raw.split("#", 1)[0].strip()
        if not stripped:
            continue
        if in_rows:
            entries = []
            for part in stripped.split("|"):
                try:
                    entries.append(parse_poly(ctx, part))
                except ValueError as exc:
                    raise CodeFileError(str(exc), line=lineno) from None
            rows.append(entries)
            continue
        if stripped.startswith("q:"):
            if ctx is not None:
                raise CodeFileError("duplicate q line", line=lineno)
            payload = stripped[2:].strip()
            try:
                q = int(payload)
            except ValueError:
                raise CodeFileError(
                    f"q must be an integer, got {payload!r}", line=lineno
                ) from None
            try:
                ctx = FieldCtx(q)
            except ValueError as exc:
                raise CodeFileError(str(exc), line=lineno) from None
        elif stripped.startswith("f:"):
            if ctx is None:
                raise CodeFileError("q must be declared before f", line=lineno)
            if f is not None:
                raise CodeFileError("duplicate f line", line=lineno)
            try:
                f = parse_poly(ctx, stripped[2:].strip())
            except ValueError as exc:
                raise CodeFileError(str(exc), line=lineno) from None
            if f.is_zero or f.degree < 1 or not f.is_monic:
                raise CodeFileError(
                    "f must be monic of degree >= 1", line=lineno
                )
        elif stripped == "rows:":
            if f is None:
                raise CodeFileError(
                    "q and f must be declared before rows", line=lineno
                )
            in_rows = True
        else:
            raise CodeFileError(f"unexpected line {stripped!r}", line=lineno)
    if ctx is None or f is None:
        raise CodeFileError("file must declare q and f")
    if not rows:
        raise CodeFileError("file must list at least one row")
    if len({len(r) for r in rows}) > 1:
        raise CodeFileError("rows of unequal length")
    return QuotRing(f), rows


def _load(path):
    try:
        with open(path, encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise CodeFileError(f"cannot read {path}: {exc.strerror}") from None
    ring, rows = parse_code_file(text)
    if any(e.degree >= ring.m for r in rows for e in r):
        print("note: entries reduced modulo f", file=sys.stderr)
    code = Code(ring, len(rows[0]), rows)
    return ring, code, rows


def _mat_json(mat):
    return [[str(e) for e in row.entries] for row in mat.rows]


def _context_json(ring):
    return {"q": ring.q, "f": str(ring.f)}


def _print_mat(mat):
    if mat.nrows == 0:
        print("(no rows: the zero code)")
    else:
        print(mat.pretty())


def cmd_cgm(args):
    ring, code, _ = _load(args.file)
    payload = _context_json(ring)
    payload.update(
        rows=_mat_json(code.cgm),
        dim_f=code.dim_f,
        cardinality=code.cardinality,
    )
    if args.json:
        print(json.dumps(payload))
        return 0
    _print_mat(code.cgm)
    print(f"dim_F: {code.dim_f}")
    print(f"words: {code.cardinality}")
    return 0


def cmd_dual(args):
    ring, code, _ = _load(args.file)
    res = gen_mat_dual(code.cgm, check=False)
    if args.reverse:
        mat = reverse_cgm(res)
        label = "reverse"
    elif args.cgm:
        mat = dual_code(code).cgm
        label = "cgm"
    else:
        mat = res.matrix
        label = "raw"
    payload = _context_json(ring)
    payload.update(
        form=label, rows=_mat_json(mat), multiplications=res.mult_count
    )
    if args.json:
        print(json.dumps(payload))
        return 0
    _print_mat(mat)
    print(f"multiplications: {res.mult_count}")
    return 0


def cmd_fdual(args):
    ring, code, _ = _load(args.file)
    fc = f_dual(code)
    expansion = is_acode(fc, ring)
    payload = _context_json(ring)
    payload.update(
        length=fc.length,
        dim=fc.dim,
        is_expansion=expansion,
        basis=[list(r) for r in fc.basis.rows],
    )
    if args.json:
        print(json.dumps(payload))
        return 0
    for row in fc.basis.rows:
        print(" ".join(str(v) for v in row))
    print(f"length: {fc.length}")
    print(f"dim: {fc.dim}")
    print(f"is_expansion: {'yes' if expansion else 'no'}")
    return 0


def cmd_check(args):
    ring, code, _ = _load(args.file)
    payload = _context_json(ring)
    if args.classify2:
        cls = classify_length2(code)
        payload.update(
            {
                "class": cls.tag,
                "g1": None if cls.g1 is None else str(cls.g1),
                "g2": None if cls.g2 is None else str(cls.g2),
                "g3": None if cls.g3 is None else str(cls.g3),
            }
        )
        if args.json:
            print(json.dumps(payload))
            return 0
        print(f"class: {cls.tag}")
        for name in ("g1", "g2", "g3"):
            if payload[name] is not None:
                print(f"{name}: {payload[name]}")
        return 0
    if args.isodual:
        witness = is_isodual(code)
        payload.update(
            isodual=witness is not None,
            permutation=None if witness is None else list(witness),
        )
        if args.json:
            print(json.dumps(payload))
            return 0
        if witness is None:
            print("isodual: no")
        else:
            print(
                "isodual: yes (permutation "
                + " ".join(str(p) for p in witness)
                + ")"
            )
        return 0
    if args.self_reciprocal:
        val = is_self_reciprocal_dual(code)
        key, text = "self_reciprocal_dual", "self-reciprocal-dual"
    else:
        val = is_self_dual(code)
        key, text = "self_dual", "self-dual"
    payload[key] = val
    if args.json:
        print(json.dumps(payload))
        return 0
    print(f"{text}: {'yes' if val else 'no'}")
    return 0


def cmd_verify(args):
    ring, _, rows = _load(args.file)
    mat = CodeMatrix(
        ring, [CodeWord(ring, r) for r in rows], len(rows[0])
    )
    diag = is_divisor_basis(mat, deep=True)
    canonical = is_cgm(mat)
    payload = _context_json(ring)
    payload.update(
        echelon=diag.echelon,
        pivots_divide=diag.pivots_divide,
        cofactor_condition=diag.cofactor_condition,
        dim_matches=diag.dim_matches,
        divisor_basis=bool(diag),
        canonical=canonical,
    )
    if args.json:
        print(json.dumps(payload))
        return 0
    for name in (
        "echelon",
        "pivots_divide",
        "cofactor_condition",
        "dim_matches",
        "divisor_basis",
        "canonical",
    ):
        val = payload[name]
        text = "yes" if val else "no"
        print(f"{name}: {text}")
    return 0


def _inline_ring(args):
    ctx = FieldCtx(args.q)
    f = parse_poly(ctx, args.f)
    if f.is_zero or f.degree < 1 or not f.is_monic:
        raise ValueError("f must be monic of degree >= 1")
    return QuotRing(f)


def cmd_enumerate_selfdual(args):
    ring = _inline_ring(args)
    codes = enumerate_selfdual(ring, args.length)
    payload = _context_json(ring)
    payload.update(
        length=args.length,
        count=len(codes),
        codes=[_mat_json(c.cgm) for c in codes],
    )
    if args.json:
        print(json.dumps(payload))
        return 0
    print(f"count: {len(codes)}")
    for c in codes:
        print()
        _print_mat(c.cgm)
    return 0


def cmd_existence(args):
    ring = _inline_ring(args)
    report = selfdual_existence(ring)
    payload = _context_json(ring)
    payload.update(
        multiples_of_4=report.multiples_of_4,
        all_even=report.all_even_lengths,
        all=report.all_lengths,
    )
    if args.json:
        print(json.dumps(payload))
        return 0
    yn = lambda b: "yes" if b else "no"
    print(
        f"multiples_of_4: {yn(report.multiples_of_4)}, "
        f"all_even: {yn(report.all_even_lengths)}, "
        f"all: {yn(report.all_lengths)}"
    )
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="ringcodes",
        description="Linear codes over F_q[x]/<f(x)>: canonical generator "
        "matrices, duals, self-duality checks, and field expansions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_file_cmd(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file", help="path to a code file")
        p.add_argument("--json", action="store_true", help="machine output")
        p.set_defaults(func=func)
        return p

    add_file_cmd(
        "cgm", cmd_cgm, "canonical generator matrix, dimension, cardinality"
    )
    p = add_file_cmd("dual", cmd_dual, "generating matrix of the dual")
    g = p.add_mutually_exclusive_group()
    g.add_argument(
        "--cgm",
        action="store_true",
        help="print the canonical matrix of the dual",
    )
    g.add_argument(
        "--reverse",
        action="store_true",
        help="print the canonical matrix of the reciprocal dual",
    )
    add_file_cmd(
        "fdual",
        cmd_fdual,
        "basis of the F-dual of the expanded code, with expansion test",
    )
    p = add_file_cmd("check", cmd_check, "predicates on the code")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--self-dual", action="store_true", dest="self_dual")
    g.add_argument(
        "--self-reciprocal", action="store_true", dest="self_reciprocal"
    )
    g.add_argument("--isodual", action="store_true")
    g.add_argument(
        "--classify2",
        action="store_true",
        help="length-2 class tag and payload",
    )
    add_file_cmd(
        "verify", cmd_verify, "basis-of-divisors diagnostics on the raw rows"
    )

    def add_ring_cmd(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("-q", type=int, required=True, help="field size")
        p.add_argument("-f", required=True, help="modulus polynomial")
        p.add_argument("--json", action="store_true", help="machine output")
        p.set_defaults(func=func)
        return p

    p = add_ring_cmd(
        "enumerate-selfdual",
        cmd_enumerate_selfdual,
        "all self-dual codes of length 1 or 2",
    )
    p.add_argument(
        "-l",
        "--length",
        type=int,
        choices=(1, 2),
        required=True,
        help="code length",
    )
    add_ring_cmd(
        "existence",
        cmd_existence,
        "which lengths admit self-dual codes over the ring",
    )
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CodeFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (RingCodesError, ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
