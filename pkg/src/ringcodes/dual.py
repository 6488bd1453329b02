"""Dual codes under the standard bilinear form on A^l.

`gen_mat_dual` builds a generating matrix of the dual directly from a basis
of divisors, by recursion on the length: peel the first column, dualize the
rest, then prepend a column of correction terms.  Each correction is an
exact polynomial division, and the count of polynomial multiplications grows
cubically in the length.

The output matrix is square (l x l) and lower triangular against the input's
echelon shape; rows that come out zero are kept so the row count stays l,
and `DualResult.stripped` drops them for span work.  Reversing the stripped
matrix (rows and columns) yields the canonical generator matrix of the
reciprocal dual, which `reverse_cgm` verifies and returns.
"""

import itertools
from dataclasses import dataclass

from ringcodes.codes import (
    Code,
    CodeMatrix,
    CodeWord,
    divisor_basis,
    is_cgm,
    is_divisor_basis,
)
from ringcodes.errors import (
    BudgetExceededError,
    InvariantViolationError,
    NotADivisorBasisError,
)
from ringcodes.kernel import kernel
from ringcodes.polynomials import Poly


@dataclass
class DualResult:
    """Square generating matrix of the dual plus the multiplication tally."""

    matrix: CodeMatrix
    mult_count: int

    @property
    def stripped(self):
        return self.matrix.without_zero_rows()


def gen_mat_dual(mat, *, check=True, alpha_mod_f=False):
    """Generating matrix of the dual of the span of `mat`.

    `mat` must be a basis of divisors (checked unless check=False).  The
    correction entries are reduced modulo the cofactor of the pivot they
    sit under; `alpha_mod_f` switches to reduction modulo f instead, which
    spans the same module but loses the reversed-canonical property.
    """
    if isinstance(mat, Code):
        mat = mat.cgm
    ring = mat.ring
    if check and not is_divisor_basis(mat):
        raise NotADivisorBasisError(
            "input rows are not a basis of divisors; reduce them first"
        )
    f = ring.f
    l = mat.ncols
    zero = Poly.zero(ring.ctx)
    one = Poly.one(ring.ctx)

    # descend: classify each column as carrying the next pivot or not
    steps = []
    nxt = 0
    for j in range(l):
        if nxt < mat.nrows and mat.rows[nxt].leading_index() == j:
            steps.append(nxt)
            nxt += 1
        else:
            steps.append(None)

    mults = 0
    rows = None  # rows of the dual of the peeled tail, entries are Poly
    for j in range(l - 1, -1, -1):
        r = steps[j]
        if r is None:
            if rows is None:
                rows = [[one]]
            else:
                width = len(rows[0])
                rows = [[one] + [zero] * width] + [
                    [zero] + row for row in rows
                ]
            continue
        g = [mat.rows[r][c].rep for c in range(j, l)]
        piv = g[0]
        hcof, rem = divmod(f, piv)
        if not rem.is_zero:
            raise InvariantViolationError("pivot does not divide the modulus")
        h11 = hcof % f
        if rows is None:
            rows = [[h11]]
            continue
        width = len(rows[0])
        new_rows = [[h11] + [zero] * width]
        reducer = f if alpha_mod_f else hcof
        for row in rows:
            s = zero
            for t, hv in enumerate(row):
                gv = g[1 + t]
                if hv.is_zero or gv.is_zero:
                    continue
                s = s + hv * gv
                mults += 1
            if s.is_zero:
                alpha = zero
            else:
                quo, rem = divmod(s, piv)
                if not rem.is_zero:
                    raise InvariantViolationError(
                        "correction term not divisible by the pivot"
                    )
                alpha = (-quo) % reducer
                mults += 1
            new_rows.append([alpha] + row)
        rows = new_rows

    words = [
        CodeWord(ring, [ring.elem(e) for e in row]) for row in rows
    ]
    return DualResult(CodeMatrix(ring, words, l), mults)


def reverse_cgm(res):
    """Canonical generator matrix of the reciprocal dual.

    Strip the zero rows of a `gen_mat_dual` output and reverse rows and
    columns; the result must pass the canonical-form checks, otherwise the
    certificate is violated and an error is raised.
    """
    mat = res.matrix if isinstance(res, DualResult) else res
    rev = mat.without_zero_rows().reversed_matrix()
    if not is_cgm(rev):
        raise InvariantViolationError(
            "reversed dual matrix failed the canonical-form certificate"
        )
    return rev


def dual_code(code):
    """The dual as a Code, via the generator-matrix construction."""
    res = gen_mat_dual(code.cgm, check=False)
    return Code(code.ring, code.length, res.stripped.rows)


def _kernel_rows(mat):
    """Rows for the kernel scanners: one coefficient list per coordinate."""
    return [[list(e.rep.coeffs) for e in row.entries] for row in mat.rows]


def dual_word_count(code, *, budget=1 << 24):
    """Number of words orthogonal to every generator, by scanning A^l.

    Prime fields go through the compiled scanner; extensions fall back to
    a direct product scan.
    """
    ring = code.ring
    l = code.length
    total = ring.q ** (ring.m * l)
    if total > budget:
        raise BudgetExceededError(
            f"scan over {total} words exceeds budget {budget}", bound=budget
        )
    mat = code.cgm
    if ring.ctx.n == 1:
        return kernel.count_orthogonal(
            _kernel_rows(mat), l, list(ring.f.coeffs), ring.ctx.p
        )
    count = 0
    gens = mat.rows
    for entries in itertools.product(ring.elements(), repeat=l):
        w = CodeWord(ring, entries)
        if all(w.dot(g).is_zero for g in gens):
            count += 1
    return count


def dual_oracle(code, *, budget=1 << 20):
    """The dual computed by brute force: collect every orthogonal word.

    Exponential in l*m; meant as an independent cross-check at small sizes.
    """
    ring = code.ring
    l = code.length
    total = ring.q ** (ring.m * l)
    if total > budget:
        raise BudgetExceededError(
            f"scan over {total} words exceeds budget {budget}", bound=budget
        )
    mat = code.cgm
    words = []
    if ring.ctx.n == 1:
        flat_words = kernel.orthogonal_words(
            _kernel_rows(mat), l, list(ring.f.coeffs), ring.ctx.p
        )
        for digits in flat_words:
            entries = []
            for j in range(l):
                entries.append(
                    Poly(ring.ctx, list(digits[j * ring.m : (j + 1) * ring.m]))
                )
            words.append(CodeWord(ring, entries))
    else:
        gens = mat.rows
        for entries in itertools.product(ring.elements(), repeat=l):
            w = CodeWord(ring, entries)
            if all(w.dot(g).is_zero for g in gens):
                words.append(w)
    return Code(ring, l, words)


def punctured_dual_check(code):
    """Dual-of-shortening identity on the first coordinate.

    When some generator is live in column 0:
        puncture(dual(C)) == dual(shorten(C)).
    When column 0 is dead across C, the dual at that coordinate is all of
    A, so the check compares dual(C) against A x dual(punctured C).
    """
    ring = code.ring
    if code.length < 2:
        raise ValueError("the identity needs length >= 2")
    dual = dual_code(code)
    if code.leading_index() == 0:
        left = dual.punctured_first()
        right = dual_code(code.shortened_first())
        return left == right
    inner = dual_code(code.punctured_first())
    expected = Code(
        ring,
        code.length,
        [
            CodeWord(
                ring, [ring.one()] + [ring.zero()] * (code.length - 1)
            )
        ]
        + [
            CodeWord(ring, [ring.zero()] + list(r.entries))
            for r in inner.cgm.rows
        ],
    )
    return dual == expected
