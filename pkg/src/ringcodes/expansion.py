"""Expansion of A-codes to F-linear codes of length l*m.

A ring element becomes its coefficient row, a word in A^l the concatenation
of its coordinate rows, and multiplication by g the block matrix built from
companion-matrix images of the entries.  The F-dual of an A-code is taken on
the expanded code; it always contains the expansion of the A-dual, agrees
with it only for special moduli, and is itself the expansion of an A-code
exactly when the expanded dual is stable under the blockwise companion
action.
"""

from ringcodes.codes import CodeMatrix, CodeWord, is_divisor_basis
from ringcodes.errors import ContextMismatchError
from ringcodes.polynomials import Poly
from ringcodes.quotient import RingElem


class FMatrix:
    """Dense matrix over F with raw-valued entries."""

    __slots__ = ("ctx", "rows", "ncols")

    def __init__(self, ctx, rows, ncols=None):
        rows = tuple(tuple(ctx.coerce_raw(v) for v in r) for r in rows)
        if rows:
            widths = {len(r) for r in rows}
            if len(widths) != 1:
                raise ValueError("rows of unequal length")
            width = widths.pop()
            if ncols is not None and ncols != width:
                raise ValueError("ncols does not match the rows")
            ncols = width
        elif ncols is None:
            raise ValueError("an empty matrix needs an explicit ncols")
        self.ctx = ctx
        self.rows = rows
        self.ncols = ncols

    @classmethod
    def identity(cls, ctx, n):
        one, zero = ctx.one_raw, ctx.zero_raw
        return cls(
            ctx, [[one if i == j else zero for j in range(n)] for i in range(n)]
        )

    @classmethod
    def zeros(cls, ctx, nrows, ncols):
        zero = ctx.zero_raw
        return cls(ctx, [[zero] * ncols for _ in range(nrows)], ncols)

    @property
    def nrows(self):
        return len(self.rows)

    def __mul__(self, other):
        if not isinstance(other, FMatrix):
            return NotImplemented
        if other.ctx != self.ctx:
            raise ContextMismatchError("matrices over different fields")
        if self.ncols != other.nrows:
            raise ValueError("inner dimensions disagree")
        ctx = self.ctx
        out = []
        for r in self.rows:
            row = []
            for j in range(other.ncols):
                acc = ctx.zero_raw
                for t, v in enumerate(r):
                    acc = ctx.add_raw(acc, ctx.mul_raw(v, other.rows[t][j]))
                row.append(acc)
            out.append(row)
        return FMatrix(ctx, out, other.ncols)

    def __add__(self, other):
        if not isinstance(other, FMatrix):
            return NotImplemented
        if self.nrows != other.nrows or self.ncols != other.ncols:
            raise ValueError("shape mismatch")
        ctx = self.ctx
        return FMatrix(
            ctx,
            [
                [ctx.add_raw(a, b) for a, b in zip(ra, rb)]
                for ra, rb in zip(self.rows, other.rows)
            ],
            self.ncols,
        )

    def scaled(self, c):
        ctx = self.ctx
        c = ctx.coerce_raw(c)
        return FMatrix(
            ctx,
            [[ctx.mul_raw(c, v) for v in r] for r in self.rows],
            self.ncols,
        )

    def transpose(self):
        return FMatrix(
            self.ctx,
            [
                [self.rows[i][j] for i in range(self.nrows)]
                for j in range(self.ncols)
            ],
            self.nrows,
        )

    def __eq__(self, other):
        if not isinstance(other, FMatrix):
            return NotImplemented
        return (
            self.ctx == other.ctx
            and self.ncols == other.ncols
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.ctx, self.ncols, self.rows))

    def __repr__(self):
        return f"FMatrix({self.nrows}x{self.ncols})"


def f_rref(mat):
    """Reduced row-echelon form with zero rows dropped."""
    ctx = mat.ctx
    rows = [list(r) for r in mat.rows]
    npiv = 0
    pivcols = []
    for col in range(mat.ncols):
        src = None
        for i in range(npiv, len(rows)):
            if not ctx.is_zero_raw(rows[i][col]):
                src = i
                break
        if src is None:
            continue
        rows[npiv], rows[src] = rows[src], rows[npiv]
        inv = ctx.inv_raw(rows[npiv][col])
        rows[npiv] = [ctx.mul_raw(inv, v) for v in rows[npiv]]
        for i in range(len(rows)):
            if i == npiv or ctx.is_zero_raw(rows[i][col]):
                continue
            c = rows[i][col]
            rows[i] = [
                ctx.sub_raw(a, ctx.mul_raw(c, b))
                for a, b in zip(rows[i], rows[npiv])
            ]
        pivcols.append(col)
        npiv += 1
    return FMatrix(ctx, rows[:npiv], mat.ncols), tuple(pivcols)


def f_nullspace(mat):
    """Canonical basis (rref) of the right kernel, as rows."""
    ctx = mat.ctx
    red, pivcols = f_rref(mat)
    free = [c for c in range(mat.ncols) if c not in pivcols]
    basis = []
    for fc in free:
        vec = [ctx.zero_raw] * mat.ncols
        vec[fc] = ctx.one_raw
        for r, pc in enumerate(pivcols):
            vec[pc] = ctx.neg_raw(red.rows[r][fc])
        basis.append(vec)
    out = FMatrix(ctx, basis, mat.ncols)
    return f_rref(out)[0]


class FCode:
    """F-linear code held by the rref of a generating matrix."""

    __slots__ = ("ctx", "length", "basis", "pivcols")

    def __init__(self, ctx, length, rows):
        mat = FMatrix(ctx, rows, length)
        self.ctx = ctx
        self.length = length
        self.basis, self.pivcols = f_rref(mat)

    @property
    def dim(self):
        return self.basis.nrows

    def contains(self, vec):
        ctx = self.ctx
        vec = [ctx.coerce_raw(v) for v in vec]
        if len(vec) != self.length:
            raise ValueError("vector of the wrong length")
        for r, pc in enumerate(self.pivcols):
            c = vec[pc]
            if ctx.is_zero_raw(c):
                continue
            vec = [
                ctx.sub_raw(a, ctx.mul_raw(c, b))
                for a, b in zip(vec, self.basis.rows[r])
            ]
        return all(ctx.is_zero_raw(v) for v in vec)

    def __eq__(self, other):
        if not isinstance(other, FCode):
            return NotImplemented
        return (
            self.ctx == other.ctx
            and self.length == other.length
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.ctx, self.length, self.basis))

    def __repr__(self):
        return f"FCode(length={self.length}, dim={self.dim})"


def companion(ring):
    """Multiplication-by-x matrix on coefficient rows: ones above the
    diagonal, negated f coefficients in the last row."""
    ctx = ring.ctx
    m = ring.m
    rows = []
    for i in range(m - 1):
        row = [ctx.zero_raw] * m
        row[i + 1] = ctx.one_raw
        rows.append(row)
    last = [ctx.neg_raw(ctx.coerce_raw(c)) for c in ring.f.coeffs[:m]]
    rows.append(last)
    return FMatrix(ctx, rows, m)


def m_of_g(ring, g):
    """Matrix of multiplication by g on coefficient rows, by Horner on the
    companion matrix."""
    if isinstance(g, RingElem):
        g = g.rep
    if isinstance(g, Poly):
        g = g % ring.f
    else:
        g = ring.elem(g).rep
    ctx = ring.ctx
    m = ring.m
    mx = companion(ring)
    out = FMatrix.zeros(ctx, m, m)
    for c in reversed(g.coeffs):
        out = out * mx
        out = out + FMatrix.identity(ctx, m).scaled(c)
    return out


def psi(mat):
    """Blockwise expansion of a generating matrix: block (i, j) is the
    multiplication matrix of entry (i, j)."""
    ring = mat.ring
    m = ring.m
    blocks = [
        [m_of_g(ring, mat.entry(i, j)) for j in range(mat.ncols)]
        for i in range(mat.nrows)
    ]
    return _assemble(ring.ctx, blocks, mat.nrows, mat.ncols, m)


def zeta(mat):
    """Like psi but with each block transposed in place."""
    ring = mat.ring
    m = ring.m
    blocks = [
        [m_of_g(ring, mat.entry(i, j)).transpose() for j in range(mat.ncols)]
        for i in range(mat.nrows)
    ]
    return _assemble(ring.ctx, blocks, mat.nrows, mat.ncols, m)


def _assemble(ctx, blocks, nrows, ncols, m):
    if nrows == 0:
        return FMatrix(ctx, [], ncols * m)
    rows = []
    for i in range(nrows):
        for r in range(m):
            row = []
            for j in range(ncols):
                row.extend(blocks[i][j].rows[r])
            rows.append(row)
    return FMatrix(ctx, rows, ncols * m)


def word_fvector(word):
    """Concatenated coefficient rows of a word, padded to m per coordinate."""
    ring = word.ring
    m = ring.m
    out = []
    for e in word.entries:
        cs = list(e.rep.coeffs)
        cs += [ring.ctx.zero_raw] * (m - len(cs))
        out.extend(cs)
    return [ring.ctx.coerce_raw(v) for v in out]


def expand_code(code):
    """The F-linear code generated by the expanded generator rows."""
    ring = code.ring
    mat = psi(code.cgm)
    return FCode(ring.ctx, code.length * ring.m, mat.rows)


def f_dual(code):
    """F-dual of the expansion: the kernel of psi(G) as row vectors."""
    ring = code.ring
    mat = psi(code.cgm)
    null = f_nullspace(mat)
    return FCode(ring.ctx, code.length * ring.m, null.rows)


def is_acode(fcode, ring):
    """Whether an F-code of length l*m is the expansion of an A-code:
    stability of the row space under the blockwise companion action."""
    m = ring.m
    if fcode.length % m != 0:
        raise ValueError("length is not a multiple of the ring degree")
    ctx = fcode.ctx
    if ctx != ring.ctx:
        raise ContextMismatchError("code and ring over different fields")
    mx = companion(ring)
    for row in fcode.basis.rows:
        shifted = []
        for j in range(fcode.length // m):
            seg = row[j * m : (j + 1) * m]
            out = []
            for c in range(m):
                acc = ctx.zero_raw
                for t in range(m):
                    acc = ctx.add_raw(
                        acc, ctx.mul_raw(seg[t], mx.rows[t][c])
                    )
                out.append(acc)
            shifted.extend(out)
        if not fcode.contains(shifted):
            return False
    return True


def _is_pm_xm(f):
    """f == x^m - 1 or x^m + 1: constant is +-1, middle coefficients zero."""
    cs = f.coeffs
    if len(cs) != int(f.degree) + 1:
        return None
    c0 = cs[0]
    ctx = f.ctx
    if any(not ctx.is_zero_raw(ctx.coerce_raw(c)) for c in cs[1:-1]):
        return None
    one = ctx.one_raw
    if ctx.coerce_raw(c0) == one:
        return 1
    if ctx.coerce_raw(c0) == ctx.neg_raw(one):
        return -1
    return None


def fdual_always_acode(ring):
    """Moduli for which every code's F-dual is again an expansion:
    degree 1, degree 2 with constant term -1, or x^m -+ 1."""
    m = ring.m
    if m == 1:
        return True
    f = ring.f
    ctx = ring.ctx
    if m == 2:
        c0 = ctx.coerce_raw(f.constant_raw())
        if c0 == ctx.neg_raw(ctx.one_raw):
            return True
    return _is_pm_xm(f) is not None


def fdual_equals_adual(ring):
    """Moduli for which the F-dual expansion is exactly the A-dual:
    degree 1, or degree 2 with constant term -1."""
    m = ring.m
    if m == 1:
        return True
    if m == 2:
        ctx = ring.ctx
        c0 = ctx.coerce_raw(ring.f.constant_raw())
        return c0 == ctx.neg_raw(ctx.one_raw)
    return False


def x_inverse(ring):
    """The inverse of x in A for f == x^m -+ 1.

    For f == x^m - 1 it is x^(m-1); for f == x^m + 1 it is -x^(m-1).
    """
    sign = _is_pm_xm(ring.f)
    if sign is None:
        raise ValueError("x is invertible this way only for x^m -+ 1")
    coeff = -1 if sign == 1 else 1
    return ring.elem(Poly.monomial(ring.ctx, ring.m - 1, coeff))


def _substituted_row(ring, xinv, row, anchor):
    """Entries a0^(-1) * x^d * e(x^(-1)) with d, a0 read off `anchor`."""
    d = int(anchor.degree)
    a0 = ring.ctx.coerce_raw(anchor.constant_raw())
    if ring.ctx.is_zero_raw(a0):
        raise ValueError(
            "anchor entry with zero constant term: not a divisor of x^m -+ 1"
        )
    scale = ring.elem(Poly.monomial(ring.ctx, d, ring.ctx.inv_raw(a0)))
    return CodeWord(
        ring, [scale * ring.subst(e.rep, xinv) for e in row.entries]
    )


def zeta_basis(mat):
    """Basis of divisors for the zeta-expanded preimage, for f == x^m -+ 1.

    Entry (i, j) of the result is a_i^(-1) * x^(d_i) * g_ij(x^(-1)) where
    d_i is the degree of row i's leading coefficient and a_i its constant
    coefficient (nonzero because f(0) != 0 for these moduli).
    """
    ring = mat.ring
    if _is_pm_xm(ring.f) is None:
        raise ValueError("substitution basis needs f == x^m -+ 1")
    if not is_divisor_basis(mat):
        raise ValueError("rows must form a basis of divisors")
    xinv = x_inverse(ring)
    rows = [
        _substituted_row(ring, xinv, r, r.leading_coef().rep)
        for r in mat.rows
    ]
    return CodeMatrix(ring, rows, mat.ncols)


def fdual_reverse_basis(code):
    """Reverse basis of divisors of the F-dual's preimage, f == x^m -+ 1.

    Take the dual generating matrix H of the code, strip zero rows, and
    substitute x^(-1) entrywise with the scaling of `zeta_basis` applied
    against each row's last nonzero entry; reversing the result is a basis
    of divisors, and the rows expand (blockwise) to exactly the F-dual.
    """
    from ringcodes.dual import gen_mat_dual

    ring = code.ring
    if _is_pm_xm(ring.f) is None:
        raise ValueError("reverse basis needs f == x^m -+ 1")
    stripped = gen_mat_dual(code.cgm, check=False).stripped
    xinv = x_inverse(ring)
    rows = []
    for r in stripped.rows:
        last = None
        for e in r.entries:
            if not e.is_zero:
                last = e
        rows.append(_substituted_row(ring, xinv, r, last.rep))
    return CodeMatrix(ring, rows, stripped.ncols)
