"""Linear codes over A = F[x]/<f>: submodules of A^l.

The central construction is `divisor_basis`: every code has a generating set
in echelon form whose leading coefficients are monic divisors of f and where
each row survives multiplication by the cofactor of its pivot only inside the
span of the later rows.  Normalizing the entries above each pivot to degree
below the pivot degree makes the matrix unique per code; that canonical form
is what `Code.cgm` exposes and what equality compares.

The canonical form is computed as a Hermite normal form over F[x] of the
generators stacked over f times the identity: the stack generates the
preimage lattice of the code, its triangular basis has monic diagonal
entries dividing f, and the rows whose diagonal entry is f itself reduce to
exactly f*e_j and are dropped.
"""

import itertools
import math
from dataclasses import dataclass

from ringcodes.errors import (
    BudgetExceededError,
    ContextMismatchError,
    NotADivisorBasisError,
)
from ringcodes.polynomials import NEG_DEG, Poly, divisors, polys_below
from ringcodes.quotient import QuotRing, RingElem, divide_in_ideal


class CodeWord:
    """A word in A^l."""

    __slots__ = ("ring", "entries")

    def __init__(self, ring, entries):
        entries = tuple(ring.elem(e) for e in entries)
        if not entries:
            raise ValueError("words must have length >= 1")
        self.ring = ring
        self.entries = entries

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, j):
        return self.entries[j]

    def __iter__(self):
        return iter(self.entries)

    def _check(self, other):
        if not isinstance(other, CodeWord):
            raise TypeError(f"expected CodeWord, got {other!r}")
        if other.ring != self.ring or len(other) != len(self):
            raise ContextMismatchError("words from different modules")
        return other

    def __add__(self, other):
        other = self._check(other)
        return CodeWord(
            self.ring, [a + b for a, b in zip(self.entries, other.entries)]
        )

    def __sub__(self, other):
        other = self._check(other)
        return CodeWord(
            self.ring, [a - b for a, b in zip(self.entries, other.entries)]
        )

    def __neg__(self):
        return CodeWord(self.ring, [-a for a in self.entries])

    def scaled(self, s):
        s = self.ring.elem(s)
        return CodeWord(self.ring, [s * a for a in self.entries])

    def dot(self, other):
        other = self._check(other)
        out = self.ring.zero()
        for a, b in zip(self.entries, other.entries):
            out = out + a * b
        return out

    @property
    def is_zero(self):
        return all(e.is_zero for e in self.entries)

    def leading_index(self):
        """Index of the first nonzero entry (0-based); math.inf on zero."""
        for j, e in enumerate(self.entries):
            if not e.is_zero:
                return j
        return math.inf

    def leading_coef(self):
        for e in self.entries:
            if not e.is_zero:
                return e
        raise ValueError("zero word has no leading coefficient")

    def reversed_word(self):
        return CodeWord(self.ring, tuple(reversed(self.entries)))

    def without_coord(self, j):
        if len(self.entries) < 2:
            raise ValueError("cannot shorten a word of length 1")
        return CodeWord(
            self.ring, self.entries[:j] + self.entries[j + 1 :]
        )

    def permuted(self, perm):
        """Entry j of the result is entry perm[j] of this word."""
        if sorted(perm) != list(range(len(self.entries))):
            raise ValueError("not a permutation of the coordinates")
        return CodeWord(self.ring, [self.entries[p] for p in perm])

    def key(self):
        return tuple(e.rep.coeffs for e in self.entries)

    def __eq__(self, other):
        if not isinstance(other, CodeWord):
            return NotImplemented
        return self.ring == other.ring and self.key() == other.key()

    def __hash__(self):
        return hash((self.ring, self.key()))

    def __repr__(self):
        return "(" + ", ".join(str(e) for e in self.entries) + ")"


class CodeMatrix:
    """A tuple of equal-length words used as a generating set.

    `ncols` is explicit so the empty matrix (zero code) keeps its length.
    """

    __slots__ = ("ring", "ncols", "rows")

    def __init__(self, ring, rows, ncols=None):
        rows = tuple(
            r if isinstance(r, CodeWord) else CodeWord(ring, r) for r in rows
        )
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
        for r in rows:
            if r.ring != ring:
                raise ContextMismatchError("row from a different ring")
        self.ring = ring
        self.ncols = ncols
        self.rows = rows

    @property
    def nrows(self):
        return len(self.rows)

    def __iter__(self):
        return iter(self.rows)

    def __getitem__(self, i):
        return self.rows[i]

    def entry(self, i, j):
        return self.rows[i][j]

    def without_zero_rows(self):
        return CodeMatrix(
            self.ring, [r for r in self.rows if not r.is_zero], self.ncols
        )

    def reversed_matrix(self):
        """Rows and columns both reversed."""
        return CodeMatrix(
            self.ring,
            [r.reversed_word() for r in reversed(self.rows)],
            self.ncols,
        )

    def key(self):
        return tuple(r.key() for r in self.rows)

    def __eq__(self, other):
        if not isinstance(other, CodeMatrix):
            return NotImplemented
        return (
            self.ring == other.ring
            and self.ncols == other.ncols
            and self.key() == other.key()
        )

    def __hash__(self):
        return hash((self.ring, self.ncols, self.key()))

    def pretty(self):
        """Aligned-column rendering."""
        cells = [[str(e) for e in row] for row in self.rows]
        if not cells:
            return "(empty, %d columns)" % self.ncols
        widths = [
            max(len(cells[i][j]) for i in range(len(cells)))
            for j in range(self.ncols)
        ]
        lines = []
        for row in cells:
            lines.append(
                "[ " + "  ".join(c.rjust(w) for c, w in zip(row, widths)) + " ]"
            )
        return "\n".join(lines)

    def __repr__(self):
        return f"CodeMatrix({self.nrows}x{self.ncols} over {self.ring.f!s})"


@dataclass(frozen=True)
class DivisorBasisInfo:
    """Shape data of a canonical generator matrix."""

    pivot_cols: tuple
    pivots: tuple  # monic divisor of f per row, as Poly
    dim_f: int


@dataclass
class BasisDiagnostics:
    """Outcome of the basis-of-divisors checks on a generating matrix.

    `echelon`: rows are nonzero with strictly increasing leading indices.
    `pivots_divide`: every leading coefficient is a monic divisor of f.
    `cofactor_condition`: multiplying each row by the cofactor of its
    leading coefficient lands in the span of the later rows (None when the
    check was skipped).
    `dim_matches`: sum of (m - deg pivot) equals the F-dimension of the span.
    """

    echelon: bool
    pivots_divide: bool
    dim_matches: bool
    cofactor_condition: bool | None = None

    def __bool__(self):
        return (
            self.echelon
            and self.pivots_divide
            and self.dim_matches
            and self.cofactor_condition is not False
        )


def _hermite_rows(ring, rows, ncols):
    """Hermite normal form of the given A^l rows stacked over f*I.

    Returns (cgm_rows, pivot_cols, pivots) where cgm_rows are lists of
    Poly with the canonical degree bounds and pivots are the monic diagonal
    entries that are proper divisors of f (rows with diagonal f vanish).
    """
    f = ring.f
    l = ncols
    if l < 1:
        raise ValueError("cannot take the Hermite form of nothing")
    work = [[e.rep for e in r] for r in rows]
    zero = Poly.zero(ring.ctx)
    for j in range(l):
        work.append([f if t == j else zero for t in range(l)])

    pivot_cols = []
    pivots = []
    top = 0
    for col in range(l):
        while True:
            live = [
                i for i in range(top, len(work)) if not work[i][col].is_zero
            ]
            if not live:
                break
            best = min(live, key=lambda i: work[i][col].degree)
            rest = [i for i in live if i != best]
            if not rest:
                work[top], work[best] = work[best], work[top]
                break
            for i in rest:
                quo = work[i][col] // work[best][col]
                if quo.is_zero:
                    continue
                work[i] = [
                    a - quo * b for a, b in zip(work[i], work[best])
                ]
        if not live:
            # cannot happen: the f*e_col row keeps every column populated
            raise AssertionError("column with no pivot in the lifted stack")
        lead = work[top][col]
        if not lead.is_monic:
            scale = ring.ctx.inv_raw(lead.leading_raw())
            work[top] = [e.scale(scale) for e in work[top]]
        pivot_cols.append(col)
        pivots.append(work[top][col])
        top += 1

    # reduce the entries above each pivot below the pivot degree
    for t in range(len(pivot_cols)):
        col = pivot_cols[t]
        piv = work[t][col]
        for s in range(t):
            quo = work[s][col] // piv
            if quo.is_zero:
                continue
            work[s] = [a - quo * b for a, b in zip(work[s], work[t])]

    keep_rows = []
    keep_cols = []
    keep_pivots = []
    for t, col in enumerate(pivot_cols):
        if pivots[t] == f:
            # such a row reduces to f*e_col, i.e. zero in A
            for j, e in enumerate(work[t]):
                if j != col and not e.is_zero:
                    raise AssertionError(
                        "modulus-pivot row with a nonzero off-pivot entry"
                    )
            continue
        keep_rows.append(work[t])
        keep_cols.append(col)
        keep_pivots.append(pivots[t])
    return keep_rows, tuple(keep_cols), tuple(keep_pivots)


def divisor_basis(mat):
    """Canonical generator matrix and shape info for the span of `mat`."""
    ring = mat.ring
    rows, cols, pivots = _hermite_rows(ring, mat.rows, mat.ncols)
    cgm_rows = [
        CodeWord(ring, [RingElem(ring, e) for e in row]) for row in rows
    ]
    dim = sum(ring.m - int(p.degree) for p in pivots)
    return (
        CodeMatrix(ring, cgm_rows, mat.ncols),
        DivisorBasisInfo(cols, pivots, dim),
    )


def is_divisor_basis(mat, *, deep=False):
    """Check the basis-of-divisors conditions on a generating matrix.

    With deep=True the cofactor condition is verified row by row; the
    cheap route infers it from a dimension count, which is equivalent.
    """
    ring = mat.ring
    live = mat.without_zero_rows()
    echelon = True
    inds = []
    if live.nrows != mat.nrows:
        echelon = False
    for r in mat.rows:
        if r.is_zero:
            continue
        inds.append(r.leading_index())
    if any(b <= a for a, b in zip(inds, inds[1:])):
        echelon = False

    pivots_divide = True
    claimed = 0
    for r in live.rows:
        lead = r.leading_coef().rep
        if not lead.is_monic or not (ring.f % lead).is_zero:
            pivots_divide = False
        else:
            claimed += ring.m - int(lead.degree)

    dim_matches = False
    if echelon and pivots_divide:
        _, info = divisor_basis(mat)
        dim_matches = info.dim_f == claimed

    cofactor = None
    if deep and echelon and pivots_divide:
        cofactor = True
        rows = list(mat.rows)
        for i in range(len(rows)):
            r = rows[i]
            if r.is_zero:
                continue
            h = ring.cofactor(r.leading_coef())
            target = r.scaled(h)
            tail = rows[i + 1 :]
            if not tail:
                if not target.is_zero:
                    cofactor = False
                    break
                continue
            sub = CodeMatrix(ring, tail, mat.ncols)
            sub_cgm, sub_info = divisor_basis(sub)
            if membership_witness(sub_cgm, sub_info, target) is None:
                cofactor = False
                break

    return BasisDiagnostics(echelon, pivots_divide, dim_matches, cofactor)


def is_cgm(mat):
    """Divisor basis plus the above-pivot degree bounds."""
    diag = is_divisor_basis(mat)
    if not diag:
        return False
    for i, r in enumerate(mat.rows):
        col = r.leading_index()
        piv_deg = r.leading_coef().rep.degree
        for s in range(i):
            e = mat.rows[s][col]
            if not e.is_zero and e.rep.degree >= piv_deg:
                return False
    return True


def membership_witness(cgm_mat, info, word):
    """Coefficients expressing `word` over the canonical rows, or None.

    Reduction along the pivots: at each pivot column the residual entry
    must lie in the ideal generated by the pivot, which is an exact
    division test for divisors of f.
    """
    ring = cgm_mat.ring
    if word.ring != ring or len(word) != cgm_mat.ncols:
        raise ContextMismatchError("word does not live in the same module")
    residual = list(word.entries)
    coeffs = []
    for row, col, piv in zip(cgm_mat.rows, info.pivot_cols, info.pivots):
        w = divide_in_ideal(residual[col], ring.elem(piv))
        if w is None:
            return None
        coeffs.append(w)
        if not w.is_zero:
            residual = [a - w * b for a, b in zip(residual, row.entries)]
    if any(not e.is_zero for e in residual):
        return None
    return coeffs


class Code:
    """An A-submodule of A^l, held by a generating set.

    The canonical generator matrix, dimension, and cardinality are computed
    lazily and cached; equality compares canonical matrices.
    """

    __slots__ = ("ring", "length", "generators", "_cgm", "_info")

    def __init__(self, ring, length, generators=(), *, _cgm=None, _info=None):
        if length < 1:
            raise ValueError("codes need length >= 1")
        gens = []
        for g in generators:
            w = g if isinstance(g, CodeWord) else CodeWord(ring, g)
            if w.ring != ring:
                raise ContextMismatchError("generator from a different ring")
            if len(w) != length:
                raise ValueError("generator of the wrong length")
            gens.append(w)
        self.ring = ring
        self.length = length
        self.generators = tuple(gens)
        self._cgm = _cgm
        self._info = _info

    @classmethod
    def from_rows(cls, ring, rows, length=None):
        rows = [
            r if isinstance(r, CodeWord) else CodeWord(ring, r) for r in rows
        ]
        if length is None:
            if not rows:
                raise ValueError("need rows or an explicit length")
            length = len(rows[0])
        return cls(ring, length, rows)

    def _canonical(self):
        if self._cgm is None:
            mat = CodeMatrix(self.ring, self.generators, self.length)
            self._cgm, self._info = divisor_basis(mat)
        return self._cgm, self._info

    @property
    def cgm(self):
        return self._canonical()[0]

    @property
    def basis_info(self):
        return self._canonical()[1]

    @property
    def dim_f(self):
        return self.basis_info.dim_f

    @property
    def cardinality(self):
        return self.ring.q**self.dim_f

    @property
    def is_zero(self):
        return self.cgm.nrows == 0

    def leading_index(self):
        if self.is_zero:
            return math.inf
        return self.cgm.rows[0].leading_index()

    def membership(self, word):
        if not isinstance(word, CodeWord):
            word = CodeWord(self.ring, word)
        mat, info = self._canonical()
        return membership_witness(mat, info, word)

    def contains(self, word):
        return self.membership(word) is not None

    def codewords(self, *, budget=1 << 20):
        """Iterate all codewords, each exactly once.

        Every codeword is a unique combination sum z_i * row_i with
        deg z_i < m - deg(pivot_i).
        """
        if self.cardinality > budget:
            raise BudgetExceededError(
                f"code has {self.cardinality} words, budget {budget}",
                bound=budget,
            )
        mat, info = self._canonical()
        zero = CodeWord(
            self.ring, [self.ring.zero()] * self.length
        )
        ranges = [
            list(polys_below(self.ring.ctx, self.ring.m - int(p.degree)))
            for p in info.pivots
        ]
        for combo in itertools.product(*ranges):
            w = zero
            for z, row in zip(combo, mat.rows):
                if z.is_zero:
                    continue
                w = w + row.scaled(self.ring.elem(z))
            yield w

    def reversed_code(self):
        """Entries of every generator reversed (the reciprocal module)."""
        return Code(
            self.ring,
            self.length,
            [r.reversed_word() for r in self.cgm.rows],
        )

    def permuted(self, perm):
        return Code(
            self.ring, self.length, [r.permuted(perm) for r in self.cgm.rows]
        )

    def punctured_first(self):
        """Drop the first coordinate of every generator."""
        if self.length < 2:
            raise ValueError("cannot puncture length 1")
        return Code(
            self.ring,
            self.length - 1,
            [r.without_coord(0) for r in self.cgm.rows if not r.is_zero],
        )

    def shortened_first(self):
        """Subcode with first coordinate zero, then that coordinate dropped.

        On a canonical matrix this drops the first row exactly when its
        pivot sits in column 0 (the cofactor condition pushes the lost
        multiples into the remaining rows), and is plain puncturing when no
        generator touches column 0.
        """
        if self.length < 2:
            raise ValueError("cannot shorten length 1")
        mat = self.cgm
        rows = mat.rows
        if rows and rows[0].leading_index() == 0:
            rows = rows[1:]
        return Code(
            self.ring, self.length - 1, [r.without_coord(0) for r in rows]
        )

    def __eq__(self, other):
        if not isinstance(other, Code):
            return NotImplemented
        if self.ring != other.ring or self.length != other.length:
            raise ContextMismatchError(
                "codes over different rings or lengths are not comparable"
            )
        return self.cgm.key() == other.cgm.key()

    def __hash__(self):
        return hash((self.ring, self.length, self.cgm.key()))

    def __repr__(self):
        return (
            f"Code(length={self.length}, dim_F={self.dim_f} "
            f"over {self.ring.f!s})"
        )


def direct_product(c1, c2):
    """The product module inside A^(l1+l2); blocks stay canonical."""
    if c1.ring != c2.ring:
        raise ContextMismatchError("codes over different rings")
    ring = c1.ring
    zero = ring.zero()
    rows = []
    for r in c1.cgm.rows:
        rows.append(CodeWord(ring, list(r.entries) + [zero] * c2.length))
    for r in c2.cgm.rows:
        rows.append(CodeWord(ring, [zero] * c1.length + list(r.entries)))
    length = c1.length + c2.length
    out = Code(ring, length, rows)
    mat = CodeMatrix(ring, rows, length)
    if is_cgm(mat):
        cols = tuple(
            list(c1.basis_info.pivot_cols)
            + [c + c1.length for c in c2.basis_info.pivot_cols]
        )
        out._cgm = mat
        out._info = DivisorBasisInfo(
            cols,
            c1.basis_info.pivots + c2.basis_info.pivots,
            c1.dim_f + c2.dim_f,
        )
    return out


def enumerate_codes(ring, length, *, budget=1 << 22):
    """All codes of the given length over the ring, one Code per module.

    Walks every canonical-matrix shape: a set of pivot columns, a monic
    proper divisor of f per pivot, and free entries right of each pivot
    (bounded by the pivot degree under later pivots).  Candidates are kept
    when each row times the cofactor of its pivot falls in the span of the
    later rows; the zero code is yielded first.

    The budget bounds the number of candidate matrices examined.
    """
    ctx = ring.ctx
    f = ring.f
    m = ring.m
    yield Code(
        ring,
        length,
        (),
        _cgm=CodeMatrix(ring, (), length),
        _info=DivisorBasisInfo((), (), 0),
    )
    divs = [d for d in divisors(f) if d.degree < m]
    zero = ring.zero()
    spent = 0
    for k in range(1, length + 1):
        for cols in itertools.combinations(range(length), k):
            for pivs in itertools.product(divs, repeat=k):
                # choices for each free slot, rows scanned left to right
                slots = []
                shape = []
                for i in range(k):
                    for j in range(cols[i] + 1, length):
                        later = [t for t in range(i + 1, k) if cols[t] == j]
                        if later:
                            bound = int(pivs[later[0]].degree)
                            if bound == 0:
                                continue  # forced zero above a unit pivot
                            slots.append(list(polys_below(ctx, bound)))
                        else:
                            slots.append(list(polys_below(ctx, m)))
                        shape.append((i, j))
                count = 1
                for s in slots:
                    count *= len(s)
                spent += count
                if spent > budget:
                    raise BudgetExceededError(
                        f"enumeration budget {budget} exceeded", bound=budget
                    )
                for choice in itertools.product(*slots):
                    entries = [
                        [zero] * length for _ in range(k)
                    ]
                    for i in range(k):
                        entries[i][cols[i]] = ring.elem(pivs[i])
                    for (i, j), val in zip(shape, choice):
                        entries[i][j] = ring.elem(val)
                    rows = [CodeWord(ring, e) for e in entries]
                    ok = True
                    for i in range(k - 1, -1, -1):
                        h = ring.cofactor(rows[i].leading_coef())
                        target = rows[i].scaled(h)
                        if i == k - 1:
                            if not target.is_zero:
                                ok = False
                                break
                            continue
                        tail = rows[i + 1 :]
                        sub = CodeMatrix(ring, tail, length)
                        sub_info = DivisorBasisInfo(
                            cols[i + 1 :],
                            pivs[i + 1 :],
                            sum(m - int(p.degree) for p in pivs[i + 1 :]),
                        )
                        if membership_witness(sub, sub_info, target) is None:
                            ok = False
                        if not ok:
                            break
                    if not ok:
                        continue
                    mat = CodeMatrix(ring, rows, length)
                    info = DivisorBasisInfo(
                        cols,
                        pivs,
                        sum(m - int(p.degree) for p in pivs),
                    )
                    yield Code(ring, length, rows, _cgm=mat, _info=info)
