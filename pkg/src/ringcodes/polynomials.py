"""Dense univariate polynomials over a finite field.

``Poly`` stores coefficients ascending by exponent in the raw form of its
``FieldCtx`` (ints for prime fields, coordinate tuples for extensions), with
no trailing zeros.  Prime-field arithmetic is delegated to the selected
coefficient kernel; extension fields use a generic path.

Beyond ring arithmetic this module provides the factorization-adjacent
tools the code machinery needs: characteristic-p squarefree decomposition,
the "half-multiplicity radical" sqrt2 (the smallest s with  s | g  iff
h | g^2), distinct-degree factor profiles, squareness tests, and divisor
enumeration, plus the text syntax used by the command line interface.
"""

import re
from dataclasses import dataclass
from itertools import product

from ringcodes.errors import BudgetExceededError, ContextMismatchError
from ringcodes.fields import FieldCtx, FieldElem
from ringcodes.kernel import kernel as _k

NEG_DEG = float("-inf")
"""Degree of the zero polynomial, comparable below every int."""


class Poly:
    """Immutable polynomial over a fixed ``FieldCtx``."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx, coeffs=()):
        raw = [ctx.coerce_raw(c) for c in coeffs]
        while raw and ctx.is_zero_raw(raw[-1]):
            raw.pop()
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "coeffs", tuple(raw))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def _raw(cls, ctx, raw):
        """Internal: wrap an already-normalized raw coefficient list."""
        self = object.__new__(cls)
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "coeffs", tuple(raw))
        return self

    @classmethod
    def zero(cls, ctx):
        return cls._raw(ctx, ())

    @classmethod
    def one(cls, ctx):
        return cls._raw(ctx, (ctx.one_raw,))

    @classmethod
    def x(cls, ctx):
        return cls._raw(ctx, (ctx.zero_raw, ctx.one_raw))

    @classmethod
    def monomial(cls, ctx, k, c=1):
        c = ctx.coerce_raw(c)
        if ctx.is_zero_raw(c):
            return cls.zero(ctx)
        return cls._raw(ctx, (ctx.zero_raw,) * k + (c,))

    # basic queries --------------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_DEG

    @property
    def is_zero(self):
        return not self.coeffs

    @property
    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == self.ctx.one_raw

    def leading_raw(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def constant_raw(self):
        return self.coeffs[0] if self.coeffs else self.ctx.zero_raw

    def leading(self):
        return FieldElem(self.ctx, self.leading_raw())

    # arithmetic -----------------------------------------------------------

    def _check(self, other):
        if not isinstance(other, Poly):
            raise TypeError(f"expected Poly, got {other!r}")
        if other.ctx != self.ctx:
            raise ContextMismatchError("polynomials over different fields")
        return other

    def __add__(self, other):
        other = self._check(other)
        ctx = self.ctx
        if ctx.n == 1:
            return Poly._raw(
                ctx, _k.poly_add(list(self.coeffs), list(other.coeffs), ctx.p)
            )
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] = ctx.add_raw(out[i], v)
        while out and ctx.is_zero_raw(out[-1]):
            out.pop()
        return Poly._raw(ctx, out)

    def __sub__(self, other):
        other = self._check(other)
        ctx = self.ctx
        if ctx.n == 1:
            return Poly._raw(
                ctx, _k.poly_sub(list(self.coeffs), list(other.coeffs), ctx.p)
            )
        out = list(self.coeffs) + [ctx.zero_raw] * (
            len(other.coeffs) - len(self.coeffs)
        )
        for i, v in enumerate(other.coeffs):
            out[i] = ctx.sub_raw(out[i], v)
        while out and ctx.is_zero_raw(out[-1]):
            out.pop()
        return Poly._raw(ctx, out)

    def __neg__(self):
        ctx = self.ctx
        if ctx.n == 1:
            return Poly._raw(ctx, _k.poly_neg(list(self.coeffs), ctx.p))
        return Poly._raw(ctx, tuple(ctx.neg_raw(v) for v in self.coeffs))

    def __mul__(self, other):
        other = self._check(other)
        ctx = self.ctx
        if ctx.n == 1:
            return Poly._raw(
                ctx, _k.poly_mul(list(self.coeffs), list(other.coeffs), ctx.p)
            )
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly.zero(ctx)
        out = [ctx.zero_raw] * (len(a) + len(b) - 1)
        for i, av in enumerate(a):
            if ctx.is_zero_raw(av):
                continue
            for j, bv in enumerate(b):
                out[i + j] = ctx.add_raw(out[i + j], ctx.mul_raw(av, bv))
        while out and ctx.is_zero_raw(out[-1]):
            out.pop()
        return Poly._raw(ctx, out)

    def scale(self, c):
        """Multiply by a field scalar (int, FieldElem, or raw value)."""
        ctx = self.ctx
        c = ctx.coerce_raw(c)
        if ctx.n == 1:
            return Poly._raw(ctx, _k.poly_scale(list(self.coeffs), c, ctx.p))
        if ctx.is_zero_raw(c):
            return Poly.zero(ctx)
        return Poly._raw(ctx, tuple(ctx.mul_raw(v, c) for v in self.coeffs))

    def __divmod__(self, other):
        other = self._check(other)
        ctx = self.ctx
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        if ctx.n == 1:
            q, r = _k.poly_divmod(list(self.coeffs), list(other.coeffs), ctx.p)
            return Poly._raw(ctx, q), Poly._raw(ctx, r)
        rem = list(self.coeffs)
        db = len(other.coeffs) - 1
        if len(rem) - 1 < db:
            return Poly.zero(ctx), self
        inv = ctx.inv_raw(other.coeffs[-1])
        quo = [ctx.zero_raw] * (len(rem) - db)
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if ctx.is_zero_raw(c):
                continue
            factor = ctx.mul_raw(c, inv)
            quo[i - db] = factor
            for j in range(db + 1):
                rem[i - db + j] = ctx.sub_raw(
                    rem[i - db + j], ctx.mul_raw(factor, other.coeffs[j])
                )
        while rem and ctx.is_zero_raw(rem[-1]):
            rem.pop()
        while quo and ctx.is_zero_raw(quo[-1]):
            quo.pop()
        return Poly._raw(ctx, quo), Poly._raw(ctx, rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative polynomial power")
        out = Poly.one(self.ctx)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def monic(self):
        if self.is_zero:
            return self
        if self.is_monic:
            return self
        return self.scale(self.ctx.inv_raw(self.coeffs[-1]))

    def shift(self, k):
        """Multiply by x**k."""
        if self.is_zero:
            return self
        return Poly._raw(self.ctx, (self.ctx.zero_raw,) * k + self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ctx == other.ctx and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ctx, self.coeffs))

    def __repr__(self):
        if self.ctx.n == 1:
            return f"Poly({format_poly(self)!r})"
        return f"Poly({list(self.coeffs)!r})"

    def __str__(self):
        if self.ctx.n == 1:
            return format_poly(self)
        return repr(list(self.coeffs))


# elementary operations ------------------------------------------------------


def gcd(a, b):
    """Monic greatest common divisor.  gcd(0, 0) is undefined."""
    a._check(b)
    if a.is_zero and b.is_zero:
        raise ValueError("gcd(0, 0) is undefined")
    ctx = a.ctx
    if ctx.n == 1:
        return Poly._raw(ctx, _k.poly_gcd(list(a.coeffs), list(b.coeffs), ctx.p))
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def extgcd(a, b):
    """Return (g, s, t) with s*a + t*b == g, g the monic gcd."""
    a._check(b)
    if a.is_zero and b.is_zero:
        raise ValueError("gcd(0, 0) is undefined")
    ctx = a.ctx
    r0, r1 = a, b
    s0, s1 = Poly.one(ctx), Poly.zero(ctx)
    t0, t1 = Poly.zero(ctx), Poly.one(ctx)
    while not r1.is_zero:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    inv = ctx.inv_raw(r0.leading_raw())
    g, s, t = r0.scale(inv), s0.scale(inv), t0.scale(inv)
    assert s * a + t * b == g, "Bezout identity violated"
    return g, s, t


def derivative(a):
    ctx = a.ctx
    if len(a.coeffs) < 2:
        return Poly.zero(ctx)
    out = []
    for i in range(1, len(a.coeffs)):
        out.append(ctx.mul_raw(a.coeffs[i], ctx.coerce_raw(i)))
    while out and ctx.is_zero_raw(out[-1]):
        out.pop()
    return Poly._raw(ctx, out)


def reciprocal(a):
    """x**deg(a) * a(1/x):  the coefficient sequence reversed."""
    if a.is_zero:
        raise ValueError("reciprocal of the zero polynomial is undefined")
    out = list(reversed(a.coeffs))
    while out and a.ctx.is_zero_raw(out[-1]):
        out.pop()
    return Poly._raw(a.ctx, out)


def pow_mod(base, e, mod):
    """base**e reduced mod ``mod`` by square and multiply."""
    if e < 0:
        raise ValueError("negative exponent")
    out = Poly.one(base.ctx) % mod
    base = base % mod
    while e:
        if e & 1:
            out = (out * base) % mod
        base = (base * base) % mod
        e >>= 1
    return out


# squarefree structure -------------------------------------------------------


@dataclass(frozen=True)
class SquarefreeDecomp:
    """Pairwise-coprime monic squarefree parts with their multiplicities."""

    parts: tuple  # of (multiplicity, Poly), multiplicities strictly increasing

    def product(self):
        """Reconstruct the monic normalization of the decomposed input."""
        if not self.parts:
            raise ValueError("empty decomposition has no defined product")
        out = Poly.one(self.parts[0][1].ctx)
        for e, part in self.parts:
            out = out * part**e
        return out


def _poly_pth_root(a):
    # valid only when derivative(a) == 0, i.e. a is a p-th power
    ctx = a.ctx
    p = ctx.p
    out = []
    for i in range(0, len(a.coeffs), p):
        out.append(ctx.pth_root_raw(a.coeffs[i]))
    while out and ctx.is_zero_raw(out[-1]):
        out.pop()
    return Poly._raw(ctx, out)


def squarefree_decomposition(h):
    """Write monic(h) as a product of coprime squarefree parts P_e**e.

    Correct in characteristic p: when the derivative vanishes the p-th root
    is extracted coefficientwise and multiplicities are scaled by p.
    """
    if h.is_zero:
        raise ValueError("cannot decompose the zero polynomial")
    ctx = h.ctx
    h = h.monic()
    parts = {}
    e = 1
    while h.degree > 0:
        d = derivative(h)
        if d.is_zero:
            h = _poly_pth_root(h)
            e *= ctx.p
            continue
        c = gcd(h, d)
        w = h // c
        i = 1
        while w.degree > 0:
            y = gcd(w, c)
            z = w // y
            if z.degree > 0:
                parts[i * e] = z
            w = y
            c = c // y
            i += 1
        h = c
    return SquarefreeDecomp(tuple(sorted(parts.items())))


def sqrt2(h):
    """The smallest monic s such that  h | g**2  iff  s | g.

    Equals the product of the squarefree parts of h raised to ceil(e/2).
    Requires h monic and nonzero.
    """
    if h.is_zero or not h.is_monic:
        raise ValueError("sqrt2 requires a monic nonzero polynomial")
    out = Poly.one(h.ctx)
    for e, part in squarefree_decomposition(h).parts:
        out = out * part ** ((e + 1) // 2)
    return out


@dataclass(frozen=True)
class FactorProfile:
    """Degrees and multiplicities of the irreducible factors of a monic
    polynomial, without the factors themselves: (degree, multiplicity,
    how many distinct irreducibles with that pair)."""

    entries: tuple  # of (degree, multiplicity, count), sorted

    def total_degree(self):
        return sum(d * e * c for d, e, c in self.entries)


def _distinct_degree_counts(part):
    # part: monic squarefree, degree >= 1; yields (degree, count) pairs
    ctx = part.ctx
    q = ctx.q
    rem = part
    x = Poly.x(ctx)
    frob = x % rem
    d = 1
    while rem.degree >= 2 * d:
        frob = pow_mod(frob, q, rem)
        g = gcd(frob - x, rem) if not (frob - x).is_zero else rem
        if g.degree > 0:
            yield d, g.degree // d
            rem = rem // g
            if rem.degree == 0:
                return
            frob = frob % rem
        d += 1
    if rem.degree > 0:
        yield rem.degree, 1


def factor_profile(f):
    """Factor degree/multiplicity profile via squarefree decomposition and
    distinct-degree splitting; never extracts the irreducible factors."""
    if f.is_zero or not f.is_monic:
        raise ValueError("factor profile requires a monic nonzero polynomial")
    entries = []
    for e, part in squarefree_decomposition(f).parts:
        for d, count in _distinct_degree_counts(part):
            entries.append((d, e, count))
    return FactorProfile(tuple(sorted(entries)))


def is_square(f):
    """(True, w) with w**2 == f if every multiplicity is even, else
    (False, None).  Requires f monic and nonzero."""
    if f.is_zero or not f.is_monic:
        raise ValueError("is_square requires a monic nonzero polynomial")
    w = Poly.one(f.ctx)
    for e, part in squarefree_decomposition(f).parts:
        if e % 2:
            return False, None
        w = w * part ** (e // 2)
    return True, w


# enumeration ----------------------------------------------------------------


def monic_polys(ctx, degree):
    """All monic polynomials of the exact degree, ascending-coefficient
    tuples in lexicographic order."""
    if degree == 0:
        yield Poly.one(ctx)
        return
    values = list(ctx.iter_raw())
    for tail in product(values, repeat=degree):
        yield Poly._raw(
            ctx,
            tuple(
                c
                for c in tail
            )
            + (ctx.one_raw,),
        )


def polys_below(ctx, degree_bound):
    """All polynomials of degree < degree_bound (including zero), in
    graded-lexicographic order."""
    yield Poly.zero(ctx)
    for d in range(degree_bound):
        for c in monic_polys(ctx, d):
            for s in ctx.iter_raw():
                if not ctx.is_zero_raw(s):
                    yield c.scale(s)


def divisors(f, *, budget=1 << 16):
    """All monic divisors of a monic f, in graded-lexicographic order.

    Found by trial division; candidates are capped at half the degree and
    paired with their cofactors, which halves the search without changing
    the result.  Raises BudgetExceededError if the candidate count would
    exceed ``budget``.
    """
    if f.is_zero or not f.is_monic:
        raise ValueError("divisor enumeration requires a monic nonzero input")
    m = int(f.degree)
    half = m // 2
    count = sum(f.ctx.q**d for d in range(half + 1))
    if count > budget:
        raise BudgetExceededError(
            f"divisor search needs {count} trial divisions, budget is {budget}",
            bound=budget,
        )
    found = {}
    for d in range(half + 1):
        for cand in monic_polys(f.ctx, d):
            quo, rem = divmod(f, cand)
            if rem.is_zero:
                found[cand.coeffs] = cand
                found[quo.coeffs] = quo
    out = sorted(found.values(), key=lambda g: (len(g.coeffs), g.coeffs))
    return out


# text syntax ----------------------------------------------------------------

_TERM_RE = re.compile(r"^(\d+)?(x(\^(\d+))?)?$")


def format_poly(poly):
    """Render in the term grammar: descending exponents joined by '+',
    coefficients reduced into [1, p), zero polynomial as '0'."""
    if poly.ctx.n != 1:
        raise ValueError("text syntax covers prime fields only")
    if poly.is_zero:
        return "0"
    terms = []
    for k in range(len(poly.coeffs) - 1, -1, -1):
        c = poly.coeffs[k]
        if c == 0:
            continue
        if k == 0:
            terms.append(str(c))
        elif k == 1:
            terms.append("x" if c == 1 else f"{c}x")
        else:
            terms.append(f"x^{k}" if c == 1 else f"{c}x^{k}")
    return "+".join(terms)


def parse_poly(ctx, text):
    """Parse the term grammar back into a Poly.

    Raises ValueError with a character offset on malformed input.  Terms
    must appear in strictly descending exponent order; coefficients must
    lie in [1, p).
    """
    if ctx.n != 1:
        raise ValueError("text syntax covers prime fields only")
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial (column 1)")
    if s == "0":
        return Poly.zero(ctx)
    coeffs = {}
    last_exp = None
    pos = 0
    for part in s.split("+"):
        col = pos + 1
        term = part.strip()
        m = _TERM_RE.match(term)
        if not m or not term:
            raise ValueError(f"malformed term {part!r} (column {col})")
        c_str, x_part, _, e_str = m.groups()
        if c_str is None and x_part is None:
            raise ValueError(f"malformed term {part!r} (column {col})")
        c = int(c_str) if c_str is not None else 1
        if x_part is None:
            e = 0
        elif e_str is None:
            e = 1
        else:
            e = int(e_str)
        if not 1 <= c < ctx.p:
            raise ValueError(
                f"coefficient {c} outside [1, {ctx.p}) (column {col})"
            )
        if last_exp is not None and e >= last_exp:
            raise ValueError(
                f"exponents must strictly descend (column {col})"
            )
        if e in coeffs:
            raise ValueError(f"duplicate exponent {e} (column {col})")
        coeffs[e] = c
        last_exp = e
        pos += len(part) + 1
    deg = max(coeffs)
    return Poly._raw(
        ctx, tuple(coeffs.get(i, 0) for i in range(deg + 1))
    )
