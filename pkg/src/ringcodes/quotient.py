"""Quotient rings A = F[x]/<f(x)> with f monic of degree >= 1.

Ring elements carry their canonical representative (degree < deg f).  The
divisibility helpers here are the workhorses of the code machinery: for a
monic divisor g of f, the ideal <g> in A is exactly the image of the
polynomials divisible by g, which keeps ideal membership an exact
polynomial division.
"""

from ringcodes.errors import ContextMismatchError, NotADivisorError
from ringcodes.polynomials import Poly, extgcd, polys_below


class QuotRing:
    """Context for F[x]/<f>; compares and hashes structurally."""

    __slots__ = ("ctx", "f", "m", "q")

    def __init__(self, f):
        if not isinstance(f, Poly):
            raise TypeError("modulus must be a Poly")
        if f.is_zero or f.degree < 1:
            raise ValueError("modulus must have degree >= 1")
        if not f.is_monic:
            raise ValueError("modulus must be monic")
        self.ctx = f.ctx
        self.f = f
        self.m = int(f.degree)
        self.q = f.ctx.q

    def elem(self, v):
        """Coerce a Poly, RingElem, int, or coefficient list into the ring."""
        if isinstance(v, RingElem):
            if v.ring != self:
                raise ContextMismatchError("element from a different ring")
            return v
        if not isinstance(v, Poly):
            v = Poly(self.ctx, v if isinstance(v, (list, tuple)) else [v])
        if v.ctx != self.ctx:
            raise ContextMismatchError("polynomial over a different field")
        return RingElem(self, v % self.f)

    def zero(self):
        return RingElem(self, Poly.zero(self.ctx))

    def one(self):
        return RingElem(self, Poly.one(self.ctx))

    def x(self):
        return RingElem(self, Poly.x(self.ctx) % self.f)

    def elements(self):
        """All q**m elements, graded-lexicographic by representative."""
        for rep in polys_below(self.ctx, self.m):
            yield RingElem(self, rep)

    @property
    def size(self):
        return self.q**self.m

    def cofactor(self, g):
        """f/g mod f for a divisor g of f; by convention 1 when g == 0.

        The product cofactor(g) * g is always 0 in A.
        """
        g = g.rep if isinstance(g, RingElem) else g
        if g.is_zero:
            return self.one()
        quo, rem = divmod(self.f, g)
        if not rem.is_zero:
            raise NotADivisorError(f"{g} does not divide the modulus")
        return self.elem(quo)

    def subst(self, poly, value):
        """Evaluate a polynomial at a ring element (Horner)."""
        value = self.elem(value)
        out = self.zero()
        for c in reversed(poly.coeffs):
            out = out * value + self.elem(Poly(self.ctx, [c]))
        return out

    def __eq__(self, other):
        if not isinstance(other, QuotRing):
            return NotImplemented
        return self.ctx == other.ctx and self.f.coeffs == other.f.coeffs

    def __hash__(self):
        return hash((self.ctx, self.f.coeffs))

    def __repr__(self):
        return f"QuotRing({self.f!s} over {self.ctx!r})"


class RingElem:
    """Element of a QuotRing, stored by its canonical representative."""

    __slots__ = ("ring", "rep")

    def __init__(self, ring, rep):
        self.ring = ring
        self.rep = rep

    def _check(self, other):
        if not isinstance(other, RingElem):
            raise TypeError(f"expected RingElem, got {other!r}")
        if other.ring != self.ring:
            raise ContextMismatchError("elements from different rings")
        return other

    def __add__(self, other):
        other = self._check(other)
        return RingElem(self.ring, self.rep + other.rep)

    def __sub__(self, other):
        other = self._check(other)
        return RingElem(self.ring, self.rep - other.rep)

    def __neg__(self):
        return RingElem(self.ring, -self.rep)

    def __mul__(self, other):
        other = self._check(other)
        return RingElem(self.ring, (self.rep * other.rep) % self.ring.f)

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        out = self.ring.one()
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    @property
    def is_zero(self):
        return self.rep.is_zero

    @property
    def degree(self):
        return self.rep.degree

    def key(self):
        return self.rep.coeffs

    def is_unit(self):
        """True iff gcd(rep, f) == 1."""
        if self.rep.is_zero:
            return False
        from ringcodes.polynomials import gcd as poly_gcd

        return poly_gcd(self.rep, self.ring.f).degree == 0

    def inverse(self):
        """Multiplicative inverse; raises ZeroDivisionError on non-units."""
        if self.rep.is_zero:
            raise ZeroDivisionError("zero is not a unit")
        g, s, _ = extgcd(self.rep, self.ring.f)
        if g.degree != 0:
            raise ZeroDivisionError(f"{self.rep} is not a unit modulo f")
        return RingElem(self.ring, s % self.ring.f)

    def __eq__(self, other):
        if not isinstance(other, RingElem):
            return NotImplemented
        return self.ring == other.ring and self.rep.coeffs == other.rep.coeffs

    def __hash__(self):
        return hash((self.ring, self.rep.coeffs))

    def __repr__(self):
        return f"RingElem({self.rep!s})"

    def __str__(self):
        return str(self.rep)


def divide_in_ideal(a, g):
    """Membership of a in the principal ideal <g> when g's representative
    divides the modulus.

    Returns a witness w with w * g == a, or None if a is not a multiple.
    For such g the A-ideal <g> is the image of the F[x]-multiples of the
    representative, so the test is exact polynomial division.
    """
    g = a.ring.elem(g) if not isinstance(g, RingElem) else a._check(g)
    if g.is_zero:
        return a.ring.zero() if a.is_zero else None
    if not (a.ring.f % g.rep.monic()).is_zero:
        raise NotADivisorError(
            "ideal membership test requires the generator to divide the modulus"
        )
    quo, rem = divmod(a.rep, g.rep)
    if not rem.is_zero:
        return None
    return RingElem(a.ring, quo)
