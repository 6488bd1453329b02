"""Finite fields GF(p^n).

A ``FieldCtx`` fixes the characteristic p, the extension degree n and, for
n > 1, the monic irreducible modulus used to present GF(p^n) as
GF(p)[t]/<modulus>.  Elements are carried in a raw form that the polynomial
layer can store directly: an int in [0, p) for prime fields, a tuple of n
ints for extension fields.  ``FieldElem`` is the user-facing wrapper.

Everything here is immutable and safe to share between threads.
"""

from itertools import product

from ringcodes.errors import ContextMismatchError
from ringcodes.kernel import kernel as _k


def _is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _ext_irreducible(mod, p):
    # trial division by every monic polynomial of degree 1 .. n//2
    n = len(mod) - 1
    for d in range(1, n // 2 + 1):
        for tail in product(range(p), repeat=d):
            cand = list(tail) + [1]
            if not _k.poly_mod(list(mod), cand, p):
                return False
    return True


class FieldCtx:
    """Context object for GF(p^n); compares and hashes structurally."""

    __slots__ = ("p", "n", "q", "ext_modulus", "_mod_list")

    def __init__(self, p, ext_modulus=None):
        if not isinstance(p, int) or not _is_prime(p):
            raise ValueError(f"field characteristic must be prime, got {p!r}")
        self.p = p
        if ext_modulus is None:
            self.n = 1
            self.q = p
            self.ext_modulus = None
            self._mod_list = None
            return
        mod = [c % p for c in ext_modulus]
        while mod and mod[-1] == 0:
            mod.pop()
        if len(mod) < 3:
            raise ValueError("extension modulus must have degree >= 2")
        if mod[-1] != 1:
            raise ValueError("extension modulus must be monic")
        if not _ext_irreducible(mod, p):
            raise ValueError("extension modulus is reducible over GF(p)")
        self.n = len(mod) - 1
        self.q = p**self.n
        self.ext_modulus = tuple(mod)
        self._mod_list = mod

    def __eq__(self, other):
        if not isinstance(other, FieldCtx):
            return NotImplemented
        return (self.p, self.n, self.ext_modulus) == (
            other.p,
            other.n,
            other.ext_modulus,
        )

    def __hash__(self):
        return hash((self.p, self.n, self.ext_modulus))

    def __repr__(self):
        if self.n == 1:
            return f"FieldCtx(GF({self.p}))"
        return f"FieldCtx(GF({self.p}^{self.n}))"

    # raw-value arithmetic ------------------------------------------------

    @property
    def zero_raw(self):
        return 0 if self.n == 1 else (0,) * self.n

    @property
    def one_raw(self):
        return 1 if self.n == 1 else (1,) + (0,) * (self.n - 1)

    def coerce_raw(self, v):
        """Accept an int, a FieldElem of this ctx, or a raw value."""
        if isinstance(v, FieldElem):
            if v.ctx != self:
                raise ContextMismatchError("element from a different field")
            return v.raw
        if self.n == 1:
            if not isinstance(v, int):
                raise TypeError(f"cannot coerce {v!r} into GF({self.p})")
            return v % self.p
        if isinstance(v, int):
            return (v % self.p,) + (0,) * (self.n - 1)
        v = tuple(int(c) % self.p for c in v)
        if len(v) > self.n:
            raise ValueError("coordinate vector longer than extension degree")
        return v + (0,) * (self.n - len(v))

    def add_raw(self, a, b):
        if self.n == 1:
            return (a + b) % self.p
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def sub_raw(self, a, b):
        if self.n == 1:
            return (a - b) % self.p
        return tuple((x - y) % self.p for x, y in zip(a, b))

    def neg_raw(self, a):
        if self.n == 1:
            return (-a) % self.p
        return tuple((-x) % self.p for x in a)

    def mul_raw(self, a, b):
        if self.n == 1:
            return (a * b) % self.p
        c = _k.poly_mulmod(list(a), list(b), self._mod_list, self.p)
        return tuple(c) + (0,) * (self.n - len(c))

    def inv_raw(self, a):
        if self.is_zero_raw(a):
            raise ZeroDivisionError("inverse of zero field element")
        if self.n == 1:
            return pow(a, self.p - 2, self.p)
        # extended Euclid over GF(p)[t]
        r0, r1 = self._mod_list, [c for c in a]
        while r1 and r1[-1] == 0:
            r1.pop()
        s0, s1 = [], [1]
        while r1:
            q, r = _k.poly_divmod(r0, r1, self.p)
            r0, r1 = r1, r
            s0, s1 = s1, _k.poly_sub(s0, _k.poly_mul(q, s1, self.p), self.p)
        inv_lead = pow(r0[-1], self.p - 2, self.p)
        s0 = _k.poly_scale(s0, inv_lead, self.p)
        s0 = _k.poly_mod(s0, self._mod_list, self.p)
        return tuple(s0) + (0,) * (self.n - len(s0))

    def pow_raw(self, a, e):
        if e < 0:
            return self.pow_raw(self.inv_raw(a), -e)
        out = self.one_raw
        base = a
        while e:
            if e & 1:
                out = self.mul_raw(out, base)
            base = self.mul_raw(base, base)
            e >>= 1
        return out

    def pth_root_raw(self, a):
        """The unique b with b**p == a, i.e. a**(q/p)."""
        return self.pow_raw(a, self.q // self.p)

    def is_zero_raw(self, a):
        return a == 0 if self.n == 1 else not any(a)

    def iter_raw(self):
        """All q raw values, in a fixed deterministic order."""
        if self.n == 1:
            yield from range(self.p)
        else:
            for t in product(range(self.p), repeat=self.n):
                yield t

    # element-level API ----------------------------------------------------

    def element(self, v):
        return FieldElem(self, self.coerce_raw(v))

    def zero(self):
        return FieldElem(self, self.zero_raw)

    def one(self):
        return FieldElem(self, self.one_raw)

    def elements(self):
        for r in self.iter_raw():
            yield FieldElem(self, r)


class FieldElem:
    """An element of a fixed FieldCtx.  Immutable."""

    __slots__ = ("ctx", "raw")

    def __init__(self, ctx, raw):
        self.ctx = ctx
        self.raw = raw

    def _check(self, other):
        if not isinstance(other, FieldElem):
            raise TypeError(f"expected FieldElem, got {other!r}")
        if other.ctx != self.ctx:
            raise ContextMismatchError("elements from different fields")
        return other

    def __add__(self, other):
        other = self._check(other)
        return FieldElem(self.ctx, self.ctx.add_raw(self.raw, other.raw))

    def __sub__(self, other):
        other = self._check(other)
        return FieldElem(self.ctx, self.ctx.sub_raw(self.raw, other.raw))

    def __mul__(self, other):
        other = self._check(other)
        return FieldElem(self.ctx, self.ctx.mul_raw(self.raw, other.raw))

    def __truediv__(self, other):
        other = self._check(other)
        return FieldElem(
            self.ctx, self.ctx.mul_raw(self.raw, self.ctx.inv_raw(other.raw))
        )

    def __neg__(self):
        return FieldElem(self.ctx, self.ctx.neg_raw(self.raw))

    def __pow__(self, e):
        return FieldElem(self.ctx, self.ctx.pow_raw(self.raw, e))

    def inverse(self):
        return FieldElem(self.ctx, self.ctx.inv_raw(self.raw))

    def pth_root(self):
        """Inverse of the Frobenius x -> x**p (identity on prime fields)."""
        return FieldElem(self.ctx, self.ctx.pth_root_raw(self.raw))

    @property
    def is_zero(self):
        return self.ctx.is_zero_raw(self.raw)

    def __eq__(self, other):
        if not isinstance(other, FieldElem):
            return NotImplemented
        return self.ctx == other.ctx and self.raw == other.raw

    def __hash__(self):
        return hash((self.ctx, self.raw))

    def __repr__(self):
        return f"FieldElem({self.raw!r} in {self.ctx!r})"
