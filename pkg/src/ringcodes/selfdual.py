"""Self-dual, self-reciprocal-dual, and isodual codes.

Length 2 admits a three-way classification of nonzero codes by the shape of
the canonical matrix, with closed-form duals per class and checkable
self-duality conditions.  A parametric family turns any solution of
g'^2 == -1 modulo f' into a self-dual two-row code over a larger modulus.
Existence of self-dual codes at a given length reduces to arithmetic on q
and the square part of f.
"""

import itertools
from dataclasses import dataclass

from ringcodes.codes import Code, CodeMatrix, CodeWord
from ringcodes.dual import dual_code, dual_oracle
from ringcodes.errors import (
    BudgetExceededError,
    InvariantViolationError,
)
from ringcodes.polynomials import (
    Poly,
    divisors,
    factor_profile,
    is_square,
    polys_below,
    sqrt2,
)
from ringcodes.quotient import QuotRing


@dataclass(frozen=True)
class Length2Class:
    """Shape of a nonzero length-2 canonical matrix.

    tag "I":   single row (g1, g2) with g1 a nonzero divisor, g1 | g2;
    tag "II":  single row (0, g2) with g2 a divisor;
    tag "III": two rows [[g1, g2], [0, g3]] with divisors g1, g3 and
               deg g2 < deg g3.
    Payload polynomials are canonical representatives.
    """

    tag: str
    g1: Poly | None
    g2: Poly | None
    g3: Poly | None


def classify_length2(code):
    """Class tag and payload of a nonzero length-2 code."""
    if code.length != 2:
        raise ValueError("classification is for length 2")
    mat = code.cgm
    if mat.nrows == 0:
        raise ValueError("the zero code has no class")
    if mat.nrows == 2:
        return Length2Class(
            "III",
            mat.entry(0, 0).rep,
            mat.entry(0, 1).rep,
            mat.entry(1, 1).rep,
        )
    row = mat.rows[0]
    if row.leading_index() == 0:
        return Length2Class("I", row[0].rep, row[1].rep, None)
    return Length2Class("II", None, row[1].rep, None)


def dual_of_length2(ring, cls):
    """Closed-form generating matrix of the dual, per class."""
    f = ring.f
    if cls.tag == "I":
        h1 = ring.elem(f // cls.g1)
        quo, rem = divmod(cls.g2, cls.g1)
        if not rem.is_zero:
            raise InvariantViolationError("class I requires g1 | g2")
        rows = [
            [h1, ring.zero()],
            [ring.elem(-quo), ring.one()],
        ]
    elif cls.tag == "II":
        rows = [
            [ring.one(), ring.zero()],
            [ring.zero(), ring.elem(f // cls.g2)],
        ]
    elif cls.tag == "III":
        h1 = ring.elem(f // cls.g1)
        h3 = f // cls.g3
        num = h3 * cls.g2
        quo, rem = divmod(num, cls.g1)
        if not rem.is_zero:
            raise InvariantViolationError("class III requires g1 | h3*g2")
        rows = [
            [h1, ring.zero()],
            [ring.elem(-quo), ring.elem(h3)],
        ]
    else:
        raise ValueError(f"unknown class tag {cls.tag!r}")
    return CodeMatrix(ring, [CodeWord(ring, r) for r in rows], 2)


def is_self_dual(code):
    return code == dual_code(code)


def is_self_reciprocal_dual(code):
    """C equal to the reversed dual (entries of the dual read right to left)."""
    return code == dual_code(code).reversed_code()


def is_isodual(code, *, max_length=7):
    """Search for a coordinate permutation carrying the code onto its dual.

    Returns the first witness permutation in lexicographic order, or None.
    Factorial in the length, hence the budget.
    """
    if code.length > max_length:
        raise BudgetExceededError(
            f"isodual search is factorial; length capped at {max_length}",
            bound=max_length,
        )
    dual = dual_code(code)
    for perm in itertools.permutations(range(code.length)):
        if code.permuted(perm) == dual:
            return perm
    return None


def selfdual_single_row(code):
    """Self-duality of a code whose canonical matrix has one row.

    Closed form: length 1 with f == g1^2, or length 2 with g1 == 1 and
    g2^2 == -1.  Longer single-row codes are never self-dual.
    """
    mat = code.cgm
    if mat.nrows != 1:
        raise ValueError("closed form applies to single-row canonical bases")
    row = mat.rows[0]
    ring = code.ring
    if code.length == 1:
        g1 = row[0].rep
        return g1 * g1 == ring.f
    if code.length == 2:
        g1, g2 = row[0], row[1]
        return g1 == ring.one() and g2 * g2 == ring.elem(-1)
    return False


def selfrecip_single_row(code):
    """Self-reciprocal-duality of a single-row code, closed form.

    Length 1: f == g1^2.  Length 2, with row (g1, g2): either
    (g1, g2) == (0, 1), or (g1, g2) == (1, 0), or the field has
    characteristic 2 and g1 == 1.  Longer rows: never.
    """
    mat = code.cgm
    if mat.nrows != 1:
        raise ValueError("closed form applies to single-row canonical bases")
    row = mat.rows[0]
    ring = code.ring
    if code.length == 1:
        g1 = row[0].rep
        return g1 * g1 == ring.f
    if code.length == 2:
        g1, g2 = row[0], row[1]
        one, zero = ring.one(), ring.zero()
        if g1 == zero and g2 == one:
            return True
        if g1 == one and g2 == zero:
            return True
        if ring.ctx.p == 2 and g1 == one:
            return True
        return False
    return False


def srd_length2(code):
    """Self-reciprocal-duality at length 2, closed form by class.

    Class I: g1 == 1 and (g2 == 0 or characteristic 2).
    Class II: g2 == 1.
    Class III: g1 * g3 == f and (g2 == 0 or characteristic 2).
    """
    cls = classify_length2(code)
    ring = code.ring
    char2 = ring.ctx.p == 2
    if cls.tag == "I":
        return cls.g1 == Poly.one(ring.ctx) and (char2 or cls.g2.is_zero)
    if cls.tag == "II":
        return cls.g2 == Poly.one(ring.ctx)
    return cls.g1 * cls.g3 == ring.f and (char2 or cls.g2.is_zero)


def class3_selfdual_conditions(ring, cls):
    """The self-duality test for a class III matrix, as ring identities.

    Requires deg g1 + deg g3 == m with g3^2 == 0, g2*g3 == 0 and
    g1^2 + g2^2 == 0 in A, and g1^2 dividing f as polynomials.
    """
    if cls.tag != "III":
        raise ValueError("conditions apply to class III")
    f = ring.f
    g1, g2, g3 = cls.g1, cls.g2, cls.g3
    if int(g1.degree) + int(g3.degree) != ring.m:
        return False
    e1 = ring.elem(g1)
    e2 = ring.elem(g2)
    e3 = ring.elem(g3)
    if not (e3 * e3).is_zero:
        return False
    if not (e2 * e3).is_zero:
        return False
    if not (e1 * e1 + e2 * e2).is_zero:
        return False
    return (f % (g1 * g1)).is_zero


def class3_witness(ring, cls):
    """Normalize a self-dual class III matrix into family parameters.

    Returns (g1, f_prime, g_prime, r) with f == g1^2 * f_prime,
    g2 == g1 * g_prime, and g_prime^2 + 1 == r * f_prime; g3 is then
    forced to g1 * f_prime.
    """
    if not class3_selfdual_conditions(ring, cls):
        raise ValueError("matrix does not satisfy the self-duality test")
    f = ring.f
    g1 = cls.g1
    f_prime, rem = divmod(f, g1 * g1)
    if not rem.is_zero:
        raise InvariantViolationError("g1^2 does not divide f")
    g_prime, rem = divmod(cls.g2, g1)
    if not rem.is_zero:
        raise InvariantViolationError("g1 does not divide g2")
    num = g_prime * g_prime + Poly.one(ring.ctx)
    r, rem = divmod(num, f_prime)
    if not rem.is_zero:
        raise InvariantViolationError("g'^2 + 1 not a multiple of f'")
    if cls.g3 != g1 * f_prime:
        raise InvariantViolationError("g3 is not g1 * f'")
    return g1, f_prime, g_prime, r


def build_selfdual_class3(ctx, g1, f_prime, g_prime):
    """Self-dual two-row code from family parameters.

    Needs g1 monic of degree >= 1, f_prime monic, deg g_prime < deg f_prime
    and f_prime | g_prime^2 + 1.  The code lives over f = g1^2 * f_prime
    with matrix [[g1, g1*g'], [0, g1*f']]; self-duality is certified on the
    way out.
    """
    if g1.is_zero or not g1.is_monic or g1.degree < 1:
        raise ValueError("g1 must be monic of degree >= 1")
    if f_prime.is_zero or not f_prime.is_monic:
        raise ValueError("f' must be monic")
    if not g_prime.is_zero and g_prime.degree >= f_prime.degree:
        raise ValueError("g' must reduce below deg f'")
    num = g_prime * g_prime + Poly.one(ctx)
    if not (num % f_prime).is_zero:
        raise ValueError("f' must divide g'^2 + 1")
    f = g1 * g1 * f_prime
    ring = QuotRing(f)
    rows = [
        [ring.elem(g1), ring.elem(g1 * g_prime)],
        [ring.zero(), ring.elem(g1 * f_prime)],
    ]
    code = Code(ring, 2, [CodeWord(ring, r) for r in rows])
    if not is_self_dual(code):
        raise InvariantViolationError("family output failed self-duality")
    return ring, code


def char2_selfdual_family(ctx, f_prime):
    """All residues g' below deg f' with g'^2 == -1 (mod f'), char 2.

    There -1 == 1 and g'^2 + 1 == (g' + 1)^2, so f' divides the square
    exactly when the half-power root s = sqrt2(f') divides g' + 1.  The
    solutions are g' == s*h + 1 with deg h < deg f' - deg s, one per h.
    """
    if ctx.p != 2:
        raise ValueError("characteristic 2 only")
    s = sqrt2(f_prime)
    bound = int(f_prime.degree) - int(s.degree)
    one = Poly.one(ctx)
    return [(s * h + one) % f_prime for h in polys_below(ctx, bound)]


def class3_char2_conditions(ring, cls):
    """Characteristic-2 closed form for self-duality of a class III code.

    Either g1 == g3, g2 == 0 and f == g1^2, or f == g1^2 * f',
    g3 == g1 * f' and g2 == g1 * (h * sqrt2(f') + 1) for some h with
    deg h < deg f' - deg sqrt2(f').
    """
    if ring.ctx.p != 2:
        raise ValueError("characteristic 2 only")
    if cls.tag != "III":
        raise ValueError("conditions apply to class III")
    f = ring.f
    g1, g2, g3 = cls.g1, cls.g2, cls.g3
    if g1 == g3 and g2.is_zero and g1 * g1 == f:
        return True
    f_prime, rem = divmod(f, g1 * g1)
    if not rem.is_zero:
        return False
    if g3 != g1 * f_prime:
        return False
    g_prime, rem = divmod(g2, g1)
    if not rem.is_zero:
        return False
    s = sqrt2(f_prime)
    h, rem = divmod(g_prime + Poly.one(ring.ctx), s)
    if not rem.is_zero:
        return False
    return h.degree < int(f_prime.degree) - int(s.degree)


def enumerate_selfdual(ring, length, *, oracle_budget=1 << 16):
    """All self-dual codes at length 1 or 2, deterministically ordered.

    Length 1: the square root of f when f is a square.  Length 2: the
    single-row codes <(1, g2)> with g2^2 == -1 and the two-row class III
    solutions.  Each output is re-checked self-dual (by the generator
    construction always, by the brute-force oracle when the module scan
    fits the budget).
    """
    if length not in (1, 2):
        raise ValueError("enumeration covers lengths 1 and 2")
    out = []
    f = ring.f
    ctx = ring.ctx
    if length == 1:
        ok, root = is_square(f)
        if ok:
            out.append(Code(ring, 1, [[ring.elem(root)]]))
    else:
        minus_one = ring.elem(-1)
        for g2 in ring.elements():
            if g2 * g2 == minus_one:
                out.append(Code(ring, 2, [[ring.one(), g2]]))
        half = [
            d
            for d in divisors(f)
            if 1 <= d.degree <= ring.m - 1 and 2 * int(d.degree) <= ring.m
        ]
        for g1 in half:
            gg = g1 * g1
            if not (f % gg).is_zero:
                continue
            f_prime = f // gg
            deg3 = ring.m - int(g1.degree)
            g3 = g1 * f_prime
            if int(g3.degree) != deg3:
                raise InvariantViolationError("degree bookkeeping broke")
            for g_prime in polys_below(ctx, int(f_prime.degree)):
                num = g_prime * g_prime + Poly.one(ctx)
                if not (num % f_prime).is_zero:
                    continue
                g2 = g1 * g_prime
                cls = Length2Class("III", g1, g2, g3)
                if not class3_selfdual_conditions(ring, cls):
                    continue
                out.append(
                    Code(ring, 2, [[g1, g2], [Poly.zero(ctx), g3]])
                )
    seen = set()
    unique = []
    for c in out:
        k = c.cgm.key()
        if k in seen:
            continue
        seen.add(k)
        unique.append(c)
    total = ring.q ** (ring.m * length)
    for c in unique:
        if not is_self_dual(c):
            raise InvariantViolationError("enumerated code is not self-dual")
        if total <= oracle_budget:
            if not (c == dual_oracle(c, budget=oracle_budget)):
                raise InvariantViolationError(
                    "oracle disagrees with the generator construction"
                )
    return unique


def minus_one_is_square(q):
    """Whether -1 is a square in a field with q elements."""
    return q % 2 == 0 or q % 4 == 1


@dataclass(frozen=True)
class ExistenceReport:
    """Which lengths admit a self-dual code over the ring.

    `multiples_of_4`: always satisfiable (direct products of the length-4
    construction).  `all_even_lengths`: length 2 works, so every even
    length does.  `all_lengths`: length 1 works, i.e. f is a square.
    """

    all_lengths: bool
    all_even_lengths: bool
    multiples_of_4: bool


def selfdual_existence(ring):
    """Existence of self-dual codes by length class over the ring."""
    f = ring.f
    q = ring.q
    square, _ = is_square(f)
    even = minus_one_is_square(q)
    if not even:
        # q == 3 (mod 4): needs every deg(p_i) * e_i even in f's profile
        profile = factor_profile(f)
        even = all(
            (deg * mult) % 2 == 0 for deg, mult, _count in profile.entries
        )
    return ExistenceReport(
        all_lengths=square,
        all_even_lengths=even,
        multiples_of_4=True,
    )
