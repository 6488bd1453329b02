import pytest

from ringcodes.errors import BudgetExceededError
from ringcodes.fields import FieldCtx
from ringcodes.polynomials import (
    Poly,
    derivative,
    divisors,
    extgcd,
    factor_profile,
    format_poly,
    gcd,
    is_square,
    monic_polys,
    parse_poly,
    polys_below,
    pow_mod,
    reciprocal,
    sqrt2,
    squarefree_decomposition,
)

F2 = FieldCtx(2)
F3 = FieldCtx(3)
F5 = FieldCtx(5)


def P(ctx, text):
    return parse_poly(ctx, text)


def test_construction_normalizes():
    a = Poly(F3, [1, 2, 0, 0])
    assert a.coeffs == (1, 2)
    assert a.degree == 1
    assert Poly(F3, [3, 6]).is_zero
    assert Poly(F3, []).is_zero
    assert Poly.zero(F3).degree == float("-inf")
    assert Poly.x(F3).coeffs == (0, 1)
    assert Poly.monomial(F3, 3, 2).coeffs == (0, 0, 0, 2)
    assert Poly.monomial(F3, 3, 0).is_zero


def test_immutable():
    a = Poly.x(F3)
    with pytest.raises(AttributeError):
        a.coeffs = (1,)


def test_add_mul_concrete():
    a = P(F3, "x^2+2x+1")
    b = P(F3, "x+2")
    assert a + b == P(F3, "x^2")  # 2x+x = 0 and 1+2 = 0
    assert a - b == P(F3, "x^2+x+2")
    assert a * b == P(F3, "x^3+x^2+2x+2")
    assert -b == P(F3, "2x+1")
    assert a.scale(2) == P(F3, "2x^2+x+2")
    assert a.shift(2) == P(F3, "x^4+2x^3+x^2")


def test_divmod_concrete():
    a = P(F2, "x^5+x^2")
    b = P(F2, "x^3+1")
    q, r = divmod(a, b)
    assert q == P(F2, "x^2")
    assert r.is_zero
    q, r = divmod(P(F5, "x^3+2x+4"), P(F5, "2x+1"))
    assert q * P(F5, "2x+1") + r == P(F5, "x^3+2x+4")
    assert r.degree < 1
    with pytest.raises(ZeroDivisionError):
        divmod(a, Poly.zero(F2))


def test_pow_and_monic():
    assert P(F3, "x+1") ** 3 == P(F3, "x^3+1")
    assert P(F3, "2x+2").monic() == P(F3, "x+1")
    assert P(F3, "0").monic().is_zero
    with pytest.raises(ValueError):
        P(F3, "x") ** -1


def test_gcd_concrete():
    # gcd((x+1)^2 (x+2), (x+1)(x+2)^2) = (x+1)(x+2) over GF(3)
    a = P(F3, "x+1") ** 2 * P(F3, "x+2")
    b = P(F3, "x+1") * P(F3, "x+2") ** 2
    assert gcd(a, b) == P(F3, "x^2+2")
    assert gcd(a, Poly.zero(F3)) == a.monic()
    assert gcd(P(F5, "2x+2"), P(F5, "3x+3")) == P(F5, "x+1")
    with pytest.raises(ValueError):
        gcd(Poly.zero(F3), Poly.zero(F3))


def test_extgcd_bezout():
    a = P(F5, "x^3+2x+1")
    b = P(F5, "x^2+4")
    g, s, t = extgcd(a, b)
    assert s * a + t * b == g
    assert g.is_monic
    assert (a % g).is_zero or g.degree == 0
    g2, s2, t2 = extgcd(P(F2, "x^4+x"), P(F2, "x^2+x"))
    assert g2 == P(F2, "x^2+x")
    assert s2 * P(F2, "x^4+x") + t2 * P(F2, "x^2+x") == g2


def test_derivative():
    assert derivative(P(F3, "x^3+2x+1")) == P(F3, "2")
    assert derivative(P(F3, "x^3")).is_zero
    assert derivative(P(F2, "x^2+x+1")) == P(F2, "1")
    assert derivative(P(F5, "3")).is_zero
    assert derivative(Poly.zero(F5)).is_zero


def test_reciprocal():
    assert reciprocal(P(F3, "x^2+2x")) == P(F3, "2x+1")
    assert reciprocal(P(F2, "x^3+x+1")) == P(F2, "x^3+x^2+1")
    assert reciprocal(P(F3, "2")) == P(F3, "2")
    with pytest.raises(ValueError):
        reciprocal(Poly.zero(F3))


def test_pow_mod():
    # x^2 = -1 mod x^2+1, so x^8 = 1
    assert pow_mod(Poly.x(F3), 8, P(F3, "x^2+1")) == Poly.one(F3)
    assert pow_mod(Poly.x(F2), 5, P(F2, "x^5+x^2")) == P(F2, "x^2")
    with pytest.raises(ValueError):
        pow_mod(Poly.x(F2), -1, P(F2, "x^2"))


def test_squarefree_decomposition():
    # x^5+x^2 = x^2 (x+1)(x^2+x+1) over GF(2)
    d = squarefree_decomposition(P(F2, "x^5+x^2"))
    assert d.parts == ((1, P(F2, "x^3+1")), (2, P(F2, "x")))
    assert d.product() == P(F2, "x^5+x^2")
    # (x+1)^2 (x+2) over GF(3)
    d = squarefree_decomposition(P(F3, "x^3+x^2+2x+2"))
    assert d.parts == ((1, P(F3, "x+2")), (2, P(F3, "x+1")))
    # multiplicity divisible by the characteristic: derivative vanishes
    d = squarefree_decomposition(P(F2, "x^4+x^2"))
    assert d.parts == ((2, P(F2, "x^2+x")),)
    d = squarefree_decomposition(P(F3, "x^3+1"))  # (x+1)^3 over GF(3)
    assert d.parts == ((3, P(F3, "x+1")),)
    # non-monic input is normalized first
    d = squarefree_decomposition(P(F3, "2x^2+2"))
    assert d.product() == P(F3, "x^2+1")
    with pytest.raises(ValueError):
        squarefree_decomposition(Poly.zero(F3))


def test_sqrt2_concrete():
    assert sqrt2(P(F2, "x^3")) == P(F2, "x^2")
    assert sqrt2(P(F2, "x^4+x^2")) == P(F2, "x^2+x")
    assert sqrt2(P(F2, "x^3+1")) == P(F2, "x^3+1")
    assert sqrt2(P(F3, "x^3+1")) == P(F3, "x^2+2x+1")  # (x+1)^ceil(3/2)
    assert sqrt2(Poly.one(F3)) == Poly.one(F3)
    with pytest.raises(ValueError):
        sqrt2(P(F3, "2x"))


def test_sqrt2_divisibility_law():
    # h divides g^2 exactly when sqrt2(h) divides g
    for h_text in ("x^3", "x^4+x^2", "x^2+x", "x^5+x^2"):
        h = P(F2, h_text)
        s = sqrt2(h)
        for g in polys_below(F2, 5):
            if g.is_zero:
                continue
            assert ((g * g) % h).is_zero == ((g % s).is_zero)


def test_factor_profile():
    prof = factor_profile(P(F2, "x^5+x^2"))
    assert prof.entries == ((1, 1, 1), (1, 2, 1), (2, 1, 1))
    assert prof.total_degree() == 5
    assert factor_profile(P(F2, "x^2+x")).entries == ((1, 1, 2),)
    assert factor_profile(P(F3, "x^3+1")).entries == ((1, 3, 1),)
    assert factor_profile(P(F3, "x^2+1")).entries == ((2, 1, 1),)
    assert factor_profile(Poly.one(F3)).entries == ()
    with pytest.raises(ValueError):
        factor_profile(P(F3, "2x^2"))


def test_is_square():
    ok, w = is_square(P(F2, "x^4+x^2"))
    assert ok and w == P(F2, "x^2+x")
    ok, w = is_square(P(F2, "x^3"))
    assert not ok and w is None
    ok, w = is_square(P(F3, "x^2+2x+1"))
    assert ok and w == P(F3, "x+1")
    ok, w = is_square(Poly.one(F3))
    assert ok and w == Poly.one(F3)


def test_monic_polys():
    degree2 = list(monic_polys(F3, 2))
    assert len(degree2) == 9
    assert degree2[0] == P(F3, "x^2")
    assert degree2[1] == P(F3, "x^2+x")
    assert degree2[2] == P(F3, "x^2+2x")
    assert degree2[3] == P(F3, "x^2+1")
    assert list(monic_polys(F3, 0)) == [Poly.one(F3)]
    assert all(p.is_monic and p.degree == 2 for p in degree2)


def test_polys_below():
    small = list(polys_below(F2, 2))
    assert small == [Poly.zero(F2), Poly.one(F2), P(F2, "x"), P(F2, "x+1")]
    assert len(list(polys_below(F3, 3))) == 27
    assert len({p.coeffs for p in polys_below(F3, 3)}) == 27


def test_divisors_concrete():
    divs = divisors(P(F2, "x^5+x^2"))
    expect = [
        "1",
        "x",
        "x+1",
        "x^2",
        "x^2+x",
        "x^2+x+1",
        "x^3+x^2",
        "x^3+x^2+x",
        "x^3+1",
        "x^4+x^3+x^2",
        "x^4+x",
        "x^5+x^2",
    ]
    assert divs == [P(F2, t) for t in expect]
    for d in divs:
        assert (P(F2, "x^5+x^2") % d).is_zero
    assert divisors(Poly.one(F3)) == [Poly.one(F3)]
    # x^2+1 irreducible over GF(3)
    assert divisors(P(F3, "x^2+1")) == [Poly.one(F3), P(F3, "x^2+1")]


def test_divisors_budget():
    with pytest.raises(BudgetExceededError):
        divisors(P(F2, "x^5+x^2"), budget=3)
    with pytest.raises(ValueError):
        divisors(P(F2, "0"))


def test_format_poly():
    assert format_poly(P(F3, "x^3+2x+1")) == "x^3+2x+1"
    assert format_poly(Poly.zero(F3)) == "0"
    assert format_poly(Poly(F3, [0, 2])) == "2x"
    assert format_poly(Poly(F3, [2])) == "2"
    assert format_poly(Poly(F5, [0, 0, 0, 1])) == "x^3"
    assert format_poly(Poly(F5, [1, 1, 1])) == "x^2+x+1"


def test_parse_format_round_trip():
    for text in ("0", "1", "x", "2x", "x^2+x+1", "x^7+3x^4+1"):
        assert format_poly(parse_poly(F5, text)) == text


def test_parse_errors_carry_columns():
    with pytest.raises(ValueError, match="column 1"):
        parse_poly(F3, "")
    with pytest.raises(ValueError, match="column 3"):
        parse_poly(F3, "x+x")
    with pytest.raises(ValueError, match="column 5"):
        parse_poly(F3, "x^2+3x")
    with pytest.raises(ValueError, match="column 5"):
        parse_poly(F3, "x^2+!")
    with pytest.raises(ValueError, match="column 1"):
        parse_poly(F3, "0x")
    with pytest.raises(ValueError):
        parse_poly(F3, "x^2+x^3")


def test_extension_field_polynomials():
    F4 = FieldCtx(2, ext_modulus=[1, 1, 1])
    t = Poly(F4, [(0, 1)])
    x = Poly.x(F4)
    sq = (x + t) * (x + t)
    assert sq == x * x + Poly(F4, [(1, 1)])  # x^2 + t^2, t^2 = t+1
    g = gcd((x + t) ** 2, (x + t) * (x + Poly.one(F4)))
    assert g == x + t
    q, r = divmod(sq, x + t)
    assert q == x + t
    assert r.is_zero
    with pytest.raises(ValueError):
        parse_poly(F4, "x")
    with pytest.raises(ValueError):
        format_poly(x)
