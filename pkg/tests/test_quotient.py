import pytest

from ringcodes.errors import ContextMismatchError, NotADivisorError
from ringcodes.fields import FieldCtx
from ringcodes.polynomials import Poly, parse_poly
from ringcodes.quotient import QuotRing, divide_in_ideal

F2 = FieldCtx(2)
F3 = FieldCtx(3)


def ring2(text):
    return QuotRing(parse_poly(F2, text))


def ring3(text):
    return QuotRing(parse_poly(F3, text))


def test_ring_construction():
    A = ring2("x^3+1")
    assert A.m == 3
    assert A.q == 2
    assert A.size == 8
    with pytest.raises(ValueError):
        QuotRing(parse_poly(F3, "2x+1"))  # not monic
    with pytest.raises(ValueError):
        QuotRing(parse_poly(F3, "1"))  # degree 0
    with pytest.raises(TypeError):
        QuotRing("x^2")


def test_elem_coercion_and_reduction():
    A = ring2("x^3+1")
    assert A.elem([0, 0, 0, 1]) == A.one()  # x^3 = 1
    assert A.elem(parse_poly(F2, "x^4")) == A.x()
    assert A.elem(1) == A.one()
    assert A.elem(A.x()) == A.x()
    assert str(A.elem([1, 1])) == "x+1"
    B = ring2("x^2+x")
    with pytest.raises(ContextMismatchError):
        A.elem(B.x())
    with pytest.raises(ContextMismatchError):
        A.elem(parse_poly(F3, "x"))


def test_arithmetic():
    A = ring2("x^3+1")
    x = A.x()
    one = A.one()
    assert (x + one) * A.elem([1, 1, 1]) == A.zero()  # (x+1)(x^2+x+1) = x^3+1
    assert x * x * x == one
    assert x**3 == one
    assert x**0 == one
    assert -x == x  # characteristic 2
    assert (x - one) == (x + one)
    B = ring3("x^2+1")
    y = B.x()
    assert y * y == B.elem(-1)
    assert y**4 == B.one()
    assert -y == B.elem([0, 2])


def test_units_and_inverses():
    A = ring2("x^3+1")
    x = A.x()
    assert x.is_unit()
    assert x.inverse() == A.elem([0, 0, 1])  # x * x^2 = x^3 = 1
    assert x**-1 == A.elem([0, 0, 1])
    assert x**-2 == A.elem([0, 1])  # x^-2 = x^4 = x
    nonunit = A.elem([1, 1])  # x+1 divides x^3+1, so not a unit
    assert not nonunit.is_unit()
    with pytest.raises(ZeroDivisionError):
        nonunit.inverse()
    with pytest.raises(ZeroDivisionError):
        A.zero().inverse()


def test_elements_enumeration():
    A = ring3("x^2+1")
    elems = list(A.elements())
    assert len(elems) == 9
    assert len({e.key for e in elems}) == 9
    assert elems[0] == A.zero()
    assert all((e * A.one()) == e for e in elems)


def test_cofactor():
    A = ring2("x^5+x^2")
    g = A.elem([0, 0, 1])  # x^2
    cof = A.cofactor(g)
    assert cof == A.elem([1, 0, 0, 1])  # x^3+1
    assert cof * g == A.zero()
    assert A.cofactor(A.zero()) == A.one()
    assert A.cofactor(A.one()) == A.elem(parse_poly(F2, "x^5+x^2"))
    assert A.cofactor(A.one()) == A.zero()  # f reduces to 0 in A
    with pytest.raises(NotADivisorError):
        A.cofactor(A.elem([1, 0, 1]))  # x^2+1 does not divide x^5+x^2


def test_subst():
    A = ring3("x^2+1")
    # evaluate t^2+2t+1 at t = x:  x^2+2x+1 = 2x  (since x^2 = -1)
    p = parse_poly(F3, "x^2+2x+1")
    assert A.subst(p, A.x()) == A.elem([0, 2])
    assert A.subst(p, A.one()) == A.elem(4)
    assert A.subst(Poly.zero(F3), A.x()) == A.zero()


def test_divide_in_ideal():
    A = ring2("x^5+x^2")
    g = A.elem([0, 0, 1])  # x^2, divides f
    a = A.elem([0, 0, 0, 1])  # x^3 = x * x^2
    w = divide_in_ideal(a, g)
    assert w is not None
    assert w * g == a
    assert divide_in_ideal(A.x(), g) is None  # x not a multiple of x^2
    assert divide_in_ideal(A.zero(), A.zero()) == A.zero()
    assert divide_in_ideal(A.one(), A.zero()) is None
    with pytest.raises(NotADivisorError):
        divide_in_ideal(a, A.elem([1, 0, 1]))  # x^2+1 does not divide f


def test_ring_identity():
    assert ring2("x^3+1") == ring2("x^3+1")
    assert ring2("x^3+1") != ring2("x^3+x")
    assert ring2("x^2+x") != ring3("x^2+x")
    assert hash(ring2("x^3+1")) == hash(ring2("x^3+1"))


def test_degree_and_keys():
    A = ring2("x^3+1")
    assert A.zero().is_zero
    assert A.elem([1, 1]).degree == 1
    assert A.x().key() == (0, 1)
    assert A.elem([0, 0, 0, 1]).key() == (1,)
