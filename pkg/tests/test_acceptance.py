"""Top-level acceptance checks, one test per headline behavior.

Each test pins one of the package's core claims end to end: the worked
canonical-form and dual examples, exhaustive oracle equivalence at small
scales, agreement of every self-duality closed form with the general
machinery, the expansion theorems in both directions, existence versus
enumeration, and the cubic multiplication bound of the dual construction.
All comparisons are exact; nothing here is statistical.
"""

import random

import pytest

from ringcodes.codes import (
    Code,
    CodeMatrix,
    CodeWord,
    enumerate_codes,
    is_cgm,
    is_divisor_basis,
)
from ringcodes.dual import (
    dual_code,
    dual_word_count,
    gen_mat_dual,
    reverse_cgm,
)
from ringcodes.expansion import (
    companion,
    f_dual,
    fdual_always_acode,
    is_acode,
    m_of_g,
    word_fvector,
    x_inverse,
    zeta_basis,
)
from ringcodes.fields import FieldCtx
from ringcodes.polynomials import Poly, divisors, monic_polys, parse_poly
from ringcodes.quotient import QuotRing
from ringcodes.selfdual import (
    build_selfdual_class3,
    char2_selfdual_family,
    class3_char2_conditions,
    class3_selfdual_conditions,
    class3_witness,
    classify_length2,
    enumerate_selfdual,
    is_isodual,
    is_self_dual,
    is_self_reciprocal_dual,
    selfdual_existence,
    selfdual_single_row,
)

from conftest import mkcode, mkring, p


def entries_match(mat, texts):
    """Entrywise comparison of a CodeMatrix against rows of strings."""
    if mat.nrows != len(texts):
        return False
    for i, row in enumerate(texts):
        for j, text in enumerate(row):
            if mat.entry(i, j) != mat.ring.elem(p(mat.ring, text)):
                return False
    return True


def all_rings(q, max_m):
    ctx = FieldCtx(q)
    for m in range(1, max_m + 1):
        for f in monic_polys(ctx, m):
            yield QuotRing(f)


def dual_matches_bruteforce(code):
    """dual_code vs. the word-scan oracle, via count plus membership.

    Every generator of the constructed dual must be orthogonal to every
    generator of the code (so the construction is contained in the true
    dual), and the scan count must equal the constructed cardinality (so
    it is all of it).
    """
    d = dual_code(code)
    for w in d.cgm.rows:
        for g in code.cgm.rows:
            if not w.dot(g).is_zero:
                return False
    return dual_word_count(code) == d.cardinality


def test_01_single_generator_canonical_form():
    ring = mkring(2, "x^3+x^2+x")
    code = mkcode(ring, [["x^2", "0", "x^2+1"]])
    assert entries_match(code.cgm, [["x", "0", "1"], ["0", "0", "x^2+x+1"]])
    assert code.dim_f == 3


def test_02_dual_construction_counterexample_regression():
    ring = mkring(2, "x^5+x^2")
    code = mkcode(ring, [["x", "x", "0"], ["0", "x^2", "1"], ["0", "0", "x^3+1"]])
    res = gen_mat_dual(code.cgm)
    assert entries_match(
        res.matrix,
        [["x^4+x", "0", "0"], ["x^3+1", "x^3+1", "0"], ["1", "1", "x^2"]],
    )
    u = CodeWord(ring, [p(ring, "1"), p(ring, "1"), p(ring, "x^2")])
    assert all(u.dot(g).is_zero for g in code.cgm.rows)
    # the superseded block-substitution recipe misses u entirely
    bogus = mkcode(ring, [["x^4+x", "0", "0"], ["x", "x", "x^3"]])
    assert not bogus.contains(u)


def test_03_reversed_dual_is_canonical():
    ring = mkring(2, "x^5+x^2")
    code = mkcode(ring, [["x", "x", "0"], ["0", "x^2", "1"], ["0", "0", "x^3+1"]])
    rev = reverse_cgm(gen_mat_dual(code.cgm))
    assert entries_match(
        rev,
        [["x^2", "1", "1"], ["0", "x^3+1", "x^3+1"], ["0", "0", "x^4+x"]],
    )
    diag = is_divisor_basis(rev, deep=True)
    assert diag.echelon
    assert diag.pivots_divide
    assert diag.cofactor_condition
    assert diag.dim_matches
    assert is_cgm(rev)


def test_04_dual_oracle_equivalence_exhaustive():
    # every code of length <= 2 over every modulus with q^(l*m) <= 2^12
    scales = [(2, 1, 12), (2, 2, 6), (3, 1, 7), (3, 2, 3)]
    checked = 0
    for q, l, max_m in scales:
        for ring in all_rings(q, max_m):
            for code in enumerate_codes(ring, l):
                d = dual_code(code)
                assert dual_matches_bruteforce(code)
                assert dual_code(d) == code
                assert code.dim_f + d.dim_f == l * ring.m
                checked += 1
    assert checked > 100000


def test_05_selfdual_closed_forms_agree():
    # all length-<=2 codes over every modulus with q^(2m) <= 2^14
    scales = [(2, 7), (3, 4)]
    mismatches = 0
    seen_witnesses = 0
    for q, max_m in scales:
        for ring in all_rings(q, max_m):
            for code in enumerate_codes(ring, 1):
                if code.cgm.nrows == 0:
                    continue
                if selfdual_single_row(code) != is_self_dual(code):
                    mismatches += 1
            for code in enumerate_codes(ring, 2):
                sd = is_self_dual(code)
                mat = code.cgm
                if mat.nrows == 0:
                    continue
                if mat.nrows == 1:
                    if selfdual_single_row(code) != sd:
                        mismatches += 1
                    continue
                cls = classify_length2(code)
                if class3_selfdual_conditions(ring, cls) != sd:
                    mismatches += 1
                if q == 2 and class3_char2_conditions(ring, cls) != sd:
                    mismatches += 1
                if sd:
                    g1, f_prime, g_prime, r = class3_witness(ring, cls)
                    assert g_prime * g_prime == r * f_prime - Poly.one(ring.ctx)
                    assert ring.f == g1 * g1 * f_prime
                    ring2, rebuilt = build_selfdual_class3(
                        ring.ctx, g1, f_prime, g_prime
                    )
                    assert ring2 == ring
                    assert rebuilt == code
                    seen_witnesses += 1
    assert mismatches == 0
    assert seen_witnesses > 50


def test_06_parametric_family_is_selfdual_by_scan():
    rng = random.Random(1728)
    built = 0
    for q in (2, 3):
        ctx = FieldCtx(q)
        while built < (10 if q == 2 else 20):
            dg1 = rng.choice([1, 2])
            dgp = rng.choice([1, 2]) if dg1 == 1 else 1
            g1 = Poly(
                ctx, [rng.randrange(q) for _ in range(dg1)] + [1]
            )
            g_prime = Poly(
                ctx, [rng.randrange(q) for _ in range(dgp)] + [1]
            )
            f_prime = g_prime * g_prime + Poly.one(ctx)
            ring, code = build_selfdual_class3(ctx, g1, f_prime, g_prime)
            assert dual_matches_bruteforce(code)
            assert is_self_dual(code)
            built += 1
    # the degree-4 modulus factor with g' = x^3 gives x^6+1 = (x^2+1)*f'
    for q in (2, 3):
        ctx = FieldCtx(q)
        f_prime = parse_poly(ctx, "x^4+x^2+1" if q == 2 else "x^4+2x^2+1")
        g_prime = parse_poly(ctx, "x^3")
        ring, code = build_selfdual_class3(
            ctx, parse_poly(ctx, "x"), f_prime, g_prime
        )
        assert ring.f == parse_poly(
            ctx, "x^6+x^4+x^2" if q == 2 else "x^6+2x^4+x^2"
        )
        assert dual_matches_bruteforce(code)
    # characteristic-2 solutions g' = h*s+1 with s the half-power root
    ctx = FieldCtx(2)
    f_prime = parse_poly(ctx, "x^3+x^2")
    for g_prime in char2_selfdual_family(ctx, f_prime):
        ring, code = build_selfdual_class3(
            ctx, parse_poly(ctx, "x+1"), f_prime, g_prime
        )
        assert dual_matches_bruteforce(code)


def test_07_isodual_examples_and_single_row_law():
    for q in (2, 3):
        ring = mkring(q, "x^2")
        code = mkcode(ring, [["0", "x", "0"], ["0", "0", "1"]])
        assert is_self_reciprocal_dual(code)
        perm = is_isodual(code)
        assert perm is not None
        assert code.permuted(perm) == dual_code(code)
    # one-generator codes: isodual exactly when l <= 2 and SD or SRD
    law_checked = 0
    for q, max_m in ((2, 3), (3, 2)):
        for ring in all_rings(q, max_m):
            for l in (1, 2, 3):
                words = None
                for code in enumerate_codes(ring, l):
                    if code.cgm.nrows != 1:
                        continue
                    expected = l <= 2 and (
                        is_self_dual(code) or is_self_reciprocal_dual(code)
                    )
                    assert (is_isodual(code) is not None) == expected
                    law_checked += 1
                del words
    assert law_checked > 2000


def test_08_expansion_theorems_desk_scale():
    # (a) companion transpose realizable by a ring element iff the modulus
    #     is x^m -+ 1, or quadratic with constant term -1
    for q in (2, 3):
        ctx = FieldCtx(q)
        for m in (2, 3, 4):
            xm = Poly.monomial(ctx, m)
            for f in monic_polys(ctx, m):
                ring = QuotRing(f)
                mxt = companion(ring).transpose()
                exists = any(
                    m_of_g(ring, g) == mxt for g in ring.elements()
                )
                c0 = ctx.coerce_raw(f.constant_raw())
                closed = (
                    f == xm + Poly.one(ctx)
                    or f == xm - Poly.one(ctx)
                    or (m == 2 and c0 == ctx.neg_raw(ctx.one_raw))
                )
                assert exists == closed
                if closed:
                    # the witness is always -f0 * x^(m-1)
                    wit = Poly.monomial(
                        ring.ctx, m - 1, ctx.neg_raw(c0)
                    )
                    assert m_of_g(ring, wit) == mxt
                if f == xm + Poly.one(ctx) or f == xm - Poly.one(ctx):
                    assert m_of_g(ring, x_inverse(ring)) == mxt

    # (b) the coefficient dual of every code is again an expansion
    #     exactly over the moduli the closed predicate names
    for q, max_m in ((2, 6), (3, 3)):
        for ring in all_rings(q, max_m):
            always = fdual_always_acode(ring)
            violation = None
            for l in (1, 2):
                for code in enumerate_codes(ring, l):
                    if not is_acode(f_dual(code), ring):
                        violation = code
                        break
                if violation is not None or not always:
                    if violation is not None:
                        break
            assert always == (violation is None)

    # (c) a word in the coefficient dual but not in the ring dual
    ring = mkring(2, "x^3+1")
    code = mkcode(ring, [["1", "x+1"]])
    w = CodeWord(ring, [p(ring, "x^2+1"), p(ring, "1")])
    assert not dual_code(code).contains(w)
    assert f_dual(code).contains(word_fvector(w))

    # (d) the substituted basis of the transposed expansion, entrywise,
    #     and it generates the same code
    ring = mkring(3, "x^3+2")
    code = mkcode(ring, [["x^2+x+1", "2"], ["0", "x+2"]])
    sub = zeta_basis(code.cgm)
    assert entries_match(sub, [["x^2+x+1", "2x^2"], ["0", "x+2"]])
    back = Code(ring, 2, sub.rows)
    assert back == code
    assert back.cgm == code.cgm


def test_09_existence_matches_enumeration():
    # the arithmetic report against exhaustive search, every modulus with
    # q^(2m) <= 2^14
    negative_seen = False
    for q, max_m in ((2, 7), (3, 4)):
        for ring in all_rings(q, max_m):
            rep = selfdual_existence(ring)
            ones = enumerate_selfdual(ring, 1)
            twos = enumerate_selfdual(ring, 2)
            assert rep.multiples_of_4 is True
            assert rep.all_lengths == (len(ones) > 0)
            assert rep.all_even_lengths == (len(twos) > 0)
            if q == 3 and ring.f == parse_poly(ring.ctx, "x"):
                negative_seen = True
                assert twos == []
                assert not rep.all_even_lengths
    assert negative_seen


def test_10_dual_construction_cost_is_cubic():
    ring = mkring(2, "x^6+x^4")
    ctx = ring.ctx
    divs = [d for d in divisors(ring.f) if 1 <= d.degree <= 3]
    rng = random.Random(20260816)

    def dense_divisor_basis(l):
        # row i is g_i * (e_i + random tail): the cofactor of g_i kills
        # the whole row, so this is a basis of divisors by construction
        rows = []
        for i in range(l):
            g = rng.choice(divs)
            entries = [ring.zero()] * l
            entries[i] = ring.elem(g)
            for j in range(i + 1, l):
                tail = Poly(ctx, [rng.randrange(2) for _ in range(ring.m)])
                entries[j] = ring.elem(g * tail)
            rows.append(CodeWord(ring, entries))
        return CodeMatrix(ring, rows, l)

    counts = {}
    for l in range(2, 13):
        best = 0
        for _ in range(3):
            mat = dense_divisor_basis(l)
            assert bool(is_divisor_basis(mat, deep=True))
            best = max(best, gen_mat_dual(mat).mult_count)
        counts[l] = best
    assert all(v > 0 for v in counts.values())
    c = max(counts[l] / l**3 for l in (2, 3, 4))
    for l in range(5, 13):
        assert counts[l] <= c * l**3, (l, counts[l], c)
