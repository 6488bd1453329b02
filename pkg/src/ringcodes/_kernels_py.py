"""Pure-Python coefficient kernels for dense polynomials over GF(p).

Polynomials are lists of ints in [0, p), ascending by exponent, with no
trailing zeros; the zero polynomial is the empty list.  These functions are
the portable twin of the compiled module ``ringcodes._kernels_cy`` and must
stay behaviourally identical to it.
"""

BACKEND = "python"


def poly_trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def poly_add(a, b, p):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, v in enumerate(b):
        out[i] = (out[i] + v) % p
    return poly_trim(out)


def poly_sub(a, b, p):
    out = list(a) + [0] * (len(b) - len(a))
    for i, v in enumerate(b):
        out[i] = (out[i] - v) % p
    return poly_trim(out)


def poly_neg(a, p):
    return [(-v) % p for v in a]


def poly_scale(a, s, p):
    s %= p
    if s == 0:
        return []
    return poly_trim([(v * s) % p for v in a])


def poly_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, av in enumerate(a):
        if av == 0:
            continue
        for j, bv in enumerate(b):
            out[i + j] = (out[i + j] + av * bv) % p
    return poly_trim(out)


def poly_divmod(a, b, p):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    db = len(b) - 1
    if len(r) - 1 < db:
        return [], poly_trim(r)
    inv = pow(b[-1], p - 2, p)
    q = [0] * (len(r) - db)
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i]
        if c == 0:
            continue
        factor = (c * inv) % p
        q[i - db] = factor
        for j in range(db + 1):
            r[i - db + j] = (r[i - db + j] - factor * b[j]) % p
    return poly_trim(q), poly_trim(r)


def poly_mod(a, b, p):
    return poly_divmod(a, b, p)[1]


def poly_mulmod(a, b, f, p):
    return poly_mod(poly_mul(a, b, p), f, p)


def poly_gcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        a, b = b, poly_mod(a, b, p)
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [(v * inv) % p for v in a]
    return a


def _orth_tables(rows, l, f, p):
    # P[d][r]: coefficient vector (padded to length m) of x^(d%m) * rows[r][d//m] mod f
    m = len(f) - 1
    k = len(rows)
    tables = []
    for d in range(l * m):
        j, i = divmod(d, m)
        col = []
        for r in range(k):
            g = rows[r][j]
            v = poly_mulmod([0] * i + [1], list(g), f, p) if g else []
            col.append(v + [0] * (m - len(v)))
        tables.append(col)
    return tables


def _orth_scan(rows, l, f, p, collect):
    m = len(f) - 1
    k = len(rows)
    lm = l * m
    total = p**lm
    tables = _orth_tables(rows, l, f, p)
    dots = [[0] * m for _ in range(k)]
    digits = [0] * lm
    hits = [] if collect else 0
    step = 0
    while True:
        ok = True
        for dv in dots:
            for c in dv:
                if c:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            if collect:
                hits.append(tuple(digits))
            else:
                hits += 1
        step += 1
        if step == total:
            break
        d = 0
        while digits[d] == p - 1:
            digits[d] = 0
            col = tables[d]
            for r in range(k):
                dr = dots[r]
                pv = col[r]
                for c in range(m):
                    dr[c] = (dr[c] + pv[c]) % p
            d += 1
        digits[d] += 1
        col = tables[d]
        for r in range(k):
            dr = dots[r]
            pv = col[r]
            for c in range(m):
                dr[c] = (dr[c] + pv[c]) % p
    return hits


def count_orthogonal(rows, l, f, p):
    """Number of words of A^l orthogonal to every row, A = GF(p)[x]/<f>.

    ``rows`` is a list of rows, each a list of ``l`` coefficient lists.
    Scans all p**(l*(deg f)) words.
    """
    return _orth_scan(rows, l, f, p, collect=False)


def orthogonal_words(rows, l, f, p):
    """All orthogonal words, as flat tuples of l*(deg f) base-p digits.

    Digit d of a word is the coefficient of x^(d % m) in coordinate d // m.
    Enumeration order is the odometer order with digit 0 fastest.
    """
    return _orth_scan(rows, l, f, p, collect=True)
