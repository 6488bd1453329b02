# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled coefficient kernels for dense polynomials over GF(p).

Same contract as ``ringcodes._kernels_py``: coefficient lists of ints in
[0, p), ascending by exponent, no trailing zeros, zero polynomial == [].
"""

from libc.stdlib cimport free, malloc
from libc.string cimport memset

BACKEND = "cython"

DEF MAXC = 4096  # coefficient cap for stack buffers


cdef long long _inv_mod(long long a, long long p):
    cdef long long t = 0, newt = 1, r = p, newr = a, q, tmp
    while newr != 0:
        q = r / newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if t < 0:
        t += p
    return t


cdef int _load(list a, long long *buf) except -1:
    cdef Py_ssize_t n = len(a), i
    if n > MAXC:
        raise OverflowError("polynomial exceeds kernel coefficient cap")
    for i in range(n):
        buf[i] = a[i]
    return n


cdef list _dump(long long *buf, int n):
    while n > 0 and buf[n - 1] == 0:
        n -= 1
    cdef list out = [0] * n
    cdef int i
    for i in range(n):
        out[i] = buf[i]
    return out


def poly_trim(list c):
    # wraparound is off module-wide, so avoid c[-1] on the Python list
    cdef Py_ssize_t n = len(c)
    while n > 0 and c[n - 1] == 0:
        c.pop()
        n -= 1
    return c


def poly_add(list a, list b, long long p):
    cdef long long ba[MAXC]
    cdef long long bb[MAXC]
    cdef int na = _load(a, ba), nb = _load(b, bb), n, i
    n = na if na > nb else nb
    for i in range(na, n):
        ba[i] = 0
    for i in range(nb):
        ba[i] = (ba[i] + bb[i]) % p
    return _dump(ba, n)


def poly_sub(list a, list b, long long p):
    cdef long long ba[MAXC]
    cdef long long bb[MAXC]
    cdef int na = _load(a, ba), nb = _load(b, bb), n, i
    n = na if na > nb else nb
    for i in range(na, n):
        ba[i] = 0
    for i in range(nb):
        ba[i] = (ba[i] - bb[i] + p) % p
    return _dump(ba, n)


def poly_neg(list a, long long p):
    cdef long long ba[MAXC]
    cdef int na = _load(a, ba), i
    for i in range(na):
        ba[i] = (p - ba[i]) % p
    return _dump(ba, na)


def poly_scale(list a, long long s, long long p):
    cdef long long ba[MAXC]
    cdef int na = _load(a, ba), i
    s %= p
    if s < 0:
        s += p
    if s == 0:
        return []
    for i in range(na):
        ba[i] = (ba[i] * s) % p
    return _dump(ba, na)


cdef int _mul_raw(long long *a, int na, long long *b, int nb, long long *out,
                  long long p) except -1:
    cdef int i, j, n
    if na == 0 or nb == 0:
        return 0
    n = na + nb - 1
    if n > MAXC:
        raise OverflowError("polynomial exceeds kernel coefficient cap")
    memset(out, 0, n * sizeof(long long))
    for i in range(na):
        if a[i] == 0:
            continue
        for j in range(nb):
            out[i + j] = (out[i + j] + a[i] * b[j]) % p
    while n > 0 and out[n - 1] == 0:
        n -= 1
    return n


cdef int _divmod_raw(long long *r, int nr, long long *b, int nb, long long *q,
                     long long p) except -1:
    # Reduces r in place to the remainder, fills q, returns len(q).
    cdef int db = nb - 1, i, j, nq
    cdef long long inv, factor
    if nr - 1 < db:
        return 0
    inv = _inv_mod(b[nb - 1], p)
    nq = nr - db
    memset(q, 0, nq * sizeof(long long))
    for i in range(nr - 1, db - 1, -1):
        if r[i] == 0:
            continue
        factor = (r[i] * inv) % p
        q[i - db] = factor
        for j in range(db + 1):
            r[i - db + j] = (r[i - db + j] - factor * b[j] % p + p) % p
    return nq


def poly_mul(list a, list b, long long p):
    cdef long long ba[MAXC]
    cdef long long bb[MAXC]
    cdef long long out[MAXC]
    cdef int na = _load(a, ba), nb = _load(b, bb)
    cdef int n = _mul_raw(ba, na, bb, nb, out, p)
    return _dump(out, n)


def poly_divmod(list a, list b, long long p):
    cdef long long br[MAXC]
    cdef long long bb[MAXC]
    cdef long long bq[MAXC]
    cdef int nr = _load(a, br), nb = _load(b, bb), nq
    if nb == 0:
        raise ZeroDivisionError("polynomial division by zero")
    nq = _divmod_raw(br, nr, bb, nb, bq, p)
    return _dump(bq, nq), _dump(br, nr if nr < nb else nb - 1)


def poly_mod(list a, list b, long long p):
    cdef long long br[MAXC]
    cdef long long bb[MAXC]
    cdef long long bq[MAXC]
    cdef int nr = _load(a, br), nb = _load(b, bb)
    if nb == 0:
        raise ZeroDivisionError("polynomial division by zero")
    _divmod_raw(br, nr, bb, nb, bq, p)
    return _dump(br, nr if nr < nb else nb - 1)


def poly_mulmod(list a, list b, list f, long long p):
    cdef long long ba[MAXC]
    cdef long long bb[MAXC]
    cdef long long bf[MAXC]
    cdef long long out[MAXC]
    cdef long long bq[MAXC]
    cdef int na = _load(a, ba), nb = _load(b, bb), nf = _load(f, bf), n
    if nf == 0:
        raise ZeroDivisionError("polynomial division by zero")
    n = _mul_raw(ba, na, bb, nb, out, p)
    _divmod_raw(out, n, bf, nf, bq, p)
    return _dump(out, n if n < nf else nf - 1)


def poly_gcd(list a, list b, long long p):
    cdef long long ba[MAXC]
    cdef long long bb[MAXC]
    cdef long long bq[MAXC]
    cdef long long *x = ba
    cdef long long *y = bb
    cdef long long *t
    cdef int nx = _load(a, ba), ny = _load(b, bb), i
    cdef long long inv
    while ny > 0:
        _divmod_raw(x, nx, y, ny, bq, p)
        nx = nx if nx < ny else ny - 1
        while nx > 0 and x[nx - 1] == 0:
            nx -= 1
        t = x
        x = y
        y = t
        i = nx
        nx = ny
        ny = i
    if nx > 0:
        inv = _inv_mod(x[nx - 1], p)
        for i in range(nx):
            x[i] = (x[i] * inv) % p
    return _dump(x, nx)


def count_orthogonal(list rows, int l, list f, long long p):
    """Number of words of A^l orthogonal to every row, A = GF(p)[x]/<f>."""
    return _orth_scan(rows, l, f, p, False)


def orthogonal_words(list rows, int l, list f, long long p):
    """All orthogonal words as flat tuples of l*(deg f) base-p digits."""
    return _orth_scan(rows, l, f, p, True)


cdef _orth_scan(list rows, int l, list f, long long p, bint collect):
    cdef int m = len(f) - 1
    cdef int k = len(rows)
    cdef int lm = l * m
    cdef long long total = 1
    cdef int i, j, r, c, d
    cdef long long bf[MAXC]
    cdef long long shift[MAXC]
    cdef long long prod[MAXC]
    cdef long long bq[MAXC]
    cdef int nf = _load(f, bf), ng, np_
    for i in range(lm):
        total *= p
    # tables[(d*k + r)*m + c]: coeff c of x^(d%m) * rows[r][d//m] mod f
    cdef long long *tables = <long long *> malloc(
        (lm * k * m + 1) * sizeof(long long))
    cdef long long *dots = <long long *> malloc((k * m + 1) * sizeof(long long))
    cdef long long *digits = <long long *> malloc((lm + 1) * sizeof(long long))
    if tables == NULL or dots == NULL or digits == NULL:
        free(tables)
        free(dots)
        free(digits)
        raise MemoryError()
    cdef list row, hits
    cdef long long count = 0, step = 0
    cdef bint ok
    try:
        for d in range(lm):
            j = d // m
            i = d % m
            for r in range(k):
                row = rows[r]
                ng = _load(row[j], shift)
                if ng > 0:
                    # multiply by x^i: shift up, then reduce mod f
                    for c in range(ng - 1, -1, -1):
                        shift[c + i] = shift[c]
                    for c in range(i):
                        shift[c] = 0
                    np_ = ng + i
                    _divmod_raw(shift, np_, bf, nf, bq, p)
                    if np_ > m:
                        np_ = m
                else:
                    np_ = 0
                for c in range(m):
                    tables[(d * k + r) * m + c] = shift[c] if c < np_ else 0
        memset(dots, 0, k * m * sizeof(long long))
        memset(digits, 0, lm * sizeof(long long))
        hits = [] if collect else None
        while True:
            ok = True
            for c in range(k * m):
                if dots[c] != 0:
                    ok = False
                    break
            if ok:
                if collect:
                    hits.append(tuple([digits[c] for c in range(lm)]))
                else:
                    count += 1
            step += 1
            if step == total:
                break
            d = 0
            while digits[d] == p - 1:
                digits[d] = 0
                for r in range(k):
                    for c in range(m):
                        dots[r * m + c] = (dots[r * m + c]
                                           + tables[(d * k + r) * m + c]) % p
                d += 1
            digits[d] += 1
            for r in range(k):
                for c in range(m):
                    dots[r * m + c] = (dots[r * m + c]
                                       + tables[(d * k + r) * m + c]) % p
        return hits if collect else count
    finally:
        free(tables)
        free(dots)
        free(digits)
