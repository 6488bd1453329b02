import os

import pytest

from ringcodes import Code, FieldCtx, QuotRing, parse_poly

DATA = os.path.join(os.path.dirname(__file__), "data")


def mkring(q, f_text):
    ctx = FieldCtx(q)
    return QuotRing(parse_poly(ctx, f_text))


def mkcode(ring, rows):
    """Code from rows of polynomial strings."""
    parsed = [[parse_poly(ring.ctx, t) for t in row] for row in rows]
    return Code(ring, len(parsed[0]), parsed)


def p(ring, text):
    return parse_poly(ring.ctx, text)


@pytest.fixture
def counter_code():
    """The length-3 code over F_2[x]/<x^5+x^2> with known dual."""
    ring = mkring(2, "x^5+x^2")
    return mkcode(
        ring, [["x", "x", "0"], ["0", "x^2", "1"], ["0", "0", "x^3+1"]]
    )


def data_path(name):
    return os.path.join(DATA, name)
