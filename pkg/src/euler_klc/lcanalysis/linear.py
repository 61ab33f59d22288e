"""Linear complexity over GF(2): the gcd formula and Berlekamp-Massey."""

from __future__ import annotations

from ..gf2poly import Gf2Poly, gcd_int


def lc_of_int(h: int, period: int) -> int:
    """T - deg gcd(X^T - 1, H) for a generating polynomial given as a bitmask."""
    if h == 0:
        return 0
    g = gcd_int((1 << period) | 1, h)
    return period - (g.bit_length() - 1)


def lc_gcd(seq) -> int:
    return lc_of_int(seq.as_int(), seq.period)


def _synthesize(terms: list[int]) -> tuple[int, int]:
    """Berlekamp-Massey over GF(2).  Returns (L, C) with C the connection
    polynomial 1 + c_1 x + ... + c_L x^L as a bitmask."""
    c, b = 1, 1
    L, shift = 0, 1
    window = 0  # bit i holds terms[n - i]
    for n, s in enumerate(terms):
        window = (window << 1) | s
        if (c & window).bit_count() & 1:
            t = c
            c ^= b << shift
            if 2 * L <= n:
                L, b, shift = n + 1 - L, t, 1
            else:
                shift += 1
        else:
            shift += 1
    return L, c


def berlekamp_massey(seq) -> tuple[int, Gf2Poly]:
    """Linear complexity and minimal polynomial of the periodic extension.

    Synthesis runs over two periods, which pins down any LC <= T.  The
    returned polynomial is the reciprocal X^L C(1/X) of the connection
    polynomial, i.e. the characteristic polynomial of the shortest recurrence.
    """
    terms = list(seq.bits) * 2
    L, c = _synthesize(terms)
    recip = 0
    for i in range(L + 1):
        if (c >> i) & 1:
            recip |= 1 << (L - i)
    return L, Gf2Poly(recip)
