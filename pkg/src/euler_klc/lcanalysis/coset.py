"""Coset search: the cheapest error e with d | S + e.

Writing S + e = d * pi with deg pi < m = T - deg d, the minimum of
wt(S + d * pi) over all 2^m choices of pi is the least number of term
changes that make d divide the corrected generating polynomial.  Running it
for every product d of the irreducible factors of X^T - 1 gives the full
k-error profile.

The enumeration splits pi into low and high bit blocks.  All 2^b low-block
products d * pi_low are tabulated once as rows of uint64 words; each high
block then costs one vectorized XOR + popcount over the table.
"""

from __future__ import annotations

from itertools import combinations

import numpy as np

from ..cyclotomy import build_partition, class_polynomial
from ..errors import ParameterError, ResourceLimitError, UnsupportedError
from ..gf2poly import Gf2Poly, cyclotomic_factor, mul_int, prime_power_factors, rem_int
from ..numtheory import check_params
from .common import lex_key, run_tasks, seq_prime_power
from .linear import lc_of_int
from .profile import ErrorWitness, KlcEntry, KlcProfile

DEFAULT_DIM_LIMIT = 26
LOW_BITS = 14
_W64 = (1 << 64) - 1


def _words(x: int, n: int) -> list[int]:
    return [(x >> (64 * i)) & _W64 for i in range(n)]


def _low_table(d: int, b: int, nwords: int) -> tuple[np.ndarray, list[int]]:
    ints = [0]
    for i in range(b):
        sh = d << i
        ints += [t ^ sh for t in ints]
    arr = np.array([_words(t, nwords) for t in ints], dtype=np.uint64).reshape(len(ints), nwords)
    return arr, ints


def _scan(task):
    """Minimum weight over pi = (h << b) | low for h in [h0, h1)."""
    s, d, b, h0, h1, period = task
    nwords = (period + 63) // 64
    table, ints = _low_table(d, b, nwords)
    best_w, best_e, best_key = period + 1, None, None
    for h in range(h0, h1):
        state = s ^ mul_int(d, h << b)
        row = np.array(_words(state, nwords), dtype=np.uint64)
        wts = np.bitwise_count(table ^ row).sum(axis=1, dtype=np.int64)
        w = int(wts.min())
        if w > best_w:
            continue
        for idx in np.flatnonzero(wts == w):
            e = state ^ ints[idx]
            key = lex_key(e, period)
            if w < best_w or key < best_key:
                best_w, best_e, best_key = w, e, key
    return best_w, best_e


def min_weight_coset(s: Gf2Poly, divisor: Gf2Poly, period: int,
                     dim_limit: int = DEFAULT_DIM_LIMIT, workers: int = 1
                     ) -> tuple[int, ErrorWitness]:
    """Exact min over deg pi < T - deg(divisor) of wt(S + divisor * pi).

    The witness is the minimizing e = S + divisor * pi, ties going to the
    lexicographically least coefficient string e_0 e_1 ...
    """
    d = divisor.value
    if d == 0:
        raise ZeroDivisionError("zero divisor")
    xt = (1 << period) | 1
    if rem_int(xt, d):
        raise ParameterError("divisor must divide X^T - 1")
    if s.value.bit_length() > period:
        raise ParameterError("S has degree >= T")
    m = period - (d.bit_length() - 1)
    if m > dim_limit:
        raise ResourceLimitError("coset_dim_limit", f"free dimension {m} exceeds {dim_limit}")
    b = min(m, LOW_BITS)
    n_high = 1 << (m - b)
    parts = max(1, min(workers, n_high))
    bounds = [n_high * i // parts for i in range(parts + 1)]
    tasks = [(s.value, d, b, bounds[i], bounds[i + 1], period) for i in range(parts)]
    best_w, best_e = period + 1, None
    for w, e in run_tasks(_scan, tasks, workers):
        if e is None:
            continue
        if (w, lex_key(e, period)) < (best_w, lex_key(best_e, period) if best_e is not None else 0) \
                or best_e is None:
            best_w, best_e = w, e
    achieved = lc_of_int(s.value ^ best_e, period)
    return best_w, ErrorWitness(Gf2Poly(best_e), best_w, achieved)


def _subset_products(factors: list[int]):
    n = len(factors)
    for size in range(n + 1):
        for combo in combinations(range(n), size):
            d = 1
            for i in combo:
                d = mul_int(d, factors[i])
            yield frozenset(combo), d


def klc_structured(seq, dim_limit: int = DEFAULT_DIM_LIMIT, workers: int = 1,
                   k_max: int | None = None) -> KlcProfile:
    """Profile from coset searches over every product of the irreducible
    factors of X^(p^r) - 1.

    Factor sets whose free dimension exceeds ``dim_limit`` are skipped unless
    d already divides S (cost 0).  Where a skipped set could still beat the
    computed minimum, the entry becomes an interval.  A skipped set's cost is
    bounded below by the costs of its computed subsets.  ``skipped`` on the
    returned profile lists the skipped factor sets.
    """
    from .common import irreducible_factors

    pr = seq_prime_power(seq)
    factors = irreducible_factors(seq.period)
    if pr is None or factors is None:
        raise UnsupportedError("coset search needs period p^r with 2 primitive mod p^2")
    period = seq.period
    s = Gf2Poly(seq.as_int())
    wt = s.weight
    if k_max is None:
        k_max = wt

    degs = [f.bit_length() - 1 for f in factors]
    cost: dict[frozenset, int] = {}
    witness: dict[frozenset, ErrorWitness] = {}
    skipped: list[frozenset] = []
    for subset, d in _subset_products(factors):
        if rem_int(s.value, d) == 0:
            cost[subset] = 0
            witness[subset] = ErrorWitness(Gf2Poly(0), 0, lc_of_int(s.value, period))
            continue
        if period - (d.bit_length() - 1) > dim_limit:
            skipped.append(subset)
            continue
        w, wit = min_weight_coset(s, Gf2Poly(d), period, dim_limit, workers)
        cost[subset], witness[subset] = w, wit

    def lc_of(subset):
        return period - sum(degs[i] for i in subset)

    # lower bound on a skipped set's cost from its computed subsets
    floor = {
        sk: max((c for sub, c in cost.items() if sub <= sk), default=0) for sk in skipped
    }
    prof = KlcProfile(pr[0], pr[1], seq.family, period)
    prof.skipped = [tuple(sorted(sk)) for sk in skipped]
    for k in range(k_max + 1):
        reach = [sub for sub, c in cost.items() if c <= k]
        best_sub = min(reach, key=lambda sub: (lc_of(sub), cost[sub]))
        hi = lc_of(best_sub)
        open_ = [lc_of(sk) for sk in skipped if floor[sk] <= k and lc_of(sk) < hi]
        if open_:
            prof.entries.append(KlcEntry(k, min(open_), hi, "bound"))
        else:
            prof.entries.append(KlcEntry(k, hi, hi, "coset"))
            prof.witnesses[k] = witness[best_sub]
    return prof


def optimal_error_poly(p: int, r: int) -> int:
    """The weight p^(r-2)(p-1)^2/2 error that makes Phi^(p^r) divide S + e:
    classes i p^(r-2) + j for i in the upper half with j in the lower half,
    plus i in the lower half (i <= (p-3)/2) with j in the upper half."""
    part = build_partition(p, r)
    q = p ** (r - 2)
    e = 0
    for i in range((p + 1) // 2, p):
        for j in range(0, (q - 1) // 2 + 1):
            e ^= class_polynomial(part, i * q + j)
    for i in range(0, (p - 3) // 2 + 1):
        for j in range((q + 1) // 2, q):
            e ^= class_polynomial(part, i * q + j)
    return e


def construct_optimal_error(p: int, r: int) -> ErrorWitness:
    check_params(p, r)
    if r < 3:
        raise ParameterError("the optimal error construction needs r >= 3")
    from ..seqgen import gen_euler_classes

    e = optimal_error_poly(p, r)
    s = gen_euler_classes(p, r).as_int()
    return ErrorWitness(Gf2Poly(e), e.bit_count(), lc_of_int(s ^ e, p**r))


__all__ = [
    "min_weight_coset",
    "klc_structured",
    "construct_optimal_error",
    "optimal_error_poly",
    "cyclotomic_factor",
    "prime_power_factors",
]
