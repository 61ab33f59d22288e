"""Exhaustive k-error linear complexity: try every error pattern of weight
at most k_max.

Patterns are enumerated as descending chains of reversed positions
q = T-1-i, which visits each weight class in colexicographic order of q,
i.e. in increasing order of the coefficient string e_0 e_1 ... e_{T-1}.
Keeping the first strict improvement per weight therefore yields the
lexicographically least witness without any tie comparisons.

When X^T - 1 splits into the known irreducible factors (T = p^r, 2
primitive mod p^2), a pattern is scored from per-factor remainders: each
position contributes the fixed vector (X^i mod f_j)_j, and the gcd degree is
the total degree of the factors whose remainder vanishes.  Otherwise every
pattern gets a full gcd.
"""

from __future__ import annotations

from math import comb

from ..errors import ResourceLimitError
from ..gf2poly import Gf2Poly, rem_int
from .common import irreducible_factors, run_tasks, seq_prime_power
from .linear import lc_of_int
from .profile import ErrorWitness, KlcEntry, KlcProfile

DEFAULT_PATTERN_BUDGET = 10**8


def pattern_count(period: int, k_max: int) -> int:
    return sum(comb(period, j) for j in range(k_max + 1))


def _check_budget(period: int, k_max: int, budget: int) -> None:
    total = 0
    for k in range(k_max + 1):
        total += comb(period, k)
        if total > budget:
            raise ResourceLimitError(
                "pattern_budget",
                f"k={k} needs {total} patterns, over the budget of {budget}",
            )


def _search_factored(task):
    """Best (lc, chain) per weight for all chains starting at ``top``."""
    top, period, k_max, s0, vectors, fields = task
    best = [period + 1] * (k_max + 1)
    chains: list = [None] * (k_max + 1)
    chain = [top]

    def score(w):
        z = 0
        for mask, deg in fields:
            if not w & mask:
                z += deg
        return period - z

    def descend(v, hi, depth):
        nd = depth + 1
        bl = best[nd]
        for q in range(hi):
            w = v ^ vectors[q]
            z = 0
            for mask, deg in fields:
                if not w & mask:
                    z += deg
            lc = period - z
            if lc < bl:
                bl = best[nd] = lc
                chains[nd] = chain + [q]
            if nd < k_max and q:
                chain.append(q)
                descend(w, q, nd)
                chain.pop()

    v = s0 ^ vectors[top]
    best[1], chains[1] = score(v), [top]
    if k_max > 1 and top:
        descend(v, top, 1)
    return best, chains


def _search_gcd(task):
    top, period, k_max, s0 = task
    best = [period + 1] * (k_max + 1)
    chains: list = [None] * (k_max + 1)
    chain = [top]

    def descend(v, hi, depth):
        nd = depth + 1
        for q in range(hi):
            w = v ^ (1 << (period - 1 - q))
            lc = lc_of_int(w, period)
            if lc < best[nd]:
                best[nd] = lc
                chains[nd] = chain + [q]
            if nd < k_max and q:
                chain.append(q)
                descend(w, q, nd)
                chain.pop()

    v = s0 ^ (1 << (period - 1 - top))
    best[1], chains[1] = lc_of_int(v, period), [top]
    if k_max > 1 and top:
        descend(v, top, 1)
    return best, chains


def klc_brute(seq, k_max: int | None = None, budget: int = DEFAULT_PATTERN_BUDGET,
              workers: int = 1) -> KlcProfile:
    """Exact LC_k for 0 <= k <= k_max (default: the weight of ``seq``)."""
    period = seq.period
    s = seq.as_int()
    wt = s.bit_count()
    if k_max is None:
        k_max = wt
    k_max = min(k_max, period)
    _check_budget(period, k_max, budget)

    best = [period + 1] * (k_max + 1)
    keys = [0] * (k_max + 1)
    chains: list = [None] * (k_max + 1)
    best[0], chains[0] = lc_of_int(s, period), []

    if k_max >= 1:
        factors = irreducible_factors(period)
        # biggest subtrees first for load balance; the merge is order-free
        tops = list(range(period - 1, -1, -1))
        if factors is not None:
            fields, off = [], 0
            for f in factors:
                d = f.bit_length() - 1
                fields.append((((1 << d) - 1) << off, d, off, f))
                off += d

            def residues(x):
                v = 0
                for _, _, o, f in fields:
                    v |= rem_int(x, f) << o
                return v

            vectors = [residues(1 << (period - 1 - q)) for q in range(period)]
            flat = [(m, d) for m, d, _, _ in fields]
            tasks = [(t, period, k_max, residues(s), vectors, flat) for t in tops]
            results = run_tasks(_search_factored, tasks, workers)
        else:
            tasks = [(t, period, k_max, s) for t in tops]
            results = run_tasks(_search_gcd, tasks, workers)
        for task_best, task_chains in results:
            for w in range(1, k_max + 1):
                if task_chains[w] is None:
                    continue
                key = sum(1 << q for q in task_chains[w])
                if (task_best[w], key) < (best[w], keys[w]) or chains[w] is None:
                    best[w], keys[w], chains[w] = task_best[w], key, task_chains[w]

    pr = seq_prime_power(seq)
    prof = KlcProfile(pr[0] if pr else None, pr[1] if pr else None, seq.family, period)
    run_w = 0
    for k in range(k_max + 1):
        if chains[k] is not None and best[k] < best[run_w]:
            run_w = k
        prof.entries.append(KlcEntry(k, best[run_w], best[run_w], "brute"))
        e = sum(1 << (period - 1 - q) for q in chains[run_w])
        prof.witnesses[k] = ErrorWitness(Gf2Poly(e), run_w, best[run_w])
    return prof
