"""Shared helpers for the search routines."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor

from ..numtheory import MAX_PRIME, factorize, is_two_primitive_mod_p2
from ..gf2poly import prime_power_factors


def default_workers() -> int:
    return os.cpu_count() or 1


def prime_power_of(n: int) -> tuple[int, int] | None:
    """(p, r) with n = p^r for an odd prime p, else None."""
    if n < 3:
        return None
    f = factorize(n)
    if len(f) != 1:
        return None
    (p, r), = f.items()
    if p == 2 or p > MAX_PRIME:
        return None
    return p, r


def seq_prime_power(seq) -> tuple[int, int] | None:
    """Prime-power structure of the sequence period, if any."""
    pr = prime_power_of(seq.period)
    params = seq.param_dict
    if pr is None:
        return None
    if "p" in params and (params["p"], params.get("r")) != pr:
        return None
    return pr


def irreducible_factors(period: int) -> list[int] | None:
    """Bitmasks of the irreducible factors of X^T - 1 when T = p^r and 2 is
    primitive mod p^2; None otherwise."""
    pr = prime_power_of(period)
    if pr is None or not is_two_primitive_mod_p2(pr[0]):
        return None
    return [f.value for f in prime_power_factors(*pr)]


def lex_key(e: int, period: int) -> int:
    """Sort key for the coefficient string e_0 e_1 ... e_{T-1}: the integer
    with e_0 as its most significant bit."""
    return int(format(e, f"0{period}b")[::-1], 2) if e else 0


def run_tasks(fn, tasks: list, workers: int) -> list:
    """Map ``fn`` over ``tasks``, in a process pool when workers > 1.
    Results come back in task order."""
    if workers <= 1 or len(tasks) <= 1:
        return [fn(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=min(workers, len(tasks))) as pool:
        return list(pool.map(fn, tasks))
