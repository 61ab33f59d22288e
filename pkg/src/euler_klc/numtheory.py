"""Modular arithmetic for odd prime powers: totients, Euler quotients,
multiplicative orders and generator selection.

Everything here is desk-scale: primality and factoring use trial division,
and primes above ``MAX_PRIME`` are refused.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ParameterError, RangeError

MAX_PRIME = 10_000
# Results are guaranteed for p^(2r) below 2^128.
MAX_MODULUS = 1 << 128


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of ``n >= 1`` by trial division."""
    if n < 1:
        raise ParameterError(f"cannot factor {n}")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def check_params(p: int, r: int, min_r: int = 1) -> None:
    """Raise unless p is a supported odd prime and ``r >= min_r``."""
    if not isinstance(p, int) or not isinstance(r, int):
        raise ParameterError("p and r must be integers")
    if p > MAX_PRIME:
        raise RangeError(f"p={p} exceeds the trial-division limit {MAX_PRIME}")
    if p < 3 or not is_prime(p):
        raise ParameterError(f"p={p} is not an odd prime")
    if r < min_r:
        raise ParameterError(f"r={r} must be at least {min_r}")
    if p ** (2 * r) >= MAX_MODULUS:
        raise RangeError(f"p^(2r) = {p}^{2 * r} exceeds the 128-bit range")


@dataclass(frozen=True)
class PrimePowerParams:
    p: int
    r: int
    two_primitive_mod_p2: bool = field(init=False)
    p_mod4: int = field(init=False)

    def __post_init__(self):
        check_params(self.p, self.r)
        object.__setattr__(self, "two_primitive_mod_p2", is_two_primitive_mod_p2(self.p))
        object.__setattr__(self, "p_mod4", self.p % 4)

    @property
    def modulus(self) -> int:
        return self.p**self.r


def phi_prime_power(p: int, r: int) -> int:
    check_params(p, r)
    return p ** (r - 1) * (p - 1)


def mod_pow(base: int, exp: int, modulus: int) -> int:
    """``base**exp % modulus`` by square-and-multiply (the builtin three-arg pow)."""
    if modulus < 2:
        raise ParameterError(f"modulus must be >= 2, got {modulus}")
    if exp < 0:
        raise ParameterError("exponent must be nonnegative")
    return pow(base, exp, modulus)


def euler_quotient(p: int, r: int, u: int) -> int:
    """Q_r(u) = ((u^phi(p^r) - 1) / p^r) mod p^r, and 0 when p divides u."""
    check_params(p, r)
    if u < 0:
        raise ParameterError(f"u={u} must be nonnegative")
    if u % p == 0:
        return 0
    pr = p**r
    big = pr * pr
    t = pow(u % big, pr // p * (p - 1), big)
    return ((t - 1) // pr) % pr


def multiplicative_order(a: int, m: int) -> int:
    if m < 2:
        raise ParameterError(f"modulus must be >= 2, got {m}")
    from math import gcd

    if gcd(a, m) != 1:
        raise ParameterError(f"gcd({a}, {m}) != 1")
    a %= m
    order = 1
    for q, e in factorize(m).items():
        order *= q ** (e - 1) * (q - 1)
    # order is now phi(m); strip prime factors while a^(order/q) == 1
    for q in factorize(order):
        while order % q == 0 and pow(a, order // q, m) == 1:
            order //= q
    return order


def is_two_primitive_mod_p2(p: int) -> bool:
    check_params(p, 2)
    return multiplicative_order(2, p * p) == p * (p - 1)


def is_primitive_root(g: int, p: int, r: int) -> bool:
    m = p**r
    if g % p == 0:
        return False
    return multiplicative_order(g, m) == phi_prime_power(p, r)


def find_generator(p: int, r: int) -> int:
    """Smallest primitive root g mod p^r with Q_{r-1}(g) = 1."""
    check_params(p, r, min_r=2)
    m = p**r
    for g in range(2, m):
        if g % p and euler_quotient(p, r - 1, g) == 1 and is_primitive_root(g, p, r):
            return g
    raise RuntimeError(f"no generator with quotient 1 found below {m}")  # pragma: no cover
