"""Closed-form linear complexity and k-error linear complexity of the
Euler-quotient sequences, valid when 2 is a primitive root mod p^2.

Coverage:
  r = 2   euler and euler-complement families, every k
  r = 3   euler family up to k = p(p-1)^2/2
  r >= 4  euler family through the recursion LC_k(s^(r)) =
          p^r - p^(r-1) + LC_k(s^(r-1)) (p = 1 mod 4); the recursion leaves
          a band of k where only the bound p^r - p^(r-1) <= LC_k <= p^r - 1
          is known, and for p = 3 mod 4 it needs complement values at
          r - 1 >= 3, which are not available.
Anything not covered comes back as an interval rather than a number.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import ParameterError, UnsupportedError
from ..numtheory import check_params, is_two_primitive_mod_p2
from .profile import KlcEntry, KlcProfile

EXACT, BOUND, UNCOVERED = "exact", "bound", "uncovered"


@dataclass(frozen=True)
class KlcValue:
    lo: int
    hi: int
    kind: str = EXACT

    @property
    def exact(self) -> bool:
        return self.kind == EXACT

    @property
    def value(self) -> int | None:
        return self.lo if self.exact else None

    def shifted(self, by: int) -> KlcValue:
        return KlcValue(self.lo + by, self.hi + by, self.kind)


def _exact(v: int) -> KlcValue:
    return KlcValue(v, v, EXACT)


def is_wieferich(p: int) -> bool:
    return pow(2, p - 1, p * p) == 1


def lc_formula(p: int, r: int) -> int:
    check_params(p, r, min_r=2)
    if is_wieferich(p):
        raise UnsupportedError(f"2^(p-1) = 1 mod p^2 for p={p}; no closed form applies")
    if p % 4 == 3 and r % 2 == 0:
        return p**r - 1
    return p**r - p


def euler_weight(p: int, r: int) -> int:
    return (p - 1) * (p ** (r - 1) - 1) // 2


def complement_weight(p: int, r: int) -> int:
    return (p - 1) * (p ** (r - 1) + 1) // 2


def _euler_r2(p: int, k: int) -> int:
    half = (p - 1) ** 2 // 2
    if p % 4 == 1:
        return p * p - p if k < half else 0
    if k == 0:
        return p * p - 1
    if k < p - 1:
        return p * p - p + 1
    if k < half:
        return p * p - p
    return 0


def _complement_r2(p: int, k: int) -> int:
    half, top = (p - 1) ** 2 // 2, (p * p - 1) // 2
    if p % 4 == 1:
        if k == 0:
            return p * p - 1
        if k < p - 1:
            return p * p - p + 1
        if k < half:
            return p * p - p
    elif k < half:
        return p * p - p
    if k < top:
        return p - 1
    return 0


def _euler_r3(p: int, k: int) -> int:
    half = (p - 1) ** 2 // 2
    if p % 4 == 1:
        if k < half:
            return p**3 - p
        if k < p * half:
            return p**3 - p**2
        return p * p - p
    if k < half:
        return p**3 - p
    if k < (p * p - 1) // 2:
        return p**3 - p**2 + p - 1
    if k < p * half:
        return p**3 - p**2
    return p * p - 1


def _drop_value(p: int, r: int) -> int:
    # LC at k = p^(r-2)(p-1)^2/2
    if p % 4 == 1 or r % 2 == 0:
        return p ** (r - 1) - p
    return p ** (r - 1) - 1


def _euler(p: int, r: int, k: int) -> KlcValue:
    if k >= euler_weight(p, r):
        return _exact(0)
    drop_k = p ** (r - 2) * (p - 1) ** 2 // 2
    if r == 2:
        return _exact(_euler_r2(p, k))
    if k > drop_k:
        # between the last stated case and the weight
        return KlcValue(0, _drop_value(p, r), UNCOVERED)
    if r == 3:
        return _exact(_euler_r3(p, k))
    if k == drop_k:
        return _exact(_drop_value(p, r))
    base = p**r - p ** (r - 1)
    if p % 4 == 1:
        if k >= (p ** (r - 2) - 1) * (p - 1) // 2:
            return _exact(base)
        if k > p ** (r - 3) * (p - 1) ** 2 // 2:
            return KlcValue(base, p**r - 1, BOUND)
        return _euler(p, r - 1, k).shifted(base)
    if k >= (p ** (r - 2) + 1) * (p - 1) // 2:
        return _exact(base)
    # needs LC_k of the complement at level r-1 >= 3
    return KlcValue(base, p**r, UNCOVERED)


def klc_formula(p: int, r: int, k: int, family: str = "euler") -> KlcValue:
    check_params(p, r, min_r=2)
    if k < 0:
        raise ParameterError("k must be nonnegative")
    if not is_two_primitive_mod_p2(p):
        raise UnsupportedError(f"2 is not a primitive root mod {p}^2")
    if family == "euler":
        return _euler(p, r, k)
    if family == "euler-complement":
        if r != 2:
            raise UnsupportedError("complement family has a closed form only for r = 2")
        return _exact(_complement_r2(p, k))
    raise UnsupportedError(f"no closed form for family {family!r}")


def formula_profile(p: int, r: int, family: str = "euler", k_max: int | None = None) -> KlcProfile:
    weight = euler_weight(p, r) if family == "euler" else complement_weight(p, r)
    if k_max is None:
        k_max = weight
    prof = KlcProfile(p, r, family, p**r)
    for k in range(k_max + 1):
        v = klc_formula(p, r, k, family)
        prof.entries.append(KlcEntry(k, v.lo, v.hi, "formula" if v.exact else "bound"))
    return prof
