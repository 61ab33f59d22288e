"""Dense polynomial arithmetic over GF(2).

A polynomial is stored as a Python int whose bit i is the coefficient of
X^i, so addition is XOR and the word-level work of shifting and XOR-ing is
done by the interpreter's big-int routines.  Degrees here stay below ~10^4,
where schoolbook multiplication is the right choice.
"""

from __future__ import annotations

from .errors import ParameterError
from .numtheory import check_params, is_two_primitive_mod_p2

ZERO_DEGREE = float("-inf")


class Gf2Poly:
    """Immutable polynomial over GF(2)."""

    __slots__ = ("value",)

    def __init__(self, value: int = 0):
        if value < 0:
            raise ParameterError("coefficient bitmask must be nonnegative")
        object.__setattr__(self, "value", int(value))

    def __setattr__(self, name, val):
        raise AttributeError("Gf2Poly is immutable")

    @classmethod
    def from_coeffs(cls, coeffs) -> Gf2Poly:
        v = 0
        for i, c in enumerate(coeffs):
            if c & 1:
                v |= 1 << i
        return cls(v)

    @classmethod
    def from_exponents(cls, exps) -> Gf2Poly:
        v = 0
        for e in exps:
            v ^= 1 << e
        return cls(v)

    @classmethod
    def monomial(cls, n: int) -> Gf2Poly:
        return cls(1 << n)

    @property
    def degree(self):
        """Index of the top coefficient; ``ZERO_DEGREE`` (-inf) for zero."""
        return self.value.bit_length() - 1 if self.value else ZERO_DEGREE

    @property
    def weight(self) -> int:
        return self.value.bit_count()

    def coeffs(self, length: int | None = None) -> list[int]:
        n = self.value.bit_length() if length is None else length
        return [(self.value >> i) & 1 for i in range(n)]

    def exponents(self) -> list[int]:
        v, out = self.value, []
        while v:
            low = v & -v
            out.append(low.bit_length() - 1)
            v ^= low
        return out

    def is_zero(self) -> bool:
        return self.value == 0

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        if isinstance(other, Gf2Poly):
            return self.value == other.value
        return NotImplemented

    def __hash__(self):
        return hash(("gf2poly", self.value))

    def __add__(self, other: Gf2Poly) -> Gf2Poly:
        return Gf2Poly(self.value ^ other.value)

    __sub__ = __add__

    def __mul__(self, other: Gf2Poly) -> Gf2Poly:
        return Gf2Poly(mul_int(self.value, other.value))

    def __mod__(self, other: Gf2Poly) -> Gf2Poly:
        return Gf2Poly(rem_int(self.value, other.value))

    def __floordiv__(self, other: Gf2Poly) -> Gf2Poly:
        return Gf2Poly(divmod_int(self.value, other.value)[0])

    def __divmod__(self, other: Gf2Poly):
        q, r = divmod_int(self.value, other.value)
        return Gf2Poly(q), Gf2Poly(r)

    def __repr__(self):
        return f"Gf2Poly({self})"

    def __str__(self):
        if not self.value:
            return "0"
        terms = []
        for e in reversed(self.exponents()):
            terms.append("1" if e == 0 else "X" if e == 1 else f"X^{e}")
        return " + ".join(terms)

    def to_hex(self) -> str:
        """Coefficient bits as hex bytes, X^0 in the least significant bit of
        the first byte.  Debugging aid only."""
        n = max(1, (self.value.bit_length() + 7) // 8)
        return self.value.to_bytes(n, "little").hex()

    @classmethod
    def from_hex(cls, text: str) -> Gf2Poly:
        return cls(int.from_bytes(bytes.fromhex(text), "little"))


# Integer-level kernels; the hot loops elsewhere call these directly.

def mul_int(a: int, b: int) -> int:
    if a.bit_count() < b.bit_count():
        a, b = b, a
    out = 0
    while b:
        low = b & -b
        out ^= a << (low.bit_length() - 1)
        b ^= low
    return out


def divmod_int(a: int, m: int) -> tuple[int, int]:
    if m == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    dm = m.bit_length()
    q = 0
    while a.bit_length() >= dm:
        shift = a.bit_length() - dm
        q |= 1 << shift
        a ^= m << shift
    return q, a


def rem_int(a: int, m: int) -> int:
    if m == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    dm = m.bit_length()
    while a.bit_length() >= dm:
        a ^= m << (a.bit_length() - dm)
    return a


def gcd_int(a: int, b: int) -> int:
    while b:
        a, b = b, rem_int(a, b)
    return a


def add(f: Gf2Poly, g: Gf2Poly) -> Gf2Poly:
    return f + g


def mul(f: Gf2Poly, g: Gf2Poly) -> Gf2Poly:
    return f * g


def rem(f: Gf2Poly, m: Gf2Poly) -> Gf2Poly:
    return f % m


def gcd(f: Gf2Poly, g: Gf2Poly) -> Gf2Poly:
    """Greatest common divisor; gcd(0, 0) = 0.  Over GF(2) every nonzero
    polynomial is monic, so the result is unique."""
    return Gf2Poly(gcd_int(f.value, g.value))


def divides(d: Gf2Poly, f: Gf2Poly) -> bool:
    if d.is_zero():
        raise ZeroDivisionError("zero polynomial is not a divisor")
    return rem_int(f.value, d.value) == 0


def from_sequence(seq) -> Gf2Poly:
    """Generating polynomial sum(bit_n X^n) of one period."""
    return Gf2Poly(seq.as_int())


def x_pow_minus_one(n: int) -> Gf2Poly:
    return Gf2Poly((1 << n) | 1)


def cyclotomic_factor(p: int, j: int) -> Gf2Poly:
    """(X^(p^j) - 1) / (X^(p^(j-1)) - 1) = sum_{i<p} X^(i p^(j-1))."""
    check_params(p, j)
    step = p ** (j - 1)
    v = 0
    for i in range(p):
        v |= 1 << (i * step)
    return Gf2Poly(v)


def is_irreducible_context(p: int) -> bool:
    """True when every cyclotomic_factor(p, j) is irreducible over GF(2),
    i.e. when 2 is a primitive root mod p^2."""
    return is_two_primitive_mod_p2(p)


def prime_power_factors(p: int, r: int) -> list[Gf2Poly]:
    """X^(p^r) - 1 = (X + 1) * prod_{j=1..r} cyclotomic_factor(p, j)."""
    return [Gf2Poly(0b11)] + [cyclotomic_factor(p, j) for j in range(1, r + 1)]
