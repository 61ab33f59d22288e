"""Binary sequences of period p^r built from Euler quotients.

Families:
  euler             bit n = 1 iff n is a unit with Q_{r-1}(n) in the upper half
  euler-complement  bit n = 1 iff n is a unit with Q_{r-1}(n) in the lower half
  xzlh              generalized-cyclotomic sequence over all levels p^r', r' <= r
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .cyclotomy import build_generalized, build_partition
from .errors import ParameterError
from .numtheory import check_params, euler_quotient, is_primitive_root

FAMILIES = ("euler", "euler-complement", "xzlh", "custom")


@dataclass(frozen=True)
class BinarySequence:
    bits: tuple[int, ...]
    family: str = "custom"
    params: tuple[tuple[str, int], ...] = field(default=())

    def __post_init__(self):
        if not self.bits:
            raise ParameterError("a sequence needs at least one term")
        if any(b not in (0, 1) for b in self.bits):
            raise ParameterError("bits must be 0 or 1")
        if self.family not in FAMILIES:
            raise ParameterError(f"unknown family {self.family!r}")

    @classmethod
    def from_bits(cls, bits, family: str = "custom", **params) -> BinarySequence:
        return cls(tuple(int(b) for b in bits), family, tuple(params.items()))

    @property
    def period(self) -> int:
        return len(self.bits)

    @property
    def param_dict(self) -> dict[str, int]:
        return dict(self.params)

    def as_int(self) -> int:
        """Bit n of the result is term n (the generating polynomial)."""
        return int("".join(map(str, reversed(self.bits))), 2)

    def ones(self) -> list[int]:
        return [n for n, b in enumerate(self.bits) if b]

    def provenance(self) -> str:
        return " ".join([f"family={self.family}"] + [f"{k}={v}" for k, v in self.params])

    def to_text(self) -> str:
        return f"# {self.provenance()}\n" + "".join(map(str, self.bits)) + "\n"


def weight(seq: BinarySequence) -> int:
    return sum(seq.bits)


def _threshold_bits(p: int, r: int, upper: bool, start: int = 0) -> tuple[int, ...]:
    half = (p ** (r - 1) + 1) // 2
    out = []
    for n in range(start, start + p**r):
        if n % p == 0:
            out.append(0)
            continue
        q = euler_quotient(p, r - 1, n)
        out.append(int((q >= half) == upper))
    return tuple(out)


def gen_euler_threshold(p: int, r: int) -> BinarySequence:
    """Bit n = 1 iff Q_{r-1}(n)/p^(r-1) >= 1/2; since p^(r-1) is odd this is
    the integer test Q >= (p^(r-1) + 1)/2."""
    check_params(p, r, min_r=2)
    return BinarySequence(_threshold_bits(p, r, True), "euler", (("p", p), ("r", r)))


def threshold_window(p: int, r: int, start: int) -> tuple[int, ...]:
    """Terms start .. start + p^r - 1 of the euler family, straight from the
    quotient definition; used to witness periodicity."""
    check_params(p, r, min_r=2)
    return _threshold_bits(p, r, True, start)


def _from_classes(p: int, r: int, lo: int, hi: int) -> tuple[int, ...]:
    part = build_partition(p, r)
    bits = [0] * p**r
    for l in range(lo, hi + 1):
        for u in part.classes[l]:
            bits[u] = 1
    return tuple(bits)


def gen_euler_classes(p: int, r: int) -> BinarySequence:
    """Same sequence as gen_euler_threshold, from the union of the upper classes."""
    check_params(p, r, min_r=2)
    top = p ** (r - 1)
    return BinarySequence(_from_classes(p, r, (top + 1) // 2, top - 1), "euler", (("p", p), ("r", r)))


def gen_complement(p: int, r: int) -> BinarySequence:
    """Ones on D_0..D_{(p^(r-1)-1)/2}; multiples of p stay 0, so this is not
    the bitwise complement of the euler sequence."""
    check_params(p, r, min_r=2)
    top = p ** (r - 1)
    bits = _from_classes(p, r, 0, (top - 1) // 2)
    return BinarySequence(bits, "euler-complement", (("p", p), ("r", r)))


def gen_xzlh(p: int, r: int, f: int, b: int, g: int) -> BinarySequence:
    """XZLH sequence: for every level 1 <= r' <= r the residues
    p^(r-r') * D^(p^r', f)_{(l + b) mod f p^(r'-1)} are ones for l in the
    lower half [0, f p^(r'-1)/2) and zeros otherwise; n = 0 is a one."""
    check_params(p, r)
    if f <= 0 or f % 2 or (p - 1) % f:
        raise ParameterError(f"f={f} must be an even divisor of p-1={p - 1}")
    if not 0 <= b < f * p ** (r - 1):
        raise ParameterError(f"b={b} outside [0, {f * p ** (r - 1)})")
    if not is_primitive_root(g, p, r):
        raise ParameterError(f"g={g} is not a primitive root mod {p}^{r}")
    m = p**r
    bits = [-1] * m
    bits[0] = 1
    for level in range(1, r + 1):
        gp = build_generalized(p, level, f, g % p**level)
        n_cls = f * p ** (level - 1)
        scale = p ** (r - level)
        for l in range(n_cls):
            bit = 1 if l < n_cls // 2 else 0
            for u in gp.classes[(l + b) % n_cls]:
                n = scale * u
                if bits[n] != -1:
                    raise ParameterError(f"residue {n} assigned twice")
                bits[n] = bit
    if -1 in bits:
        raise ParameterError(f"residue {bits.index(-1)} not covered by the level unions")
    return BinarySequence(tuple(bits), "xzlh", (("p", p), ("r", r), ("f", f), ("b", b), ("g", g)))


def write_bitstring(seq: BinarySequence, path) -> None:
    Path(path).write_text(seq.to_text())


def parse_bitstring(text: str) -> BinarySequence:
    """Inverse of ``BinarySequence.to_text``.  Comment lines start with '#';
    a ``family=... key=int`` comment restores provenance."""
    family, params, body = "custom", [], []
    for line in text.splitlines():
        s = line.strip()
        if not s:
            continue
        if s.startswith("#"):
            for tok in s[1:].split():
                if "=" not in tok:
                    continue
                key, val = tok.split("=", 1)
                if key == "family":
                    family = val
                else:
                    try:
                        params.append((key, int(val)))
                    except ValueError:
                        raise ParameterError(f"bad provenance value {tok!r}") from None
            continue
        body.append(s)
    data = "".join(body)
    if not data:
        raise ParameterError("no sequence data")
    bad = set(data) - {"0", "1"}
    if bad:
        raise ParameterError(f"invalid characters in bitstring: {sorted(bad)}")
    return BinarySequence(tuple(int(c) for c in data), family, tuple(params))


def read_bitstring(path) -> BinarySequence:
    return parse_bitstring(Path(path).read_text())
