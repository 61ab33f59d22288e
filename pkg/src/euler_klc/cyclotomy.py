"""Partitions of the units mod p^r into Euler-quotient classes, plus the
generalized classes D_l^(p^r, f) built from a primitive root."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParameterError
from .numtheory import check_params, euler_quotient, is_primitive_root


@dataclass(frozen=True)
class CyclotomicPartition:
    """Classes D_0..D_{p^(r-1)-1} of units mod p^r, D_l = {u : Q_{r-1}(u) = l}.

    Each class is stored sorted.  ``index[u]`` is the class of ``u`` or -1
    for multiples of p.
    """

    p: int
    r: int
    classes: tuple[tuple[int, ...], ...]
    nonunits: tuple[int, ...]
    index: tuple[int, ...]

    @property
    def modulus(self) -> int:
        return self.p**self.r

    def class_of(self, u: int) -> int | None:
        return class_of(self, u)

    def to_text(self) -> str:
        return "".join(f"{l}: {' '.join(map(str, c))}\n" for l, c in enumerate(self.classes))

    def same_classes(self, other: CyclotomicPartition) -> bool:
        return (self.p, self.r) == (other.p, other.r) and [set(c) for c in self.classes] == [
            set(c) for c in other.classes
        ]


def _assemble(p: int, r: int, buckets: list[list[int]]) -> CyclotomicPartition:
    m = p**r
    index = [-1] * m
    for l, members in enumerate(buckets):
        for u in members:
            if index[u] != -1:
                raise ParameterError(f"residue {u} lands in two classes")
            index[u] = l
    if any(index[u] == -1 for u in range(m) if u % p):
        raise ParameterError("classes do not cover the units")
    return CyclotomicPartition(
        p=p,
        r=r,
        classes=tuple(tuple(sorted(b)) for b in buckets),
        nonunits=tuple(range(0, m, p)),
        index=tuple(index),
    )


def build_partition(p: int, r: int) -> CyclotomicPartition:
    """Canonical partition from direct quotient evaluation (no generator)."""
    check_params(p, r, min_r=2)
    m = p**r
    buckets: list[list[int]] = [[] for _ in range(p ** (r - 1))]
    for u in range(1, m):
        if u % p:
            buckets[euler_quotient(p, r - 1, u)].append(u)
    return _assemble(p, r, buckets)


def build_partition_via_generator(p: int, r: int, g: int) -> CyclotomicPartition:
    """D_l = {g^(l + k p^(r-1)) mod p^r : 0 <= k < p-1}."""
    check_params(p, r, min_r=2)
    if not is_primitive_root(g, p, r):
        raise ParameterError(f"g={g} is not a primitive root mod {p}^{r}")
    if euler_quotient(p, r - 1, g) != 1:
        raise ParameterError(f"g={g} does not have Euler quotient 1")
    m, step = p**r, p ** (r - 1)
    buckets = [[pow(g, l + k * step, m) for k in range(p - 1)] for l in range(step)]
    return _assemble(p, r, buckets)


def class_of(partition: CyclotomicPartition, u: int) -> int | None:
    """Class index of ``u``, or None when p divides u."""
    if not 0 <= u < partition.modulus:
        raise ParameterError(f"residue {u} outside [0, {partition.modulus})")
    l = partition.index[u]
    return None if l < 0 else l


def class_polynomial(partition: CyclotomicPartition, l: int) -> int:
    """d_l(X) = sum of X^u over D_l, as a bit mask."""
    v = 0
    for u in partition.classes[l]:
        v |= 1 << u
    return v


@dataclass(frozen=True)
class GeneralizedPartition:
    """D_l^(p^r, f) = g^l <g^(f p^(r-1))> for 0 <= l < f p^(r-1); classes have
    e = (p-1)/f elements.  Stored in generation order, not sorted."""

    p: int
    r: int
    f: int
    g: int
    classes: tuple[tuple[int, ...], ...]

    @property
    def e(self) -> int:
        return (self.p - 1) // self.f

    def union(self, l: int) -> set[int]:
        """Union of the f classes l + i p^(r-1); equals the Euler-quotient
        class D_l when g has quotient 1."""
        step = self.p ** (self.r - 1)
        out: set[int] = set()
        for i in range(self.f):
            out.update(self.classes[l + i * step])
        return out


def build_generalized(p: int, r: int, f: int, g: int) -> GeneralizedPartition:
    check_params(p, r)
    if f <= 0 or f % 2 or (p - 1) % f:
        raise ParameterError(f"f={f} must be an even divisor of p-1={p - 1}")
    if not is_primitive_root(g, p, r):
        raise ParameterError(f"g={g} is not a primitive root mod {p}^{r}")
    m = p**r
    e = (p - 1) // f
    stride = f * p ** (r - 1)
    classes = tuple(tuple(pow(g, l + k * stride, m) for k in range(e)) for l in range(stride))
    seen = sorted(u for c in classes for u in c)
    if seen != [u for u in range(m) if u % p]:
        raise ParameterError("generalized classes do not partition the units")
    return GeneralizedPartition(p=p, r=r, f=f, g=g, classes=classes)
