"""k-error linear complexity profiles and error witnesses.

Structured text format (stable field order, one record per line)::

    # klc-profile v1
    p: 3
    r: 3
    family: euler
    period: 27
    max_k: 6
    k=0 lc=24 method=brute
    k=7 lo=0 hi=8 method=bound

``p`` and ``r`` are ``-`` for sequences without prime-power provenance.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import ParameterError
from ..gf2poly import Gf2Poly

METHODS = ("brute", "coset", "formula", "bound")
HEADER = "# klc-profile v1"


@dataclass(frozen=True)
class KlcEntry:
    k: int
    lo: int
    hi: int
    method: str

    def __post_init__(self):
        if self.lo > self.hi:
            raise ParameterError(f"empty interval [{self.lo}, {self.hi}] at k={self.k}")
        if self.method not in METHODS:
            raise ParameterError(f"unknown method {self.method!r}")

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    @property
    def value(self) -> int | None:
        return self.lo if self.exact else None

    def to_line(self) -> str:
        if self.exact:
            return f"k={self.k} lc={self.lo} method={self.method}"
        return f"k={self.k} lo={self.lo} hi={self.hi} method={self.method}"


@dataclass(frozen=True)
class ErrorWitness:
    error_poly: Gf2Poly
    weight: int
    achieved_lc: int


@dataclass
class KlcProfile:
    p: int | None
    r: int | None
    family: str
    period: int
    entries: list[KlcEntry] = field(default_factory=list)
    witnesses: dict[int, ErrorWitness] = field(default_factory=dict)

    @property
    def max_k(self) -> int:
        return self.entries[-1].k if self.entries else -1

    def entry(self, k: int) -> KlcEntry:
        for e in self.entries:
            if e.k == k:
                return e
        raise KeyError(k)

    def exact_values(self) -> dict[int, int]:
        return {e.k: e.lo for e in self.entries if e.exact}

    def truncated(self, k_max: int) -> KlcProfile:
        return KlcProfile(
            self.p,
            self.r,
            self.family,
            self.period,
            [e for e in self.entries if e.k <= k_max],
            {k: w for k, w in self.witnesses.items() if k <= k_max},
        )

    def to_text(self) -> str:
        lines = [
            HEADER,
            f"p: {'-' if self.p is None else self.p}",
            f"r: {'-' if self.r is None else self.r}",
            f"family: {self.family}",
            f"period: {self.period}",
            f"max_k: {self.max_k}",
        ]
        lines += [e.to_line() for e in self.entries]
        return "\n".join(lines) + "\n"

    def to_table(self) -> str:
        """Human-readable table with runs of equal entries merged into bands."""
        head = f"LC_k  p={self.p} r={self.r} family={self.family} period={self.period}"
        rows = [head, f"{'k':>11}  {'LC_k':>12}  method"]
        i = 0
        while i < len(self.entries):
            e = self.entries[i]
            j = i
            while (
                j + 1 < len(self.entries)
                and (self.entries[j + 1].lo, self.entries[j + 1].hi, self.entries[j + 1].method)
                == (e.lo, e.hi, e.method)
            ):
                j += 1
            ks = str(e.k) if i == j else f"{e.k}-{self.entries[j].k}"
            val = str(e.lo) if e.exact else f"[{e.lo}, {e.hi}]"
            rows.append(f"{ks:>11}  {val:>12}  {e.method}")
            i = j + 1
        return "\n".join(rows) + "\n"

    def check(self, weight: int | None = None) -> list[str]:
        """Violations of the profile invariants (empty list when consistent):
        exact values nonincreasing in k, k=weight maps to 0, and every
        interval compatible with its exact neighbours."""
        problems = []
        prev_exact = None
        for e in self.entries:
            if prev_exact is not None and e.lo > prev_exact:
                problems.append(f"k={e.k}: lower bound {e.lo} exceeds earlier exact {prev_exact}")
            if e.exact:
                prev_exact = e.lo
        next_exact = None
        for e in reversed(self.entries):
            if next_exact is not None and e.hi < next_exact:
                problems.append(f"k={e.k}: upper bound {e.hi} below later exact {next_exact}")
            if e.exact:
                next_exact = e.lo
        if weight is not None:
            for e in self.entries:
                if e.k >= weight and not (e.exact and e.lo == 0):
                    problems.append(f"k={e.k} >= weight {weight} but entry is not 0")
        return problems


def parse_profile(text: str) -> KlcProfile:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0] != HEADER:
        raise ParameterError("missing profile header")
    head: dict[str, str] = {}
    entries = []
    for ln in lines[1:]:
        if ln.startswith("k="):
            kv = dict(tok.split("=", 1) for tok in ln.split())
            k = int(kv["k"])
            if "lc" in kv:
                lo = hi = int(kv["lc"])
            else:
                lo, hi = int(kv["lo"]), int(kv["hi"])
            entries.append(KlcEntry(k, lo, hi, kv["method"]))
        else:
            key, val = ln.split(":", 1)
            head[key.strip()] = val.strip()

    def opt(v: str) -> int | None:
        return None if v == "-" else int(v)

    prof = KlcProfile(opt(head["p"]), opt(head["r"]), head["family"], int(head["period"]), entries)
    if prof.max_k != int(head["max_k"]):
        raise ParameterError("max_k does not match the entries")
    return prof
