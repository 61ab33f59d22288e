"""Reproduction suites: each compares computed results with the shipped
golden tables and with exhaustive structural checks."""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from importlib import resources
from operator import xor

from .cyclotomy import build_partition, class_polynomial
from .gf2poly import Gf2Poly, cyclotomic_factor, rem_int
from .lcanalysis import (
    berlekamp_massey,
    construct_optimal_error,
    formula_profile,
    klc_brute,
    klc_structured,
    lc_formula,
    lc_gcd,
    min_weight_coset,
    parse_profile,
)
from .lcanalysis.brute import DEFAULT_PATTERN_BUDGET
from .lcanalysis.coset import DEFAULT_DIM_LIMIT
from .numtheory import euler_quotient
from .seqgen import gen_complement, gen_euler_classes, gen_euler_threshold

SUITES = ("p3r3", "p5r2", "p5r3", "complement", "lemmas")


@dataclass(frozen=True)
class Check:
    name: str
    expected: object
    actual: object

    @property
    def passed(self) -> bool:
        return self.expected == self.actual

    def line(self) -> str:
        flag = "PASS" if self.passed else "FAIL"
        if isinstance(self.expected, str) and isinstance(self.actual, str):
            return f"[{flag}] {self.name}: {_text_summary(self.expected, self.actual)}"
        return f"[{flag}] {self.name}: expected={self.expected} actual={self.actual}"


def _text_summary(want: str, got: str) -> str:
    if want == got:
        return f"{len(want.splitlines())} lines identical"
    a, b = want.splitlines(), got.splitlines()
    for i, (x, y) in enumerate(zip(a, b)):
        if x != y:
            return f"line {i + 1}: expected {x!r} actual {y!r}"
    return f"expected {len(a)} lines, actual {len(b)}"


@dataclass(frozen=True)
class RunConfig:
    workers: int = 1
    pattern_budget: int = DEFAULT_PATTERN_BUDGET
    coset_dim_limit: int = DEFAULT_DIM_LIMIT


def golden_text(name: str) -> str:
    return resources.files("euler_klc").joinpath("golden", name).read_text()


def golden_profile(name: str):
    return parse_profile(golden_text(name))


def golden_classes(name: str) -> dict[int, set[int]]:
    out = {}
    for line in golden_text(name).splitlines():
        if line.strip():
            l, rest = line.split(":", 1)
            out[int(l)] = {int(x) for x in rest.split()}
    return out


def _class_check(name: str, p: int, r: int, golden: str) -> Check:
    part = build_partition(p, r)
    want = golden_classes(golden)
    got = {l: set(part.classes[l]) for l in want}
    return Check(name, {l: sorted(v) for l, v in want.items()}, {l: sorted(v) for l, v in got.items()})


# structural checks -----------------------------------------------------------

def additive_law_violations(p: int, r: int) -> int:
    """Count of (u, k) breaking Q_r(u + k p^r) = Q_r(u) - k p^(r-1) u^-1 mod p^r."""
    pr = p**r
    bad = 0
    for u in range(1, pr):
        if u % p == 0:
            continue
        base, inv = euler_quotient(p, r, u), pow(u, -1, pr)
        for k in range(p):
            if euler_quotient(p, r, u + k * pr) != (base - k * p ** (r - 1) * inv) % pr:
                bad += 1
    return bad


def projection_violations(p: int, r: int) -> int:
    """Classes D_l^(p^(r+1)) whose reduction mod p^r is not D_{l mod p^(r-1)}^(p^r),
    plus classes of p^r not reducing onto {1..p-1} mod p."""
    upper, lower = build_partition(p, r + 1), build_partition(p, r)
    bad = 0
    for l, members in enumerate(upper.classes):
        if {u % p**r for u in members} != set(lower.classes[l % p ** (r - 1)]):
            bad += 1
    for members in lower.classes:
        if {u % p for u in members} != set(range(1, p)):
            bad += 1
    return bad


def fiber_violations(p: int, r: int) -> int:
    """Units v mod p^r whose fiber {v + j p^r} misses some class
    D^(p^(r+1))_{Q_r(v) + i p^(r-1)} or meets it more than once."""
    upper = build_partition(p, r + 1)
    pr = p**r
    bad = 0
    for v in range(1, pr):
        if v % p == 0:
            continue
        ell = euler_quotient(p, r, v)
        fiber = [upper.index[v + j * pr] for j in range(p)]
        for i in range(p):
            if fiber.count((ell + i * p ** (r - 1)) % pr) != 1:
                bad += 1
    return bad


def split_violations(p: int, rr: int = 3) -> int:
    """Fibers of period p^rr whose count of ones is not (p-1)/2 for lower
    residues j of the quotient and (p+1)/2 for upper ones."""
    bits = gen_euler_threshold(p, rr).bits
    step, q = p ** (rr - 1), p ** (rr - 2)
    bad = 0
    for v in range(1, step):
        if v % p == 0:
            continue
        j = euler_quotient(p, rr - 1, v) % q
        ones = sum(bits[v + t * step] for t in range(p))
        want = (p - 1) // 2 if j <= (q - 1) // 2 else (p + 1) // 2
        bad += ones != want
    return bad


def class_sum_violations(p: int, r: int) -> int:
    """Indices l for which sum_i d^(p^(r+1))_{l + i p^(r-1) mod p^r} is not a
    multiple of cyclotomic_factor(p, r+1)."""
    part = build_partition(p, r + 1)
    phi = cyclotomic_factor(p, r + 1).value
    pr = p**r
    bad = 0
    for l in range(pr):
        total = reduce(xor, (class_polynomial(part, (l + i * p ** (r - 1)) % pr) for i in range(p)))
        bad += rem_int(total, phi) != 0
    return bad


def reduction_matches(p: int) -> bool:
    """S^(p^3) mod X^(p^2) - 1 equals S^(p^2) (p = 1 mod 4) or the complement
    polynomial (p = 3 mod 4)."""
    s3 = gen_euler_classes(p, 3).as_int()
    target = gen_euler_classes(p, 2) if p % 4 == 1 else gen_complement(p, 2)
    return rem_int(s3, (1 << p * p) | 1) == target.as_int()


def factor_pattern(p: int, r: int, complement: bool = False) -> dict[str, object]:
    """Which factors of X^(p^r) - 1 divide the generating polynomial, and the
    remainder modulo cyclotomic_factor(p, 1)."""
    s = (gen_complement if complement else gen_euler_classes)(p, r).as_int()
    return {
        "x+1": rem_int(s, 0b11) == 0,
        "rem_phi_p": rem_int(s, cyclotomic_factor(p, 1).value),
        "higher": [rem_int(s, cyclotomic_factor(p, j).value) == 0 for j in range(2, r + 1)],
    }


def expected_factor_pattern(p: int, r: int, complement: bool = False) -> dict[str, object]:
    c = ((p ** (r - 1) + (1 if complement else -1)) // 2) % 2
    return {"x+1": True, "rem_phi_p": c, "higher": [False] * (r - 1)}


# suites ------------------------------------------------------------------------

def suite_p3r3(cfg: RunConfig) -> list[Check]:
    seq = gen_euler_threshold(3, 3)
    golden = golden_profile("table_p3r3_euler.txt")
    brute = klc_brute(seq, 6, cfg.pattern_budget, cfg.workers)
    coset = klc_structured(seq, cfg.coset_dim_limit, cfg.workers, k_max=6)
    wit = construct_optimal_error(3, 3)
    w_min, _ = min_weight_coset(Gf2Poly(seq.as_int()), cyclotomic_factor(3, 3), 27,
                                cfg.coset_dim_limit, cfg.workers)
    return [
        _class_check("classes D_5..D_8 of 27", 3, 3, "classes_p3r3.txt"),
        Check("brute LC_k, k<=6", golden.exact_values(), brute.exact_values()),
        Check("coset LC_k, k<=6", golden.exact_values(), coset.exact_values()),
        Check("formula table (byte-exact)", golden_text("table_p3r3_euler.txt"),
              formula_profile(3, 3, k_max=6).to_text()),
        Check("optimal error weight, lc", (6, 8), (wit.weight, wit.achieved_lc)),
        Check("min weight making Phi(27) divide S+e", 6, w_min),
    ]


def suite_p5r2(cfg: RunConfig) -> list[Check]:
    seq = gen_euler_threshold(5, 2)
    golden = golden_profile("closed_p5r2_euler.txt")
    brute = klc_brute(seq, 8, cfg.pattern_budget, cfg.workers)
    small = klc_brute(gen_euler_threshold(3, 2), 2, cfg.pattern_budget, cfg.workers)
    return [
        Check("LC (gcd) p=5 r=2", lc_formula(5, 2), lc_gcd(seq)),
        Check("brute LC_k, k<=8", golden.exact_values(), brute.exact_values()),
        Check("brute LC_k p=3 r=2, k<=2",
              golden_profile("closed_p3r2_euler.txt").exact_values(), small.exact_values()),
        Check("formula table p=5 r=2 (byte-exact)", golden_text("closed_p5r2_euler.txt"),
              formula_profile(5, 2, k_max=8).to_text()),
    ]


def suite_p5r3(cfg: RunConfig) -> list[Check]:
    seq = gen_euler_threshold(5, 3)
    w, wit = min_weight_coset(Gf2Poly(seq.as_int()), cyclotomic_factor(5, 3), 125,
                              cfg.coset_dim_limit, cfg.workers)
    built = construct_optimal_error(5, 3)
    return [
        _class_check("classes D_13..D_24 of 125", 5, 3, "classes_p5r3.txt"),
        Check("formula table k<=40 (byte-exact)", golden_text("table_p5r3_euler.txt"),
              formula_profile(5, 3, k_max=40).to_text()),
        Check("LC (gcd)", 120, lc_gcd(seq)),
        Check("coset search Phi(125): weight, lc", (40, 20), (w, wit.achieved_lc)),
        Check("optimal error weight, lc", (40, 20), (built.weight, built.achieved_lc)),
    ]


def suite_complement(cfg: RunConfig) -> list[Check]:
    seq = gen_complement(5, 2)
    golden = golden_profile("closed_p5r2_complement.txt")
    brute = klc_brute(seq, 12, cfg.pattern_budget, cfg.workers)
    coset = klc_structured(seq, cfg.coset_dim_limit, cfg.workers, k_max=12)
    return [
        Check("brute LC_k complement p=5, k<=12", golden.exact_values(), brute.exact_values()),
        Check("coset LC_k complement p=5, k<=12", golden.exact_values(), coset.exact_values()),
        Check("formula complement p=5 (byte-exact)", golden_text("closed_p5r2_complement.txt"),
              formula_profile(5, 2, "euler-complement", k_max=12).to_text()),
    ]


def suite_lemmas(cfg: RunConfig) -> list[Check]:
    checks = []
    for p in (3, 5):
        for r in (1, 2, 3):
            checks.append(Check(f"additive law p={p} r={r}", 0, additive_law_violations(p, r)))
        for r in (2, 3):
            checks.append(Check(f"class projection p={p} r={r}", 0, projection_violations(p, r)))
        checks.append(Check(f"fiber meets each class once p={p} r=2", 0, fiber_violations(p, 2)))
        checks.append(Check(f"fiber one-counts p={p} period p^3", 0, split_violations(p, 3)))
        checks.append(Check(f"reduction mod X^(p^2)-1 p={p}", True, reduction_matches(p)))
        for r in (2, 3):
            checks.append(Check(f"class sums divisible p={p} r={r}", 0, class_sum_violations(p, r)))
            for comp in (False, True):
                tag = "complement" if comp else "euler"
                checks.append(Check(f"factor pattern {tag} p={p} r={r}",
                                    expected_factor_pattern(p, r, comp), factor_pattern(p, r, comp)))
        for r in (2, 3):
            seq = gen_euler_threshold(p, r)
            checks.append(Check(f"gcd LC = BM LC p={p} r={r}", lc_gcd(seq), berlekamp_massey(seq)[0]))
    return checks


RUNNERS = {
    "p3r3": suite_p3r3,
    "p5r2": suite_p5r2,
    "p5r3": suite_p5r3,
    "complement": suite_complement,
    "lemmas": suite_lemmas,
}


def run_suite(name: str, cfg: RunConfig | None = None) -> list[Check]:
    return RUNNERS[name](cfg or RunConfig())
