"""Command-line interface.

    euler-klc gen euler 3 3 --out s.txt
    euler-klc classes 5 3
    euler-klc lc euler 5 3
    euler-klc klc euler 3 3 --method all --k-max 8
    euler-klc verify --suite p3r3

Every flag can also be set through an environment variable named
EULER_KLC_<FLAG>, e.g. EULER_KLC_WORKERS=4; command-line flags win.

Exit codes: 0 success, 1 verification mismatch, 2 invalid arguments,
3 resource-limit refusal.
"""

from __future__ import annotations

import argparse
import os
import sys

from .cyclotomy import build_generalized, build_partition
from .errors import ParameterError, ResourceLimitError
from .lcanalysis import (
    DEFAULT_DIM_LIMIT,
    DEFAULT_PATTERN_BUDGET,
    berlekamp_massey,
    formula_profile,
    klc_brute,
    klc_structured,
    lc_gcd,
)
from .lcanalysis.common import default_workers, seq_prime_power
from .seqgen import gen_complement, gen_euler_threshold, gen_xzlh, read_bitstring, write_bitstring
from .verify import SUITES, RunConfig, run_suite

ENV_PREFIX = "EULER_KLC_"
EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3
METHODS = ("brute", "coset", "formula", "all")


def _env(name: str, default, conv=str):
    raw = os.environ.get(ENV_PREFIX + name.upper().replace("-", "_"))
    if raw is None:
        return default
    try:
        return conv(raw)
    except ValueError:
        raise SystemExit(f"error: bad value for {ENV_PREFIX}{name.upper()}: {raw!r}") from None


def _positive(text: str) -> int:
    v = int(text)
    if v <= 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {v}")
    return v


def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--workers", type=_positive,
                        default=_env("workers", default_workers(), int))
    common.add_argument("--pattern-budget", type=_positive,
                        default=_env("pattern_budget", DEFAULT_PATTERN_BUDGET, int))
    common.add_argument("--coset-dim-limit", type=_positive,
                        default=_env("coset_dim_limit", DEFAULT_DIM_LIMIT, int))
    common.add_argument("--format", choices=("structured", "table"),
                        default=_env("format", "structured"))
    common.add_argument("--out", default=_env("out", None))
    return common


def _sequence_args(p: argparse.ArgumentParser, needed: bool = True) -> None:
    p.add_argument("family", nargs=None if needed else "?",
                   choices=("euler", "euler-complement", "xzlh"))
    p.add_argument("p", type=int, nargs=None if needed else "?")
    p.add_argument("r", type=int, nargs=None if needed else "?")
    p.add_argument("--f", type=int, help="xzlh: even divisor of p-1")
    p.add_argument("--b", type=int, help="xzlh: class shift")
    p.add_argument("--g", type=int, help="xzlh: primitive root")


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="euler-klc", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", parents=[common], help="write one period as a bitstring file")
    _sequence_args(gen)

    cls = sub.add_parser("classes", parents=[common], help="print the cyclotomic classes")
    cls.add_argument("p", type=int)
    cls.add_argument("r", type=int)
    cls.add_argument("--f", type=int, help="generalized classes with this f (needs --g)")
    cls.add_argument("--g", type=int)

    lc = sub.add_parser("lc", parents=[common], help="linear complexity by gcd and Berlekamp-Massey")
    _sequence_args(lc, needed=False)
    lc.add_argument("--in", dest="in_path")

    klc = sub.add_parser("klc", parents=[common], help="k-error linear complexity profile")
    _sequence_args(klc, needed=False)
    klc.add_argument("--in", dest="in_path")
    klc.add_argument("--method", choices=METHODS, default=_env("method", "all"))
    klc.add_argument("--k-max", type=int, default=_env("k_max", None, int))

    ver = sub.add_parser("verify", parents=[common], help="reproduce the published tables")
    ver.add_argument("--suite", choices=SUITES + ("all",), default=_env("suite", "all"))
    return parser


def _make_sequence(args):
    if getattr(args, "in_path", None):
        return read_bitstring(args.in_path)
    if args.family is None or args.p is None or args.r is None:
        raise ParameterError("give FAMILY P R or --in PATH")
    if args.family == "euler":
        return gen_euler_threshold(args.p, args.r)
    if args.family == "euler-complement":
        return gen_complement(args.p, args.r)
    if None in (args.f, args.b, args.g):
        raise ParameterError("xzlh needs --f, --b and --g")
    return gen_xzlh(args.p, args.r, args.f, args.b, args.g)


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_gen(args) -> int:
    seq = _make_sequence(args)
    if args.out:
        write_bitstring(seq, args.out)
    else:
        sys.stdout.write(seq.to_text())
    return EXIT_OK


def cmd_classes(args) -> int:
    if args.f is not None:
        if args.g is None:
            raise ParameterError("--f needs --g")
        gp = build_generalized(args.p, args.r, args.f, args.g)
        text = "".join(f"{l}: {' '.join(map(str, c))}\n" for l, c in enumerate(gp.classes))
    else:
        text = build_partition(args.p, args.r).to_text()
    _emit(text, args.out)
    return EXIT_OK


def cmd_lc(args) -> int:
    seq = _make_sequence(args)
    via_gcd = lc_gcd(seq)
    via_bm, _ = berlekamp_massey(seq)
    _emit(f"period: {seq.period}\nlc_gcd: {via_gcd}\nberlekamp_massey: {via_bm}\n", args.out)
    if via_gcd != via_bm:
        print("internal error: gcd and Berlekamp-Massey disagree", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def _profile(method: str, seq, args):
    if method == "brute":
        return klc_brute(seq, args.k_max, args.pattern_budget, args.workers)
    if method == "coset":
        return klc_structured(seq, args.coset_dim_limit, args.workers, args.k_max)
    pr = seq_prime_power(seq)
    if pr is None or seq.family not in ("euler", "euler-complement"):
        raise ParameterError("formula needs an euler or euler-complement sequence of period p^r")
    return formula_profile(pr[0], pr[1], seq.family, args.k_max)


def cross_check(profiles: dict) -> list[str]:
    """Disagreements between methods: two exact values that differ, or an
    exact value outside another method's interval."""
    problems = []
    names = list(profiles)
    for i, a in enumerate(names):
        for b in names[i + 1:]:
            pa, pb = profiles[a], profiles[b]
            ks = {e.k for e in pa.entries} & {e.k for e in pb.entries}
            for k in sorted(ks):
                ea, eb = pa.entry(k), pb.entry(k)
                if ea.exact and eb.exact and ea.lo != eb.lo:
                    problems.append(f"k={k}: {a}={ea.lo} {b}={eb.lo}")
                elif ea.exact != eb.exact:
                    ex, iv = (ea, eb) if ea.exact else (eb, ea)
                    if not iv.lo <= ex.lo <= iv.hi:
                        problems.append(f"k={k}: exact {ex.lo} outside [{iv.lo}, {iv.hi}]")
    return problems


def cmd_klc(args) -> int:
    seq = _make_sequence(args)
    methods = ("brute", "coset", "formula") if args.method == "all" else (args.method,)
    profiles = {}
    for m in methods:
        try:
            profiles[m] = _profile(m, seq, args)
        except (ResourceLimitError, ParameterError) as exc:
            if args.method != "all":
                raise
            print(f"skipped {m}: {exc}", file=sys.stderr)
    if not profiles:
        print("no method could run", file=sys.stderr)
        return EXIT_LIMIT
    render = (lambda p: p.to_table()) if args.format == "table" else (lambda p: p.to_text())
    _emit("\n".join(render(p) for p in profiles.values()), args.out)
    problems = cross_check(profiles)
    for line in problems:
        print(f"mismatch {line}", file=sys.stderr)
    return EXIT_MISMATCH if problems else EXIT_OK


def cmd_verify(args) -> int:
    cfg = RunConfig(args.workers, args.pattern_budget, args.coset_dim_limit)
    suites = SUITES if args.suite == "all" else (args.suite,)
    lines, ok = [], True
    for name in suites:
        for check in run_suite(name, cfg):
            lines.append(f"{name} {check.line()}")
            ok &= check.passed
    lines.append("verify: " + ("all checks passed" if ok else "MISMATCH"))
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if ok else EXIT_MISMATCH


COMMANDS = {"gen": cmd_gen, "classes": cmd_classes, "lc": cmd_lc, "klc": cmd_klc, "verify": cmd_verify}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except ResourceLimitError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (ParameterError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
