import pytest

from euler_klc.cli import cross_check, main
from euler_klc.lcanalysis import KlcEntry, KlcProfile, parse_profile
from euler_klc.seqgen import gen_euler_threshold, read_bitstring


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_gen_stdout(capsys):
    code, out, _ = run(capsys, "gen", "euler", "3", "3")
    assert code == 0
    header, bits = out.splitlines()
    assert header.startswith("# family=euler")
    assert bits == "".join(map(str, gen_euler_threshold(3, 3).bits))


def test_gen_file_roundtrip(capsys, tmp_path):
    path = tmp_path / "s.txt"
    assert run(capsys, "gen", "euler-complement", "5", "2", "--out", str(path))[0] == 0
    seq = read_bitstring(path)
    assert seq.period == 25
    assert run(capsys, "lc", "--in", str(path))[1].splitlines()[1] == "lc_gcd: 24"


def test_gen_xzlh_puts_zero_in_class_one(capsys):
    code, out, _ = run(capsys, "gen", "xzlh", "5", "2", "--f", "4", "--b", "3", "--g", "2")
    assert code == 0
    assert out.splitlines()[1][0] == "1"


def test_xzlh_needs_all_flags(capsys):
    assert run(capsys, "gen", "xzlh", "5", "2", "--f", "4")[0] == 2


def test_classes(capsys):
    code, out, _ = run(capsys, "classes", "3", "3")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 9
    assert set(lines[5].split(": ")[1].split()) == {"4", "23"}


def test_lc(capsys):
    code, out, _ = run(capsys, "lc", "euler", "5", "3")
    assert code == 0
    assert out == "period: 125\nlc_gcd: 120\nberlekamp_massey: 120\n"


def test_klc_all_methods_agree(capsys):
    code, out, err = run(capsys, "klc", "euler", "3", "3", "--k-max", "8")
    assert code == 0
    assert "mismatch" not in err
    blocks = out.split("# klc-profile")
    assert len(blocks) == 4


def test_klc_formula_table(capsys):
    code, out, _ = run(capsys, "klc", "euler", "5", "2", "--method", "formula", "--format", "table")
    assert code == 0
    assert "20" in out


def test_klc_structured_output_parses(capsys, tmp_path):
    path = tmp_path / "prof.txt"
    assert run(capsys, "klc", "euler", "3", "2", "--method", "coset", "--out", str(path))[0] == 0
    prof = parse_profile(path.read_text())
    assert prof.exact_values() == {0: 8, 1: 7, 2: 0}


def test_brute_over_budget_exits_3(capsys):
    code, _, err = run(capsys, "klc", "euler", "5", "3", "--method", "brute", "--pattern-budget", "1000")
    assert code == 3
    assert "pattern_budget" in err


def test_low_dim_limit_gives_bounds(capsys):
    code, out, _ = run(capsys, "klc", "euler", "5", "3", "--method", "coset", "--coset-dim-limit", "4")
    assert code == 0
    prof = parse_profile(out)
    assert all(e.lo <= 100 <= e.hi for e in prof.entries if e.k < 40)
    assert prof.entry(48).value == 0


def test_all_skips_refused_methods(capsys):
    code, out, err = run(capsys, "klc", "euler", "5", "3", "--pattern-budget", "1000")
    assert code == 0
    assert "skipped brute" in err


def test_env_override(capsys, monkeypatch):
    monkeypatch.setenv("EULER_KLC_PATTERN_BUDGET", "1000")
    code, _, err = run(capsys, "klc", "euler", "5", "3", "--method", "brute")
    assert code == 3
    code, _, _ = run(capsys, "klc", "euler", "3", "2", "--method", "brute", "--pattern-budget", "100000")
    assert code == 0


@pytest.mark.parametrize("argv", [
    ("gen", "euler", "3", "1"),
    ("gen", "euler", "4", "2"),
    ("classes", "3", "1"),
    ("lc", "euler"),
])
def test_bad_parameters_exit_2(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["klc", "euler", "3", "3", "--workers", "0"])
    assert exc.value.code == 2


def test_verify_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "p3r3")
    assert code == 0
    assert out.rstrip().endswith("verify: all checks passed")


def test_cross_check_reports_mismatch():
    def prof(entries):
        return KlcProfile(3, 2, "euler", 9, [KlcEntry(*e) for e in entries])

    a = prof([(0, 8, 8, "brute"), (1, 7, 7, "brute")])
    b = prof([(0, 8, 8, "coset"), (1, 6, 6, "coset")])
    c = prof([(0, 8, 9, "bound"), (1, 8, 9, "bound")])
    assert cross_check({"a": a, "a2": a}) == []
    assert cross_check({"a": a, "b": b}) == ["k=1: a=7 b=6"]
    assert cross_check({"a": a, "c": c}) == ["k=1: exact 7 outside [8, 9]"]
