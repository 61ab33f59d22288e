import pytest

from euler_klc.errors import ParameterError
from euler_klc.numtheory import euler_quotient, find_generator
from euler_klc.seqgen import (
    BinarySequence,
    gen_complement,
    gen_euler_classes,
    gen_euler_threshold,
    gen_xzlh,
    parse_bitstring,
    read_bitstring,
    threshold_window,
    weight,
    write_bitstring,
)


def test_p3_r3_ones():
    assert gen_euler_threshold(3, 3).ones() == [2, 4, 5, 10, 17, 22, 23, 25]


@pytest.mark.parametrize("p", [3, 5, 7, 11])
@pytest.mark.parametrize("r", [2, 3])
def test_threshold_and_class_forms_agree(p, r):
    assert gen_euler_threshold(p, r).bits == gen_euler_classes(p, r).bits


@pytest.mark.parametrize("p,r", [(3, 2), (3, 3), (5, 2), (5, 3), (7, 2), (11, 2)])
def test_weights(p, r):
    units = (p - 1) * p ** (r - 1)
    s, c = gen_euler_threshold(p, r), gen_complement(p, r)
    assert weight(s) == (p - 1) * (p ** (r - 1) - 1) // 2
    assert weight(c) == (p - 1) * (p ** (r - 1) + 1) // 2
    assert weight(s) + weight(c) == units


def test_small_weights():
    assert weight(gen_euler_threshold(3, 2)) == 2
    assert weight(gen_euler_threshold(5, 2)) == 8
    assert weight(gen_euler_threshold(5, 3)) == 48
    assert weight(gen_complement(3, 2)) == 4
    assert weight(gen_complement(5, 2)) == 12
    assert weight(BinarySequence.from_bits([0] * 9)) == 0


@pytest.mark.parametrize("p,r", [(3, 2), (5, 2), (3, 3)])
def test_complement_relation(p, r):
    s, c = gen_euler_threshold(p, r).bits, gen_complement(p, r).bits
    for n in range(p**r):
        if n % p:
            assert c[n] == 1 - s[n]
        else:
            assert c[n] == s[n] == 0


def test_complement_p3_is_lowest_classes():
    assert gen_complement(3, 2).ones() == sorted(
        u for u in range(9) if u % 3 and euler_quotient(3, 1, u) in (0, 1)
    )


@pytest.mark.parametrize("p,r", [(3, 2), (3, 3), (5, 2)])
def test_periodic_extension(p, r):
    first = gen_euler_threshold(p, r).bits
    assert threshold_window(p, r, p**r) == first
    assert threshold_window(p, r, 5 * p**r) == first


def test_xzlh_small():
    g = find_generator(3, 2)
    s = gen_xzlh(3, 2, 2, 0, g)
    assert s.period == 9 and s.bits[0] == 1
    units = [n for n in range(9) if n % 3]
    assert sum(s.bits[n] for n in units) == 3
    assert s.bits[3] + s.bits[6] == 1


def test_xzlh_shift_keeps_weight():
    a, b = gen_xzlh(5, 2, 2, 0, 2), gen_xzlh(5, 2, 2, 3, 2)
    assert a.bits != b.bits
    assert weight(a) == weight(b)


def test_xzlh_validation():
    with pytest.raises(ParameterError):
        gen_xzlh(5, 2, 3, 0, 2)
    with pytest.raises(ParameterError):
        gen_xzlh(5, 2, 2, 10, 2)
    with pytest.raises(ParameterError):
        gen_xzlh(5, 2, 2, 0, 4)  # 4 is not primitive


def test_bitstring_roundtrip(tmp_path):
    s = gen_xzlh(5, 3, 4, 7, 2)
    path = tmp_path / "s.txt"
    write_bitstring(s, path)
    text = path.read_text()
    assert text.startswith("# family=xzlh p=5 r=3 f=4 b=7 g=2\n")
    back = read_bitstring(path)
    assert back == s


def test_bitstring_reader_rejects_junk():
    with pytest.raises(ParameterError):
        parse_bitstring("# family=euler\n0102\n")
    with pytest.raises(ParameterError):
        parse_bitstring("# only a comment\n")
    assert parse_bitstring("0110\n").family == "custom"
