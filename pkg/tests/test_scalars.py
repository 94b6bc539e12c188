from fractions import Fraction

import pytest

from meanderq.scalars import FORMAL, Mode, QPoly, parse_q


def test_qpoly_normalizes_trailing_zeros():
    assert QPoly((1, 2, 0, 0)).coeffs == (1, 2)
    assert QPoly(()).coeffs == ()
    assert not QPoly((0,))


def test_qpoly_rejects_floats():
    with pytest.raises(TypeError):
        QPoly((0.5,))


def test_qpoly_arithmetic():
    p = QPoly((1, 2))  # 1 + 2q
    q = QPoly((0, 1))  # q
    assert p + q == QPoly((1, 3))
    assert p - q == QPoly((1, 1))
    assert p * q == QPoly((0, 1, 2))
    assert 3 * p == QPoly((3, 6))
    assert p - p == QPoly.zero()
    assert (p + 1) == QPoly((2, 2))
    assert q**3 == QPoly.q_power(3)


def test_qpoly_equality_with_numbers():
    assert QPoly((5,)) == 5
    assert QPoly(()) == 0
    assert QPoly((Fraction(1, 2),)) == Fraction(1, 2)
    assert QPoly((0, 1)) != 1


def test_qpoly_eval():
    p = QPoly((1, 0, 2))  # 1 + 2q^2
    assert p.at(Fraction(1, 2)) == Fraction(3, 2)
    assert p.at(0) == 1


def test_qpoly_str():
    assert str(QPoly((6, 2))) == "6+2q"
    assert str(QPoly((4, 4, 1))) == "4+4q+q^2"
    assert str(QPoly((-4, 8, 0, -4))) == "-4+8q-4q^3"
    assert str(QPoly(())) == "0"
    assert str(QPoly((0, 1))) == "q"


def test_qpoly_coeff_strings():
    assert QPoly((1, Fraction(3, 2))).coeff_strings() == ["1", "3/2"]


def test_mode_validation():
    assert FORMAL.is_formal and FORMAL.is_exact
    assert Mode(Fraction(1, 2)).is_exact
    assert not Mode(0.5).is_exact
    with pytest.raises(ValueError):
        Mode(1.0)
    with pytest.raises(ValueError):
        Mode(Fraction(3, 2))


def test_mode_q_power():
    assert FORMAL.q_power(2) == QPoly((0, 0, 1))
    assert Mode(Fraction(1, 2)).q_power(3) == Fraction(1, 8)
    assert Mode(0.5).q_power(2) == 0.25
    assert Mode(Fraction(0)).q_power(0) == 1
    assert Mode(Fraction(0)).q_power(4) == 0


def test_mode_equality_distinguishes_rings():
    assert Mode(Fraction(1, 2)) != Mode(0.5)
    assert Mode(Fraction(0)) != Mode(0.0)
    assert Mode(Fraction(1, 2)) == Mode(Fraction(1, 2))
    assert FORMAL == Mode(None)


def test_parse_q():
    assert parse_q("") is FORMAL or parse_q("").is_formal
    assert parse_q("1/2") == Mode(Fraction(1, 2))
    assert parse_q("0") == Mode(Fraction(0))
    assert parse_q("0.5") == Mode(0.5)
    assert not parse_q("0.5").is_exact
