import random

from fractions import Fraction

import pytest

from hypothesis import given
from hypothesis import strategies as st

from qseries.qcore import Ball, ComplexRational, DomainError, PrecisionError, sqrt, to_scalar
from qseries.qcore.scalars import power, q_power_exponent


def test_from_rational_exact():
    b = Ball.from_rational(Fraction(3, 8), 64)
    assert b.is_exact()
    assert b.contains(Fraction(3, 8))


def test_from_rational_rounded():
    b = Ball.from_rational(Fraction(1, 3), 64)
    assert not b.is_exact()
    assert b.contains(Fraction(1, 3))
    assert not b.contains(Fraction(1, 3) + Fraction(1, 2 ** 40))


def test_radius_shrinks_with_precision():
    low = Ball.from_rational(Fraction(1, 3), 64)
    high = Ball.from_rational(Fraction(1, 3), 128)
    assert high.rad < low.rad
    assert low.overlaps(high)


def test_arithmetic_encloses():
    third = Ball.from_rational(Fraction(1, 3), 64)
    assert (third * 3).contains(1)
    assert (third + third + third).contains(1)
    assert (1 - third).contains(Fraction(2, 3))
    assert (1 / third).contains(3)


def test_complex_parts():
    z = Ball.from_parts(Fraction(1, 2), Fraction(-1, 4), 64)
    assert z.is_exact()
    assert z.to_complex() == complex(0.5, -0.25)
    assert (z * z.conjugate()).contains(Fraction(5, 16))


def test_with_prec_keeps_enclosure():
    b = Ball.from_rational(Fraction(1, 7), 128).with_prec(32)
    assert b.prec == 32
    assert b.contains(Fraction(1, 7))


def test_division_by_zero_ball():
    with pytest.raises(PrecisionError):
        Ball.one(64) / Ball.zero(64)


def test_sqrt():
    assert Ball.from_rational(4).sqrt().contains(2)
    root = Ball.from_rational(2, 96).sqrt()
    assert (root * root).contains(2)

    with pytest.raises(PrecisionError):
        Ball.zero().sqrt()


def test_scalar_sqrt_exact():
    assert sqrt(Fraction(9, 4)) == Fraction(3, 2)
    assert isinstance(sqrt(Fraction(2)), Ball)

    with pytest.raises(DomainError):
        sqrt(Fraction(0))


def test_q_power_exponent():
    half = Fraction(1, 2)
    assert q_power_exponent(Fraction(1, 8), half) == 3
    assert q_power_exponent(Fraction(8), half) == -3
    assert q_power_exponent(Fraction(1), half) == 0
    assert q_power_exponent(Fraction(3), half) is None
    assert q_power_exponent(Ball.from_rational(Fraction(1, 4), 128), Ball.from_rational(half, 128)) == 2


def test_complex_rational_parse():
    assert ComplexRational.parse('1/2') == ComplexRational(Fraction(1, 2))
    assert ComplexRational.parse('0.5+0.25i') == ComplexRational(Fraction(1, 2), Fraction(1, 4))
    assert ComplexRational.parse('-3i') == ComplexRational(0, -3)
    assert ComplexRational.parse('i') == ComplexRational(0, 1)
    assert ComplexRational.parse('1e-3') == ComplexRational(Fraction(1, 1000))
    assert ComplexRational.parse('1/3-2/7i') == ComplexRational(Fraction(1, 3), Fraction(-2, 7))

    with pytest.raises(ValueError):
        ComplexRational.parse('')

    with pytest.raises(ValueError):
        ComplexRational.parse('abc')


def test_complex_rational_str():
    assert str(ComplexRational(Fraction(1, 1000))) == '0.001'
    assert str(ComplexRational(Fraction(1, 2), Fraction(1, 4))) == '0.5+0.25i'
    assert str(ComplexRational(Fraction(1, 3), Fraction(-2, 7))) == '1/3-2/7i'
    assert str(ComplexRational(0, Fraction(-3))) == '-3i'


@given(st.fractions(), st.fractions())
def test_complex_rational_str_parses_back(real, imag):
    value = ComplexRational(real, imag)
    assert ComplexRational.parse(str(value)) == value


def test_to_scalar():
    assert to_scalar('3/4') == Fraction(3, 4)
    assert to_scalar(2) == Fraction(2)
    z = to_scalar('1/2+1/3i', 64)
    assert isinstance(z, Ball)
    assert z.prec == 64


def _random_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(1, 50), rng.randint(1, 50)) * rng.choice((1, -1))


def _exact(real: Fraction, imag: Fraction) -> Ball:
    return Ball.from_parts(real, imag, 1024)


def test_complex_arithmetic_encloses():
    rng = random.Random(2)
    for _ in range(300):
        a, b, c, d = (_random_rational(rng) for _ in range(4))
        x = Ball.from_parts(a, b, 64)
        y = Ball.from_parts(c, d, 64)
        norm = c * c + d * d

        assert (x + y).contains(_exact(a + c, b + d))
        assert (x - y).contains(_exact(a - c, b - d))
        assert (x * y).contains(_exact(a * c - b * d, a * d + b * c))
        assert (x / y).contains(_exact((a * c + b * d) / norm, (b * c - a * d) / norm))


def test_radius_shrinks_with_precision_random():
    rng = random.Random(3)
    for _ in range(300):
        a, b, c, d = (_random_rational(rng) for _ in range(4))
        low = Ball.from_parts(a, b, 64) * Ball.from_parts(c, d, 64)
        high = Ball.from_parts(a, b, 128) * Ball.from_parts(c, d, 128)

        assert high.rad <= low.rad
        assert low.overlaps(high)


def test_long_complex_product():
    step = Ball.one(128) / Ball.from_parts(Fraction(1, 2), Fraction(-1, 2), 128)  # 1 + i
    product = Ball.one(128)
    real, imag = 1, 0
    for _ in range(235):
        product = product * step
        real, imag = real - imag, real + imag

    assert product.contains(_exact(Fraction(real), Fraction(imag)))
    assert product.rad / abs(product.mid) < 1e-30


def test_power_of_integer_stays_exact():
    assert power(2, -3) == Fraction(1, 8)
    assert isinstance(power(2, -3), Fraction)
    assert power(Fraction(2, 3), 2) == Fraction(4, 9)

    with pytest.raises(DomainError):
        power(0, -1)
