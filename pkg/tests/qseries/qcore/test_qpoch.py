import random

from fractions import Fraction

import pytest

from qseries.qcore import (
    INFINITY,
    Ball,
    DomainError,
    EvalContext,
    PoleError,
    QPochSpec,
    qfac_ratio,
    qpoch,
    qpoch_inf,
)


NOMES = (Fraction(1, 2), Fraction(2, 3), Fraction(3, 5), Fraction(-1, 3))


def _random_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(1, 12), rng.randint(1, 12)) * rng.choice((1, -1))


def _qpoch_or_none(x: Fraction, q: Fraction, n: int):
    try:
        return qpoch(x, q, n)

    except PoleError:
        return None


def test_qpoch_zero_order(half):
    assert qpoch(Fraction(3, 7), half, 0) == 1
    assert qpoch(Ball.from_parts(Fraction(1, 3), Fraction(1, 5)), half, 0) == 1


def test_qpoch_positive_order(half):
    assert qpoch(half, half, 2) == Fraction(3, 8)


def test_qpoch_negative_order(half):
    assert qpoch(Fraction(1, 3), half, -1) == 3


def test_qpoch_negative_order_pole(half):
    with pytest.raises(PoleError):
        qpoch(half, half, -1)


def test_qpoch_shift_law():
    rng = random.Random(0)
    for _ in range(1000):
        x = _random_rational(rng)
        q = rng.choice(NOMES)
        n = rng.randint(-6, 6)

        current = _qpoch_or_none(x, q, n)
        if current is None:
            continue

        assert qpoch(x, q, n + 1) == current * (1 - x * q ** n)


def test_qpoch_reciprocal_law():
    rng = random.Random(1)
    for _ in range(1000):
        x = _random_rational(rng)
        q = rng.choice(NOMES)
        n = rng.randint(1, 6)

        shifted = qpoch(x * q ** -n, q, n)
        if shifted == 0:
            with pytest.raises(PoleError):
                qpoch(x, q, -n)
        else:
            assert qpoch(x, q, -n) == 1 / shifted


def test_qpoch_ball_encloses_exact(half):
    x = Fraction(2, 7)
    ball = qpoch(Ball.from_rational(x, 64), half, 5)
    assert isinstance(ball, Ball)
    assert ball.contains(qpoch(x, half, 5))


def test_qpoch_inf_zero(half):
    assert qpoch_inf(0, half) == 1


def test_qpoch_inf_lattice_zero(half):
    assert qpoch_inf(Fraction(4), half) == 0
    assert qpoch_inf(Fraction(1), half) == 0


def test_qpoch_inf_partial_product(half):
    partial = Fraction(1)
    for k in range(300):
        partial *= 1 - Fraction(1, 2 ** (k + 1))

    value = qpoch_inf(half, half, tol=Fraction(1, 10 ** 30))
    assert isinstance(value, Ball)
    assert value.contains(partial)
    assert value.rad < 1e-30


def test_qpoch_inf_telescoping(half):
    x = Fraction(1, 3)
    n = 4
    ctx = EvalContext(prec=128)

    whole = qpoch_inf(x, half, ctx=ctx)
    split = qpoch(x, half, n) * qpoch_inf(x * half ** n, half, ctx=ctx)
    assert whole.overlaps(split)


def test_qpoch_inf_unit_disk():
    with pytest.raises(DomainError):
        qpoch_inf(Fraction(1, 3), Fraction(1))

    with pytest.raises(DomainError):
        qpoch_inf(Fraction(1, 3), Fraction(-3, 2))


def test_qpoch_inf_charges_context(half):
    ctx = EvalContext(prec=96)
    qpoch_inf(Fraction(5, 11), half, ctx=ctx)
    assert ctx.terms_used >= 16


def test_qfac_ratio_exact(half):
    assert qfac_ratio([half], [Fraction(1, 3)], half, 2) == Fraction(27, 40)


def test_qfac_ratio_trivial(half):
    a = Fraction(1, 3)
    assert qfac_ratio([a], [a], half, 3) == 1
    assert qfac_ratio([], [], half, INFINITY) == 1


def test_qfac_ratio_vanishing_numerator(half):
    assert qfac_ratio([Fraction(1)], [Fraction(1, 3)], half, 2) == 0


def test_qfac_ratio_pole(half):
    with pytest.raises(PoleError) as e:
        qfac_ratio([Fraction(1, 3)], [Fraction(1)], half, 2)

    assert e.value.param == '1'


def test_qfac_ratio_infinite(half):
    value = qfac_ratio([Fraction(1, 3)], [Fraction(1, 5)], half, INFINITY)
    expected = qpoch_inf(Fraction(1, 3), half) / qpoch_inf(Fraction(1, 5), half)
    assert value.overlaps(expected)


def test_qpoch_spec(half):
    assert QPochSpec(half, half, 2).evaluate() == Fraction(3, 8)
    assert QPochSpec(0, half, INFINITY).evaluate() == 1

    with pytest.raises(DomainError):
        QPochSpec(half, half, 1.5)

    with pytest.raises(DomainError):
        QPochSpec(half, Fraction(2), INFINITY)
