import math
import random

from fractions import Fraction

import mpmath
import pytest

from qseries import identities
from qseries.qcore import (
    INFINITY,
    Ball,
    BudgetError,
    DivergenceError,
    DomainError,
    EvalContext,
    PoleError,
    qfac_ratio,
    qpoch,
)
from qseries.series import (
    TermRange,
    bilateral_ratios,
    direct_term,
    evaluate,
    partial_sum,
    phi,
    phi_eval,
    psi,
    psi_eval,
    term_range,
)


def _lhs_spec(identity_id: str, params: dict):
    identity = identities.get(identity_id)
    return identity.series_specs(identity.solve(params), 'lhs')[0]


def test_term_range_unilateral(half):
    spec = phi([Fraction(4), Fraction(1, 3)], [Fraction(1, 5)], half, Fraction(1, 3))
    assert term_range(spec) == TermRange(0, 2)


def test_term_range_generic(half):
    spec = psi([Fraction(3)], [Fraction(1, 3)], half, half)
    assert term_range(spec) == TermRange(-math.inf, math.inf)


def test_term_range_terminating_5psi5(p33_params):
    assert term_range(_lhs_spec('p55-a', {**p33_params, 'n': 2})) == TermRange(-2, 2)
    assert term_range(_lhs_spec('p55-b', {**p33_params, 'n': 3})) == TermRange(-4, 3)


def test_term_range_denominator_power(half):
    spec = psi([Fraction(1, 3)], [Fraction(1, 4)], half, Fraction(1, 5))
    assert term_range(spec) == TermRange(-1, math.inf)


def test_phi_terminating(half):
    z = Fraction(1, 3)
    spec = phi([Fraction(4)], [], half, z)

    value = phi_eval(spec)
    assert value == Fraction(-1, 9)
    assert value == sum(direct_term(spec, k) for k in range(3))
    assert value == qpoch(z * 4, half, 2)


def test_phi_terminating_at_argument_q(half):
    spec = phi([Fraction(4)], [], half, half)
    assert phi_eval(spec) == sum(direct_term(spec, k) for k in range(3))


def test_phi_collapses_on_unit_numerator(half):
    spec = phi([Fraction(1), Fraction(1, 3)], [Fraction(1, 5)], half, Fraction(1, 7))
    result = evaluate(spec)
    assert result.value == 1
    assert result.terms == 1


def test_phi_q_binomial(half):
    a = Fraction(1, 3)
    z = Fraction(1, 5)

    value = phi_eval(phi([a], [], half, z))
    expected = qfac_ratio([a * z], [z], half, INFINITY)
    assert isinstance(value, Ball)
    assert value.overlaps(expected)


def test_psi_with_q_denominator_is_unilateral(half):
    a = Fraction(1, 3)
    z = Fraction(1, 5)

    bilateral = psi_eval(psi([a], [half], half, z))
    unilateral = phi_eval(phi([a], [], half, z))
    assert bilateral.overlaps(unilateral)


def test_psi_ramanujan_sum(half):
    a = Fraction(3)
    b = Fraction(1, 3)
    z = half
    q = half

    result = evaluate(psi([a], [b], q, z), EvalContext(prec=128))
    expected = qfac_ratio([q, b / a, a * z, q / (a * z)], [b, q / a, z, b / (a * z)], q, INFINITY)
    assert result.range == TermRange()
    assert result.value.overlaps(expected)
    assert result.value.rad < 1e-30


def test_psi_complex(half):
    a = Ball.from_parts(Fraction(2), Fraction(1), 128)
    b = Ball.from_parts(Fraction(1, 4), Fraction(-1, 8), 128)
    z = Ball.from_parts(Fraction(0), Fraction(1, 2), 128)
    q = half

    value = psi_eval(psi([a], [b], q, z))
    expected = qfac_ratio([q, b / a, a * z, q / (a * z)], [b, q / a, z, b / (a * z)], q, INFINITY)
    assert value.overlaps(expected)


def test_partial_sum_exact(half):
    spec = psi([Fraction(3)], [Fraction(1, 3)], half, half)
    assert partial_sum(spec, -2, 2) == sum(direct_term(spec, k) for k in range(-2, 3))


def test_wrong_kind(half):
    with pytest.raises(DomainError):
        phi_eval(psi([Fraction(3)], [Fraction(1, 3)], half, half))

    with pytest.raises(DomainError):
        psi_eval(phi([Fraction(3)], [], half, half))


def test_forward_divergence(half):
    with pytest.raises(DivergenceError) as e:
        phi_eval(phi([Fraction(1, 3)], [], half, Fraction(3, 2)))

    assert e.value.side == 'forward'


def test_backward_divergence(half):
    with pytest.raises(DivergenceError) as e:
        psi_eval(psi([Fraction(3)], [Fraction(1, 3)], half, Fraction(1, 10)))

    assert e.value.side == 'backward'


def test_growing_power_divergence(half):
    with pytest.raises(DivergenceError):
        psi_eval(psi([Fraction(3), Fraction(5)], [Fraction(1, 3)], half, Fraction(1, 10)))


def test_budget():
    q = Fraction(9, 10)
    with pytest.raises(BudgetError):
        evaluate(phi([Fraction(1, 3)], [], q, q), EvalContext(prec=64, max_terms=5))


def test_bilateral_ratios_theorems(generic_seven_params):
    forward, backward = bilateral_ratios(_lhs_spec('thm-a', generic_seven_params))
    assert forward == mpmath.mpf(1) / 2
    assert backward == mpmath.mpf(1) / 4

    forward, backward = bilateral_ratios(_lhs_spec('thm-b', generic_seven_params))
    assert forward == mpmath.mpf(1) / 2
    assert backward == mpmath.mpf(1) / 8


def test_bilateral_ratios_unbalanced(half):
    with pytest.raises(DomainError):
        bilateral_ratios(psi([Fraction(3), Fraction(5)], [Fraction(1, 3)], half, half))


NOMES = (Fraction(1, 2), Fraction(2, 3), Fraction(-1, 3))


def _random_argument(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(1, 3), 4) * rng.choice((1, -1))


def _agree(x, y) -> bool:
    if isinstance(x, Ball):
        return x.overlaps(y)
    if isinstance(y, Ball):
        return y.overlaps(x)

    return x == y


def test_bilateral_is_forward_plus_negative_terms():
    rng = random.Random(4)
    tol = Fraction(1, 10 ** 30)
    for _ in range(30):
        q = rng.choice(NOMES)
        m = rng.randint(1, 4)
        a = Fraction(rng.randint(1, 9), rng.randint(1, 9)) * rng.choice((1, -1))
        z = _random_argument(rng)

        bilateral = psi([a], [q ** m], q, z)
        try:
            negative = sum((direct_term(bilateral, k) for k in range(-1, -m, -1)), Fraction(0))
        except PoleError:
            continue

        forward = phi_eval(phi([a, q], [q ** m], q, z), tol=tol)
        assert _agree(psi_eval(bilateral, tol=tol), forward + negative)


def test_truncation_encloses_sum():
    rng = random.Random(5)
    for _ in range(30):
        q = rng.choice(NOMES)
        z = _random_argument(rng)
        spec = phi([q], [], q, z)  # z^k

        previous = None
        for bits in (20, 60, 100):
            value = phi_eval(spec, tol=Fraction(1, 2 ** bits))
            assert value.contains(1 / (1 - z))
            if previous is not None:
                assert value.rad <= previous.rad
                assert previous.overlaps(value)

            previous = value
