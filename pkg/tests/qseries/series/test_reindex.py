import dataclasses

from fractions import Fraction

import pytest

from qseries import identities
from qseries.qcore import DomainError
from qseries.series import evaluate, phi, psi, reflect_params, shift_reflect_params


def _lhs_spec(identity_id: str, params: dict):
    identity = identities.get(identity_id)
    return identity.series_specs(identity.solve(params), 'lhs')[0]


def test_reflect_is_involution(half):
    spec = psi([Fraction(3), Fraction(5)], [Fraction(1, 3), Fraction(2, 7)], half, Fraction(1, 5))
    assert reflect_params(reflect_params(spec)) == spec


def test_reflect_keeps_value(half):
    spec = psi([Fraction(3)], [Fraction(1, 3)], half, half)
    reflected = reflect_params(spec)

    assert reflected.z == Fraction(2, 9)
    assert evaluate(reflected).value.overlaps(evaluate(spec).value)


def test_shift_reflect_keeps_value(half):
    spec = psi([Fraction(3)], [Fraction(1, 3)], half, half)
    shifted = shift_reflect_params(spec)

    assert shifted.numer == (Fraction(3, 4),)
    assert shifted.denom == (Fraction(1, 12),)
    assert shifted.z == Fraction(2, 9)
    assert shifted.scale == Fraction(-2, 15)
    assert evaluate(shifted).value.overlaps(evaluate(spec).value)


def test_reflect_maps_3psi3_arguments(p33_params):
    assert reflect_params(_lhs_spec('p33-a', p33_params)) == _lhs_spec('p33-c', p33_params)


def test_reflect_maps_terminating_5psi5(p33_params):
    params = {**p33_params, 'n': 2}
    assert reflect_params(_lhs_spec('p55-a', params)) == _lhs_spec('p55-c', params)


def test_shift_reflect_maps_3psi3_arguments(p33_params, half):
    shifted = shift_reflect_params(_lhs_spec('p33-b', p33_params))
    assert shifted == dataclasses.replace(_lhs_spec('p33-d', p33_params), scale=-half)


def test_reindex_needs_balanced_bilateral(half):
    with pytest.raises(DomainError):
        reflect_params(phi([Fraction(3)], [], half, half))

    with pytest.raises(DomainError):
        shift_reflect_params(psi([Fraction(3), Fraction(5)], [Fraction(1, 3)], half, half))

    with pytest.raises(DomainError):
        reflect_params(psi([Fraction(0)], [Fraction(1, 3)], half, half))
