"""Index substitutions on bilateral series with r = s.

Both maps return a spec whose value equals the input's value: k -> -k gives back a series of the same shape, and
k -> -k - 1 does too once the constant brought out by the shift is carried in the scale."""

from fractions import Fraction

from qseries.qcore.exceptions import DomainError
from qseries.qcore.scalars import Scalar, check_denominator, format_scalar, is_zero

from .spec import Kind, SeriesSpec


def _check(spec: SeriesSpec) -> None:
    if spec.kind != Kind.BILATERAL:
        raise DomainError('reindexing needs a bilateral series')
    if spec.r != spec.s:
        raise DomainError(f'reindexing needs r = s, got r = {spec.r}, s = {spec.s}')
    if any(is_zero(v) for v in (*spec.numer, *spec.denom, spec.z)):
        raise DomainError('zero parameter in a reindexed series')


def _reflected_argument(spec: SeriesSpec) -> Scalar:
    num = Fraction(1)
    for b in spec.denom:
        num = num * b

    den = spec.z
    for a in spec.numer:
        den = den * a

    return num / den


def reflect_params(spec: SeriesSpec) -> SeriesSpec:
    """k -> -k: numerators q/b_j, denominators q/a_i, argument b_1...b_s / (a_1...a_r z)."""

    _check(spec)
    q = spec.q

    return SeriesSpec(
        kind=Kind.BILATERAL,
        numer=tuple(q / b for b in spec.denom),
        denom=tuple(q / a for a in spec.numer),
        q=q,
        z=_reflected_argument(spec),
        scale=spec.scale
    )


def shift_reflect_params(spec: SeriesSpec) -> SeriesSpec:
    """k -> -k - 1: numerators q^2/b_j, denominators q^2/a_i, argument w = b_1...b_s / (a_1...a_r z), and the scale
    multiplied by w (1 - q/b_1)...(1 - q/b_s) / ((1 - q/a_1)...(1 - q/a_r))."""

    _check(spec)
    q = spec.q
    q2 = q * q
    w = _reflected_argument(spec)

    factor = w
    for b in spec.denom:
        factor = factor * (1 - q / b)
    for a in spec.numer:
        d = 1 - q / a
        check_denominator(d, format_scalar(a, 8), -1)
        factor = factor / d

    return SeriesSpec(
        kind=Kind.BILATERAL,
        numer=tuple(q2 / b for b in spec.denom),
        denom=tuple(q2 / a for a in spec.numer),
        q=q,
        z=w,
        scale=spec.scale * factor
    )
