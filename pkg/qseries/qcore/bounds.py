"""Directed rounding helpers working on raw `mpmath.libmp` floating point values.

All values here are libmp mpf tuples. The `*_up` helpers never return less than the exact result and the `*_down`
helpers never return more. Error radii and truncation bounds are built exclusively from these."""

from fractions import Fraction
from typing import Any, Union

import mpmath

from mpmath import libmp
from mpmath.libmp import fone, fzero, round_ceiling, round_floor


BOUND_PREC = 32

ZERO = fzero
ONE = fone

RawMpf = tuple
BoundLike = Union[int, Fraction, float, mpmath.mpf, RawMpf]


def _convert(value: BoundLike, rnd: str) -> RawMpf:
    if isinstance(value, tuple):
        return libmp.mpf_pos(value, BOUND_PREC, rnd)
    if isinstance(value, mpmath.mpf):
        return libmp.mpf_pos(value._mpf_, BOUND_PREC, rnd)
    if isinstance(value, bool):
        value = int(value)
    if isinstance(value, int):
        return libmp.from_int(value, BOUND_PREC, rnd)
    if isinstance(value, Fraction):
        return libmp.from_rational(value.numerator, value.denominator, BOUND_PREC, rnd)
    if isinstance(value, float):
        return libmp.mpf_pos(libmp.from_float(value), BOUND_PREC, rnd)

    raise TypeError(f'Cannot bound value of type {type(value).__name__}')


def up(value: BoundLike) -> RawMpf:
    return _convert(value, round_ceiling)


def down(value: BoundLike) -> RawMpf:
    return _convert(value, round_floor)


def add_up(*values: RawMpf) -> RawMpf:
    r = fzero
    for v in values:
        r = libmp.mpf_add(r, v, BOUND_PREC, round_ceiling)

    return r


def sub_up(x: RawMpf, y: RawMpf) -> RawMpf:
    return libmp.mpf_sub(x, y, BOUND_PREC, round_ceiling)


def sub_down(x: RawMpf, y: RawMpf) -> RawMpf:
    return libmp.mpf_sub(x, y, BOUND_PREC, round_floor)


def mul_up(*values: RawMpf) -> RawMpf:
    r = fone
    for v in values:
        r = libmp.mpf_mul(r, v, BOUND_PREC, round_ceiling)

    return r


def mul_down(*values: RawMpf) -> RawMpf:
    r = fone
    for v in values:
        r = libmp.mpf_mul(r, v, BOUND_PREC, round_floor)

    return r


def div_up(x: RawMpf, y: RawMpf) -> RawMpf:
    return libmp.mpf_div(x, y, BOUND_PREC, round_ceiling)


def sqrt_down(x: RawMpf) -> RawMpf:
    return libmp.mpf_sqrt(x, BOUND_PREC, round_floor)


def pow_up(x: RawMpf, n: int) -> RawMpf:
    # Nonnegative base only; every partial product is rounded up, which keeps the result an upper bound
    r = fone
    while n > 0:
        if n & 1:
            r = libmp.mpf_mul(r, x, BOUND_PREC, round_ceiling)
        x = libmp.mpf_mul(x, x, BOUND_PREC, round_ceiling)
        n >>= 1

    return r


def shift(x: RawMpf, n: int) -> RawMpf:
    return libmp.mpf_shift(x, n)


def maximum(*values: RawMpf) -> RawMpf:
    r = values[0]
    for v in values[1:]:
        if libmp.mpf_gt(v, r):
            r = v

    return r


def lt(x: RawMpf, y: RawMpf) -> bool:
    return libmp.mpf_lt(x, y)


def le(x: RawMpf, y: RawMpf) -> bool:
    return libmp.mpf_le(x, y)


def gt(x: RawMpf, y: RawMpf) -> bool:
    return libmp.mpf_gt(x, y)


def is_positive(x: RawMpf) -> bool:
    return libmp.mpf_gt(x, fzero)


def to_mpf(x: RawMpf) -> mpmath.mpf:
    return mpmath.mp.make_mpf(x)


def to_float(x: RawMpf) -> float:
    return libmp.to_float(x)


def power_of_two(exponent: int) -> RawMpf:
    return libmp.mpf_shift(fone, exponent)


def describe(x: Any) -> str:
    return libmp.to_str(x, 6) if isinstance(x, tuple) else str(x)
