"""Complex ball arithmetic on top of mpmath's low level floating point layer.

A ball is a complex midpoint rounded to `prec` bits together with an absolute radius. Midpoints are rounded to
nearest while radii are rounded up, and every operation adds the rounding error of its own midpoint to the radius.
A ball computed from enclosing inputs therefore encloses the exact result."""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Union

import mpmath

from mpmath import libmp
from mpmath.libmp import fone, fzero, round_ceiling, round_floor, round_nearest

from . import bounds
from .exceptions import PrecisionError


DEFAULT_PREC = 128

_ZERO_C = (fzero, fzero)
_ONE_C = (fone, fzero)

Coercible = Union['Ball', int, Fraction]


def _abs_squared(z: tuple) -> tuple:
    re, im = z
    return libmp.mpf_add(libmp.mpf_mul(re, re), libmp.mpf_mul(im, im))  # exact


def _mag_up(z: tuple) -> tuple:
    return libmp.mpf_sqrt(_abs_squared(z), bounds.BOUND_PREC, round_ceiling)


def _mag_down(z: tuple) -> tuple:
    return libmp.mpf_sqrt(_abs_squared(z), bounds.BOUND_PREC, round_floor)


def _rounding_error(z: tuple, prec: int) -> tuple:
    return bounds.shift(_mag_up(z), 2 - prec)


def _round_rational(value: Fraction, prec: int) -> tuple[tuple, bool]:
    mpf = libmp.from_rational(value.numerator, value.denominator, prec, round_nearest)
    p, q = libmp.to_rational(mpf)

    return mpf, Fraction(p, q) == value


class Ball:
    __slots__ = ('_mid', '_rad', '_prec')

    def __init__(self, mid: tuple = _ZERO_C, rad: tuple = fzero, prec: int = DEFAULT_PREC) -> None:
        self._mid: tuple = mid
        self._rad: tuple = rad
        self._prec: int = prec

    @classmethod
    def from_rational(cls, value: Union[int, Fraction], prec: int = DEFAULT_PREC) -> Ball:
        return cls.from_parts(Fraction(value), Fraction(0), prec)

    @classmethod
    def from_parts(cls, real: Fraction, imag: Fraction, prec: int = DEFAULT_PREC) -> Ball:
        re, re_exact = _round_rational(real, prec)
        im, im_exact = _round_rational(imag, prec)
        mid = (re, im)
        rad = fzero if (re_exact and im_exact) else _rounding_error(mid, prec)

        return cls(mid, rad, prec)

    @classmethod
    def from_number(cls, value: Union[Ball, int, Fraction, float, complex, mpmath.mpf, mpmath.mpc],
                    prec: int = DEFAULT_PREC) -> Ball:

        if isinstance(value, Ball):
            return value.with_prec(prec)
        if isinstance(value, (int, Fraction)):
            return cls.from_rational(value, prec)
        if isinstance(value, (float, complex)):
            value = complex(value)
            mid = (libmp.from_float(value.real), libmp.from_float(value.imag))
        elif isinstance(value, mpmath.mpf):
            mid = (value._mpf_, fzero)
        elif isinstance(value, mpmath.mpc):
            mid = value._mpc_
        else:
            raise TypeError(f'Cannot convert {type(value).__name__} to a ball')

        rounded = (libmp.mpf_pos(mid[0], prec, round_nearest), libmp.mpf_pos(mid[1], prec, round_nearest))
        rad = fzero if rounded == mid else _rounding_error(rounded, prec)

        return cls(rounded, rad, prec)

    @classmethod
    def zero(cls, prec: int = DEFAULT_PREC) -> Ball:
        return cls(_ZERO_C, fzero, prec)

    @classmethod
    def one(cls, prec: int = DEFAULT_PREC) -> Ball:
        return cls(_ONE_C, fzero, prec)

    @property
    def prec(self) -> int:
        return self._prec

    @property
    def mid(self) -> mpmath.mpc:
        return mpmath.mp.make_mpc(self._mid)

    @property
    def rad(self) -> mpmath.mpf:
        return mpmath.mp.make_mpf(self._rad)

    @property
    def raw_rad(self) -> tuple:
        return self._rad

    def with_prec(self, prec: int) -> Ball:
        if prec >= self._prec:
            return Ball(self._mid, self._rad, prec)

        re, im = self._mid
        rounded = (libmp.mpf_pos(re, prec, round_nearest), libmp.mpf_pos(im, prec, round_nearest))
        if rounded == self._mid:
            return Ball(rounded, self._rad, prec)

        return Ball(rounded, bounds.add_up(self._rad, _rounding_error(rounded, prec)), prec)

    def inflate(self, extra: tuple) -> Ball:
        return Ball(self._mid, bounds.add_up(self._rad, extra), self._prec)

    def is_exact(self) -> bool:
        return self._rad == fzero

    def is_exact_zero(self) -> bool:
        return self._rad == fzero and self._mid == _ZERO_C

    def abs_upper(self) -> tuple:
        return bounds.add_up(_mag_up(self._mid), self._rad)

    def abs_lower(self) -> tuple:
        low = bounds.sub_down(_mag_down(self._mid), self._rad)
        return low if bounds.is_positive(low) else fzero

    def contains_zero(self) -> bool:
        return not bounds.is_positive(self.abs_lower())

    def contains(self, other: Union[Ball, int, Fraction]) -> bool:
        if not isinstance(other, Ball):
            other = Ball.from_rational(other, self._prec + 64)

        diff = libmp.mpc_sub(self._mid, other._mid)  # exact
        dist = bounds.add_up(_mag_up(diff), other._rad)

        return bounds.le(dist, self._rad)

    def overlaps(self, other: Union[Ball, int, Fraction]) -> bool:
        if not isinstance(other, Ball):
            other = Ball.from_rational(other, self._prec + 64)

        diff = libmp.mpc_sub(self._mid, other._mid)
        dist = _mag_down(diff)

        return bounds.le(dist, bounds.add_up(self._rad, other._rad))

    def _coerce(self, other: Coercible) -> Optional[Ball]:
        if isinstance(other, Ball):
            return other
        if isinstance(other, (int, Fraction)):
            return Ball.from_rational(other, self._prec)

        return None

    def __add__(self, other: Coercible) -> Ball:
        other = self._coerce(other)
        if other is None:
            return NotImplemented

        prec = max(self._prec, other._prec)
        mid = libmp.mpc_add(self._mid, other._mid, prec, round_nearest)
        rad = bounds.add_up(self._rad, other._rad, _rounding_error(mid, prec))

        return Ball(mid, rad, prec)

    __radd__ = __add__

    def __sub__(self, other: Coercible) -> Ball:
        other = self._coerce(other)
        if other is None:
            return NotImplemented

        prec = max(self._prec, other._prec)
        mid = libmp.mpc_sub(self._mid, other._mid, prec, round_nearest)
        rad = bounds.add_up(self._rad, other._rad, _rounding_error(mid, prec))

        return Ball(mid, rad, prec)

    def __rsub__(self, other: Coercible) -> Ball:
        return (-self) + other

    def __neg__(self) -> Ball:
        re, im = self._mid
        return Ball((libmp.mpf_neg(re), libmp.mpf_neg(im)), self._rad, self._prec)

    def __pos__(self) -> Ball:
        return self

    def __mul__(self, other: Coercible) -> Ball:
        other = self._coerce(other)
        if other is None:
            return NotImplemented

        prec = max(self._prec, other._prec)
        mid = libmp.mpc_mul(self._mid, other._mid, prec, round_nearest)
        err = _rounding_error(mid, prec)
        if self._rad == fzero and other._rad == fzero:
            return Ball(mid, err, prec)

        rad = bounds.add_up(
            bounds.mul_up(_mag_up(self._mid), other._rad),
            bounds.mul_up(_mag_up(other._mid), self._rad),
            bounds.mul_up(self._rad, other._rad),
            err
        )

        return Ball(mid, rad, prec)

    __rmul__ = __mul__

    def __truediv__(self, other: Coercible) -> Ball:
        other = self._coerce(other)
        if other is None:
            return NotImplemented

        prec = max(self._prec, other._prec)
        lower = _mag_down(other._mid)
        gap = bounds.sub_down(lower, other._rad)
        if not bounds.is_positive(gap):
            raise PrecisionError('division by a ball containing zero', prec)

        mid = libmp.mpc_div(self._mid, other._mid, prec, round_nearest)
        # |a/b - ma/mb| <= (|mb| ra + |ma| rb) / (|mb| (|mb| - rb))
        num = bounds.add_up(
            bounds.mul_up(_mag_up(other._mid), self._rad),
            bounds.mul_up(_mag_up(self._mid), other._rad)
        )
        den = bounds.mul_down(lower, gap)
        rad = bounds.add_up(bounds.div_up(num, den), _rounding_error(mid, prec))

        return Ball(mid, rad, prec)

    def __rtruediv__(self, other: Coercible) -> Ball:
        other = self._coerce(other)
        if other is None:
            return NotImplemented

        return other / self

    def __pow__(self, n: int) -> Ball:
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return Ball.one(self._prec) / (self ** -n)

        result = Ball.one(self._prec)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base

        return result

    def sqrt(self) -> Ball:
        lower = _mag_down(self._mid)
        gap = bounds.sub_down(lower, self._rad)
        if not bounds.is_positive(gap):
            raise PrecisionError('square root of a ball containing zero', self._prec)

        mid = libmp.mpc_sqrt(self._mid, self._prec, round_nearest)
        err = _rounding_error(mid, self._prec)
        if self._rad == fzero:
            return Ball(mid, err, self._prec)

        # The branch continuous at the midpoint satisfies |sqrt(x) - sqrt(m)| <= |x - m| / sqrt(|m| - r)
        rad = bounds.add_up(bounds.div_up(self._rad, bounds.sqrt_down(gap)), err)

        return Ball(mid, rad, self._prec)

    def conjugate(self) -> Ball:
        re, im = self._mid
        return Ball((re, libmp.mpf_neg(im)), self._rad, self._prec)

    def to_complex(self) -> complex:
        return libmp.mpc_to_complex(self._mid)

    def format(self, digits: int = 20) -> str:
        return mpmath.nstr(self.mid, digits)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Ball):
            return NotImplemented

        return self._mid == other._mid and self._rad == other._rad and self._prec == other._prec

    def __hash__(self) -> int:
        return hash((self._mid, self._rad, self._prec))

    def __str__(self) -> str:
        return f'[{self.format()} +/- {mpmath.nstr(self.rad, 3)}]'

    def __repr__(self) -> str:
        return f'Ball({self})'
