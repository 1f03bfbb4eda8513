"""The scalar interface shared by the exact and the ball backends.

A scalar is either a `Fraction` (exact mode) or a `Ball`. Python's numeric protocol does the dispatch: mixing a
`Fraction` with a `Ball` yields a `Ball`."""

from __future__ import annotations

import cmath
import dataclasses
import math

from fractions import Fraction
from typing import Optional, Union

import mpmath

from . import bounds
from .ball import DEFAULT_PREC, Ball
from .exceptions import DomainError, PoleError, PrecisionError


Scalar = Union[Fraction, Ball]

Q_POWER_SCAN = 64


def _format_part(value: Fraction) -> str:
    den = value.denominator
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        return f'{value.numerator}/{value.denominator}'

    digits = max(twos, fives)
    scaled = abs(value.numerator) * 10 ** digits // value.denominator
    sign = '-' if value < 0 else ''
    if not digits:
        return f'{sign}{scaled}'

    text = str(scaled).rjust(digits + 1, '0')
    return f'{sign}{text[:-digits]}.{text[-digits:]}'


def _parse_part(text: str) -> Fraction:
    text = text.strip()
    if text in ('', '+'):
        return Fraction(1)
    if text == '-':
        return Fraction(-1)

    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as e:
        raise ValueError(f'Invalid number "{text}"') from e


@dataclasses.dataclass(frozen=True)
class ComplexRational:
    """An exact Gaussian rational, the form in which sampled parameters are stored and reported."""

    real: Fraction
    imag: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, 'real', Fraction(self.real))
        object.__setattr__(self, 'imag', Fraction(self.imag))

    @classmethod
    def parse(cls, text: str) -> ComplexRational:
        s = text.strip().replace(' ', '')
        if not s:
            raise ValueError('Empty number')
        if not s.endswith('i'):
            return cls(_parse_part(s))

        body = s[:-1]
        split = max(body.rfind('+', 1), body.rfind('-', 1))
        # An exponent sign ("1e-3") is not a split point
        while split > 0 and body[split - 1] in 'eE':
            split = max(body.rfind('+', 1, split), body.rfind('-', 1, split))
        if split > 0:
            return cls(_parse_part(body[:split]), _parse_part(body[split:]))

        return cls(Fraction(0), _parse_part(body))

    def is_real(self) -> bool:
        return self.imag == 0

    def is_zero(self) -> bool:
        return self.real == 0 and self.imag == 0

    def to_scalar(self, prec: int = DEFAULT_PREC) -> Scalar:
        if self.is_real():
            return self.real

        return Ball.from_parts(self.real, self.imag, prec)

    def __complex__(self) -> complex:
        return complex(float(self.real), float(self.imag))

    def __str__(self) -> str:
        if self.imag == 0:
            return _format_part(self.real)

        imag = _format_part(self.imag)
        if self.real == 0:
            return f'{imag}i'
        if self.imag > 0:
            imag = f'+{imag}'

        return f'{_format_part(self.real)}{imag}i'


def is_exact(x: Scalar) -> bool:
    return isinstance(x, (int, Fraction))


def all_exact(*values: Scalar) -> bool:
    return all(isinstance(v, (int, Fraction)) for v in values)


def to_ball(x: Union[Scalar, int, ComplexRational], prec: int = DEFAULT_PREC) -> Ball:
    if isinstance(x, Ball):
        return x if x.prec == prec else x.with_prec(prec)
    if isinstance(x, ComplexRational):
        return Ball.from_parts(x.real, x.imag, prec)

    return Ball.from_rational(x, prec)


def to_scalar(x: Union[Scalar, int, float, complex, str, ComplexRational], prec: int = DEFAULT_PREC) -> Scalar:
    if isinstance(x, bool):
        x = int(x)
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        x = ComplexRational.parse(x)
    if isinstance(x, ComplexRational):
        return x.to_scalar(prec)
    if isinstance(x, Ball):
        return x

    return Ball.from_number(x, prec)


def unify(values: list[Scalar], prec: int) -> list[Scalar]:
    """Returns the values unchanged if they are all exact, otherwise all of them as balls at `prec` bits."""

    if all_exact(*values):
        return [Fraction(v) for v in values]

    return [to_ball(v, prec) for v in values]


def abs_upper(x: Scalar) -> tuple:
    if isinstance(x, Ball):
        return x.abs_upper()

    return bounds.up(abs(Fraction(x)))


def abs_lower(x: Scalar) -> tuple:
    if isinstance(x, Ball):
        return x.abs_lower()

    return bounds.down(abs(Fraction(x)))


def is_zero(x: Scalar) -> bool:
    """Tells if `x` is exactly zero."""

    if isinstance(x, Ball):
        return x.is_exact_zero()

    return x == 0


def is_one(x: Scalar) -> bool:
    if isinstance(x, Ball):
        return x.is_exact() and x.to_complex() == 1

    return x == 1


def magnitude(x: Scalar) -> mpmath.mpf:
    if isinstance(x, Ball):
        return abs(x.mid)

    x = abs(Fraction(x))
    return mpmath.mpf(x.numerator) / x.denominator


def radius(x: Scalar) -> mpmath.mpf:
    if isinstance(x, Ball):
        return x.rad

    return mpmath.mpf(0)


def to_complex(x: Scalar) -> complex:
    if isinstance(x, Ball):
        return x.to_complex()

    return complex(float(x))


def format_scalar(x: Scalar, digits: int = 20) -> str:
    if isinstance(x, Ball):
        return x.format(digits)

    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)

    return mpmath.nstr(mpmath.mpf(x.numerator) / x.denominator, digits)


def power(x: Scalar, n: int) -> Scalar:
    if n < 0 and is_zero(x):
        raise DomainError('zero raised to a negative power')

    if is_exact(x):
        return Fraction(x) ** n

    return x ** n


def sqrt(x: Scalar, prec: int = DEFAULT_PREC) -> Scalar:
    """Principal square root; exact when `x` is the square of a rational."""

    if is_exact(x):
        x = Fraction(x)
        if x == 0:
            raise DomainError('square root of zero')
        if x > 0:
            num = math.isqrt(x.numerator)
            den = math.isqrt(x.denominator)
            if num * num == x.numerator and den * den == x.denominator:
                return Fraction(num, den)

        return to_ball(x, prec).sqrt()

    return x.sqrt()


def check_denominator(
    factor: Scalar,
    what: str,
    index: Optional[int] = None,
    margin_bits: Optional[int] = None
) -> None:
    """Raises `PoleError` for an exactly vanishing factor, and `PrecisionError` for a ball factor that cannot be
    certified to stay away from zero by the singularity margin 2^(-P/2)."""

    if isinstance(factor, Ball):
        if margin_bits is None:
            margin_bits = factor.prec // 2
        if bounds.lt(factor.abs_lower(), bounds.power_of_two(-margin_bits)):
            if factor.contains_zero() and factor.is_exact():
                raise PoleError(what, index)

            raise PrecisionError(f'nonzero factor 1 - {what} q^{index}' if index is not None else what, factor.prec)

    elif factor == 0:
        raise PoleError(what, index)


def _log_abs(x: Scalar) -> Optional[float]:
    if isinstance(x, Ball):
        c = abs(x.to_complex())
        return math.log(c) if c > 0 else None

    x = Fraction(x)
    if x == 0:
        return None

    return math.log(abs(x.numerator)) - math.log(x.denominator)


def q_power_exponent(x: Scalar, q: Scalar, prec: int = DEFAULT_PREC, scan: int = Q_POWER_SCAN) -> Optional[int]:
    """Returns `m` with `x == q^m`, `|m| <= scan`, or `None`.

    Exact scalars must match exactly. Otherwise a match means `|x - q^m| <= 2^(-P/2) |q^m|`."""

    lx = _log_abs(x)
    lq = _log_abs(q)
    if lx is None or lq is None or lq == 0:
        return None

    estimate = lx / lq
    candidate = round(estimate)
    if abs(candidate) > scan or abs(estimate - candidate) > 1e-3 * max(1, abs(candidate)):
        return None

    if all_exact(x, q):
        x, q = Fraction(x), Fraction(q)
        for m in (candidate, candidate - 1, candidate + 1):
            if abs(m) <= scan and q ** m == x:
                return m

        return None

    if not isinstance(x, Ball) and not isinstance(q, Ball):
        return None

    # Phase must agree too; the cheap float test filters the obvious mismatches
    xc, qc = to_complex(x), to_complex(q)
    if abs(cmath.exp(candidate * cmath.log(qc)) - xc) > 1e-6 * abs(xc):
        return None

    qm = power(to_ball(q, prec), candidate)
    diff = to_ball(x, prec) - qm
    limit = bounds.mul_up(qm.abs_upper(), bounds.power_of_two(-(prec // 2)))
    if bounds.le(diff.abs_upper(), limit):
        return candidate

    return None


def require_unit_disk(q: Scalar) -> None:
    if not bounds.lt(abs_upper(q), bounds.ONE):
        raise DomainError('|q| < 1 cannot be certified')
