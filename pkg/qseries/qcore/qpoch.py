"""q-shifted factorials of finite (any integer) and infinite order, and their bracket ratios."""

from __future__ import annotations

import dataclasses
import functools
import logging
import math

from fractions import Fraction
from typing import Optional, Sequence, Union

from . import bounds
from .ball import DEFAULT_PREC, Ball
from .context import EvalContext
from .exceptions import BudgetError, DomainError, PoleError
from .scalars import (
    Scalar,
    all_exact,
    check_denominator,
    is_zero,
    power,
    q_power_exponent,
    require_unit_disk,
    to_ball,
    unify,
)


INFINITY = math.inf
MIN_FACTORS = 16

Order = Union[int, float]

logger = logging.getLogger(__name__)


def _working_prec(ctx: Optional[EvalContext], *values: Scalar) -> int:
    if ctx is not None:
        return ctx.prec

    return max([v.prec for v in values if isinstance(v, Ball)] or [DEFAULT_PREC])


@dataclasses.dataclass(frozen=True)
class QPochSpec:
    x: Scalar
    q: Scalar
    n: Order

    def __post_init__(self) -> None:
        if self.is_infinite():
            require_unit_disk(self.q)
        elif self.n != int(self.n):
            raise DomainError(f'order {self.n} is not an integer')

    def is_infinite(self) -> bool:
        return self.n == INFINITY

    def evaluate(self, ctx: Optional[EvalContext] = None) -> Scalar:
        if self.is_infinite():
            return qpoch_inf(self.x, self.q, ctx=ctx)

        return qpoch(self.x, self.q, int(self.n), ctx=ctx)


def qpoch(x: Scalar, q: Scalar, n: int, ctx: Optional[EvalContext] = None) -> Scalar:
    """(x;q)_n for any integer `n`."""

    if n == 0:
        return Fraction(1)

    x, q = unify([x, q], _working_prec(ctx, x, q))

    if n > 0:
        result = Fraction(1)
        qi = Fraction(1)
        for _ in range(n):
            result = result * (1 - x * qi)
            qi = qi * q

        return result

    if is_zero(q):
        raise DomainError('negative order with q = 0')

    den = Fraction(1)
    qj = power(q, n)
    for j in range(n, 0):
        factor = 1 - x * qj
        check_denominator(factor, str(x), j)
        den = den * factor
        qj = qj * q

    return 1 / den


@functools.lru_cache(maxsize=4096)
def _qpoch_inf_ball(x: Ball, q: Ball, tol: Fraction, max_terms: int) -> tuple[Ball, int]:
    q_up = q.abs_upper()
    x_up = x.abs_upper()
    one_minus_q = bounds.sub_down(bounds.ONE, q_up)
    tol_b = bounds.down(tol)
    half = bounds.power_of_two(-1)

    result = Ball.one(x.prec)
    qk = Ball.one(x.prec)
    t = x_up  # upper bound of |x| |q|^k
    k = 0
    while True:
        result = result * (1 - x * qk)
        qk = qk * q
        t = bounds.mul_up(t, q_up)
        k += 1

        if k >= MIN_FACTORS and bounds.lt(t, half):
            # sum_{j >= k} |log(1 - x q^j)| <= L, and |prod - 1| <= e^L - 1 <= L / (1 - L)
            big_l = bounds.div_up(t, bounds.mul_down(one_minus_q, bounds.sub_down(bounds.ONE, t)))
            if bounds.lt(big_l, bounds.ONE):
                rel = bounds.div_up(big_l, bounds.sub_down(bounds.ONE, big_l))
                if bounds.le(rel, tol_b):
                    return result.inflate(bounds.mul_up(result.abs_upper(), rel)), k

        if k >= max_terms:
            raise BudgetError(max_terms)


def qpoch_inf(
    x: Scalar,
    q: Scalar,
    tol: Optional[Union[Fraction, float]] = None,
    ctx: Optional[EvalContext] = None
) -> Scalar:
    """(x;q)_inf, enclosed in a ball whose radius includes the truncation bound. Exactly 1 for `x = 0` and exactly
    0 when `x = q^(-m)`, `m >= 0`, with exact data."""

    require_unit_disk(q)
    if is_zero(x):
        return Fraction(1)

    if all_exact(x, q):
        m = q_power_exponent(x, q)
        if m is not None and m <= 0:
            return Fraction(0)

    if ctx is None:
        ctx = EvalContext(prec=_working_prec(None, x, q))
    if tol is None:
        tol = ctx.tol

    prec = ctx.prec
    value, terms = _qpoch_inf_ball(to_ball(x, prec), to_ball(q, prec), Fraction(tol), ctx.max_terms)
    ctx.charge(terms)

    return value


def bracket_factor(x: Scalar, q: Scalar, n: Order, ctx: Optional[EvalContext] = None) -> Scalar:
    if n == INFINITY:
        return qpoch_inf(x, q, ctx=ctx)

    return qpoch(x, q, int(n), ctx=ctx)


def qfac_ratio(
    numers: Sequence[Scalar],
    denoms: Sequence[Scalar],
    q: Scalar,
    n: Order,
    ctx: Optional[EvalContext] = None
) -> Scalar:
    """The bracket (a_1, ..., a_r; q)_n / (b_1, ..., b_s; q)_n; `n` may be `INFINITY`.

    A vanishing numerator makes the whole bracket exactly zero."""

    num = Fraction(1)
    for a in numers:
        v = bracket_factor(a, q, n, ctx=ctx)
        if is_zero(v):
            return Fraction(0)

        num = num * v

    den = Fraction(1)
    for b in denoms:
        try:
            v = bracket_factor(b, q, n, ctx=ctx)
            check_denominator(v, str(b))
        except PoleError as e:
            logger.debug('bracket denominator (%s;q)_%s vanishes', b, n)
            raise PoleError(b, e.index) from e

        den = den * v

    return num / den
