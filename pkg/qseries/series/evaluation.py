"""Series evaluation by multiplicative term recurrences.

Terms are generated from the k = 0 term outwards: t_{k+1} = t_k * ratio_k on the forward side and, for bilateral
series, t_{k-1} = t_k / ratio_{k-1} on the backward side. A nonterminating side is truncated as soon as a geometric
bound on its remainder, valid from the current index on, drops below the tolerance; the bound then goes into the
radius of the result."""

from __future__ import annotations

import dataclasses
import logging
import math

from fractions import Fraction
from typing import Callable, Optional, Union

import mpmath

from qseries.qcore import bounds
from qseries.qcore.ball import DEFAULT_PREC, Ball
from qseries.qcore.context import DEFAULT_MAX_TERMS, EvalContext
from qseries.qcore.exceptions import BudgetError, DivergenceError, DomainError
from qseries.qcore.qpoch import qpoch
from qseries.qcore.scalars import (
    Scalar,
    abs_lower,
    abs_upper,
    check_denominator,
    format_scalar,
    is_zero,
    magnitude,
    power,
    q_power_exponent,
    require_unit_disk,
    to_ball,
)

from .spec import Kind, SeriesSpec, TermRange


RATIO_MARGIN_BITS = 16

Weight = Callable[[int, Scalar], Scalar]

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class SeriesResult:
    value: Scalar
    terms: int
    range: TermRange


def spec_prec(spec: SeriesSpec) -> int:
    return max([v.prec for v in spec.values() if isinstance(v, Ball)] or [DEFAULT_PREC])


def term_range(spec: SeriesSpec, prec: Optional[int] = None) -> TermRange:
    """Index range outside of which all terms vanish.

    A numerator q^(-n), n >= 0, cuts the terms above n. For bilateral series, a denominator q^m, m >= 1, cuts the
    terms at and below -m."""

    if prec is None:
        prec = spec_prec(spec)

    kmax = math.inf
    for a in spec.numer:
        m = q_power_exponent(a, spec.q, prec)
        if m is not None and m <= 0:
            kmax = min(kmax, -m)

    if spec.kind == Kind.UNILATERAL:
        return TermRange(0, kmax)

    kmin = -math.inf
    for b in spec.denom:
        m = q_power_exponent(b, spec.q, prec)
        if m is not None and m >= 1:
            kmin = max(kmin, 1 - m)

    return TermRange(kmin, kmax)


def _product(values: list[Scalar]) -> Scalar:
    result = Fraction(1)
    for v in values:
        result = result * v

    return result


def bilateral_ratios(spec: SeriesSpec) -> tuple[mpmath.mpf, mpmath.mpf]:
    """Ratio test values (|z|, |b_1...b_s / (a_1...a_r z)|) of a bilateral series with r = s."""

    if spec.r != spec.s:
        raise DomainError(f'ratio test needs r = s, got r = {spec.r}, s = {spec.s}')
    if is_zero(spec.z) or any(is_zero(a) for a in spec.numer):
        raise DomainError('zero argument or numerator parameter')

    backward = _product(list(spec.denom)) / (_product(list(spec.numer)) * spec.z)

    return magnitude(spec.z), magnitude(backward)


def _ratio_limit() -> mpmath.mpf:
    return 1 - mpmath.mpf(2) ** -RATIO_MARGIN_BITS


def _check_convergence(spec: SeriesSpec, rng: TermRange) -> None:
    if not rng.upper_finite:
        if spec.exponent < 0:
            raise DivergenceError('forward', f'growing power q^(k^2) with exponent {spec.exponent}')
        if spec.exponent == 0:
            if spec.kind == Kind.UNILATERAL:
                if not bounds.lt(abs_lower(spec.z), bounds.ONE):
                    raise DivergenceError('forward', mpmath.nstr(magnitude(spec.z), 8))
            elif magnitude(spec.z) >= _ratio_limit():
                raise DivergenceError('forward', mpmath.nstr(magnitude(spec.z), 8))

    if spec.kind == Kind.BILATERAL and not rng.lower_finite:
        if spec.r != spec.s:
            raise DomainError('nonterminating bilateral series needs r = s')

        _, backward = bilateral_ratios(spec)
        if backward >= _ratio_limit():
            raise DivergenceError('backward', mpmath.nstr(backward, 8))


def _tail(
    term: Scalar,
    rho: tuple,
    weight_bound: tuple,
    total: Scalar,
    anchor: tuple,
    tol: tuple
) -> Optional[tuple]:
    remainder = bounds.div_up(bounds.mul_up(abs_upper(term), weight_bound), bounds.sub_down(bounds.ONE, rho))
    reference = bounds.maximum(abs_lower(total), anchor)
    limit = bounds.mul_down(tol, reference) if bounds.is_positive(reference) else tol

    return remainder if bounds.le(remainder, limit) else None


def _forward_rho(
    a_up: list[tuple],
    b_up: list[tuple],
    q_up: tuple,
    qk_up: tuple,
    z_up: tuple,
    exponent: int,
    unilateral: bool
) -> Optional[tuple]:
    # Upper bound of |t_{j+1} / t_j| for all j >= k, given qk_up >= |q|^k
    num = z_up
    for a in a_up:
        num = bounds.mul_up(num, bounds.add_up(bounds.ONE, bounds.mul_up(a, qk_up)))
    if exponent:
        num = bounds.mul_up(num, bounds.pow_up(qk_up, exponent))

    den = bounds.ONE
    factors = [bounds.mul_up(b, qk_up) for b in b_up]
    if unilateral:
        factors.append(bounds.mul_up(q_up, qk_up))
    for f in factors:
        f = bounds.sub_down(bounds.ONE, f)
        if not bounds.is_positive(f):
            return None
        den = bounds.mul_down(den, f)

    rho = bounds.div_up(num, den)

    return rho if bounds.lt(rho, bounds.ONE) else None


def _backward_rho(a_low: list[tuple], b_up: list[tuple], qm_up: tuple, z_low: tuple) -> Optional[tuple]:
    # Upper bound of |t_{j-1} / t_j| for all j <= -m, given qm_up >= |q|^m; needs r = s
    num = bounds.ONE
    for b in b_up:
        num = bounds.mul_up(num, bounds.add_up(b, qm_up))

    den = z_low
    for a in a_low:
        f = bounds.sub_down(a, qm_up)
        if not bounds.is_positive(f):
            return None
        den = bounds.mul_down(den, f)

    if not bounds.is_positive(den):
        return None

    rho = bounds.div_up(num, den)

    return rho if bounds.lt(rho, bounds.ONE) else None


def _with_radius(total: Scalar, extra: tuple) -> Ball:
    if not isinstance(total, Ball):
        total = to_ball(total)

    return total.inflate(extra)


def _sum_forward(
    spec: SeriesSpec,
    kmax: Union[int, float],
    ctx: EvalContext,
    tol: tuple,
    weight: Optional[Weight] = None,
    weight_bound: tuple = bounds.ONE,
    anchor: tuple = bounds.ZERO
) -> tuple[Scalar, int]:

    q, z = spec.q, spec.z
    unilateral = spec.kind == Kind.UNILATERAL
    exponent = spec.exponent
    infinite = kmax == math.inf

    if infinite:
        a_up = [abs_upper(a) for a in spec.numer]
        b_up = [abs_upper(b) for b in spec.denom]
        q_up = abs_upper(q)
        z_up = abs_upper(z)
        qk_up = bounds.ONE

    labels = [format_scalar(b, 8) for b in spec.denom]
    term = Fraction(1)
    qk = Fraction(1)
    total = weight(0, qk) if weight else term
    k = 0
    terms = 1

    while k < kmax:
        num = Fraction(1)
        for a in spec.numer:
            num = num * (1 - a * qk)

        den = Fraction(1)
        if unilateral:
            den = 1 - q * qk
            check_denominator(den, 'q', k + 1)
        for b, label in zip(spec.denom, labels):
            factor = 1 - b * qk
            check_denominator(factor, label, k)
            den = den * factor

        ratio = num * z / den
        if exponent:
            ratio = ratio * power(-qk, exponent)

        term = term * ratio
        qk = qk * q
        k += 1

        if infinite:
            qk_up = bounds.mul_up(qk_up, q_up)
            rho = _forward_rho(a_up, b_up, q_up, qk_up, z_up, exponent, unilateral)
            if rho is not None:
                remainder = _tail(term, rho, weight_bound, total, anchor, tol)
                if remainder is not None:
                    logger.debug('forward side truncated at k = %d', k)
                    return _with_radius(total, remainder), terms

        total = total + (weight(k, qk) * term if weight else term)
        terms += 1
        if terms > ctx.max_terms:
            raise BudgetError(ctx.max_terms)

    return total, terms


def _sum_backward(
    spec: SeriesSpec,
    kmin: Union[int, float],
    ctx: EvalContext,
    tol: tuple,
    anchor: tuple = bounds.ZERO
) -> tuple[Scalar, int]:

    q, z = spec.q, spec.z
    exponent = spec.exponent
    infinite = kmin == -math.inf

    if kmin >= 0:
        return Fraction(0), 0
    if is_zero(q) or is_zero(z):
        raise DomainError('q = 0 or z = 0 in the negative index range')
    if infinite:
        if exponent:
            raise DomainError('nonterminating bilateral series needs r = s')

        a_low = [abs_lower(a) for a in spec.numer]
        b_up = [abs_upper(b) for b in spec.denom]
        q_up = abs_upper(q)
        z_low = abs_lower(z)
        qm_up = bounds.ONE

    labels = [format_scalar(a, 8) for a in spec.numer]
    qinv = 1 / q
    qk = Fraction(1)
    term = Fraction(1)
    total = Fraction(0)
    k = 0
    terms = 0

    while k > kmin:
        qk = qk * qinv  # q^(k-1)

        num = Fraction(1)
        for b in spec.denom:
            num = num * (1 - b * qk)

        den = Fraction(1)
        for a, label in zip(spec.numer, labels):
            factor = 1 - a * qk
            check_denominator(factor, label, k - 1)
            den = den * factor

        ratio = num / (den * z)
        if exponent:
            ratio = ratio / power(-qk, exponent)

        term = term * ratio
        k -= 1

        if infinite:
            qm_up = bounds.mul_up(qm_up, q_up)
            rho = _backward_rho(a_low, b_up, qm_up, z_low)
            if rho is not None:
                remainder = _tail(term, rho, bounds.ONE, total, anchor, tol)
                if remainder is not None:
                    logger.debug('backward side truncated at k = %d', k)
                    return _with_radius(total, remainder), terms

        total = total + term
        terms += 1
        if terms > ctx.max_terms:
            raise BudgetError(ctx.max_terms)

    return total, terms


def _prepare(spec: SeriesSpec, ctx: Optional[EvalContext]) -> tuple[SeriesSpec, TermRange, EvalContext]:
    if ctx is None:
        ctx = EvalContext(prec=spec_prec(spec))

    require_unit_disk(spec.q)
    rng = term_range(spec, ctx.prec)
    if not (spec.is_exact() and rng.is_finite()):
        spec = spec.with_prec(ctx.prec)

    return spec, rng, ctx


def evaluate(spec: SeriesSpec, ctx: Optional[EvalContext] = None) -> SeriesResult:
    spec, rng, ctx = _prepare(spec, ctx)
    _check_convergence(spec, rng)

    tol = ctx.tol_bound
    if spec.kind == Kind.UNILATERAL:
        total, terms = _sum_forward(spec, rng.kmax, ctx, tol)
    else:
        half = bounds.shift(tol, -1)
        forward, n1 = _sum_forward(spec, rng.kmax, ctx, half)
        backward, n2 = _sum_backward(spec, rng.kmin, ctx, half, anchor=abs_lower(forward))
        total = forward + backward
        terms = n1 + n2

    ctx.charge(terms)

    return SeriesResult(value=total * spec.scale, terms=terms, range=rng)


def _context(spec: SeriesSpec, tol: Optional[Union[Fraction, float]], max_terms: int) -> EvalContext:
    return EvalContext(prec=spec_prec(spec), tol=tol, max_terms=max_terms)


def phi_eval(
    spec: SeriesSpec,
    tol: Optional[Union[Fraction, float]] = None,
    max_terms: int = DEFAULT_MAX_TERMS,
    ctx: Optional[EvalContext] = None
) -> Scalar:

    if spec.kind != Kind.UNILATERAL:
        raise DomainError('phi_eval needs a unilateral series')

    return evaluate(spec, ctx or _context(spec, tol, max_terms)).value


def psi_eval(
    spec: SeriesSpec,
    tol: Optional[Union[Fraction, float]] = None,
    max_terms: int = DEFAULT_MAX_TERMS,
    ctx: Optional[EvalContext] = None
) -> Scalar:

    if spec.kind != Kind.BILATERAL:
        raise DomainError('psi_eval needs a bilateral series')

    return evaluate(spec, ctx or _context(spec, tol, max_terms)).value


def weighted_sum(
    spec: SeriesSpec,
    weight: Weight,
    weight_bound: Union[int, Fraction] = 2,
    ctx: Optional[EvalContext] = None
) -> Scalar:
    """The one-sided sum w_0 t_0 + w_1 t_1 + ... of the forward terms of `spec`, times its scale.

    `weight(k, q^k)` gives w_k, and `weight_bound` must bound |w_k| for every k."""

    spec, rng, ctx = _prepare(spec, ctx)
    forward = TermRange(0, rng.kmax)
    _check_convergence(spec, forward)

    total, terms = _sum_forward(
        spec, rng.kmax, ctx, ctx.tol_bound,
        weight=weight,
        weight_bound=bounds.up(weight_bound)
    )
    ctx.charge(terms)

    return total * spec.scale


def partial_sum(
    spec: SeriesSpec,
    kmin: int,
    kmax: int,
    weight: Optional[Weight] = None,
    ctx: Optional[EvalContext] = None
) -> Scalar:
    """Sum of the terms with kmin <= k <= kmax (kmin <= 0 <= kmax), times the scale; no tail, exact for exact data.

    The weight, if given, applies to the forward terms only."""

    if ctx is None:
        ctx = EvalContext(prec=spec_prec(spec))
    if not spec.is_exact():
        spec = spec.with_prec(ctx.prec)

    forward, n1 = _sum_forward(spec, kmax, ctx, bounds.ZERO, weight=weight)
    backward, n2 = _sum_backward(spec, kmin, ctx, bounds.ZERO) if spec.kind == Kind.BILATERAL else (0, 0)
    ctx.charge(n1 + n2)

    return (forward + backward) * spec.scale


def direct_term(spec: SeriesSpec, k: int, ctx: Optional[EvalContext] = None) -> Scalar:
    """The k-th term computed straight from its q-shifted factorials, independently of the recurrences."""

    q = spec.q
    value = Fraction(1)
    for a in spec.numer:
        value = value * qpoch(a, q, k, ctx=ctx)
    for b in spec.denom:
        d = qpoch(b, q, k, ctx=ctx)
        check_denominator(d, format_scalar(b, 8), k)
        value = value / d
    if spec.kind == Kind.UNILATERAL:
        value = value / qpoch(q, q, k, ctx=ctx)

    value = value * power(spec.z, k)
    if spec.exponent:
        sign = -1 if k % 2 else 1
        value = value * power(sign * power(q, k * (k - 1) // 2), spec.exponent)

    return value * spec.scale
