"""Numerical checks of the two steps that turn the four-term transformation into the 7psi7 transformations: the
limits a -> 1 and a -> q, and the folding of the resulting unilateral series into a bilateral one."""

from __future__ import annotations

import dataclasses
import logging

from fractions import Fraction
from typing import Any, Optional, Union

import mpmath

from qseries.qcore.context import EvalContext
from qseries.qcore.exceptions import DomainError
from qseries.qcore.scalars import Scalar, magnitude, radius, to_scalar
from qseries.series import SeriesSpec, Weight, evaluate, partial_sum, weighted_sum

from . import get
from .base import SideValues


FOUR_TERM = 'four-term'
THEOREMS = ('thm-a', 'thm-b')

logger = logging.getLogger(__name__)


@dataclasses.dataclass
class LimitResult:
    epsilon: Fraction
    lhs_difference: mpmath.mpf
    rhs_difference: mpmath.mpf
    radius: mpmath.mpf

    @property
    def residual(self) -> mpmath.mpf:
        return max(self.lhs_difference, self.rhs_difference)


def _check_theorem(theorem_id: str) -> None:
    if theorem_id not in THEOREMS:
        raise DomainError(f'{theorem_id} is not obtained as a limit of the four-term transformation')


def _epsilon(epsilon: Union[Fraction, float, str]) -> Fraction:
    eps = Fraction(str(epsilon)) if isinstance(epsilon, float) else Fraction(epsilon)
    if eps <= 0:
        raise DomainError('limit offset must be positive')

    return eps


def limit_consistency(
    theorem_id: str,
    epsilon: Union[Fraction, float, str],
    params: dict[str, Any],
    ctx: Optional[EvalContext] = None
) -> LimitResult:
    """Evaluates the four-term transformation at a = 1 + epsilon (thm-a) resp. a = q(1 + epsilon) (thm-b), with h
    solved from its own constraint, and compares each side against the same side of the theorem at the same b, ..., g.
    The sides of thm-b correspond to (1 - q) times those of the four-term transformation."""

    _check_theorem(theorem_id)
    eps = _epsilon(epsilon)
    ctx = ctx or EvalContext()

    theorem = get(theorem_id)
    four_term = get(FOUR_TERM)
    assignment = {name: params[name] for name in theorem.FREE}

    q = to_scalar(assignment['q'], ctx.prec)
    a = 1 + eps if theorem_id == 'thm-a' else q * (1 + eps)
    scale = 1 if theorem_id == 'thm-a' else 1 - q

    limit = four_term.eval_sides(four_term.solve({**assignment, 'a': a}, ctx.prec), ctx)
    exact = theorem.eval_sides(theorem.solve(assignment, ctx.prec), ctx)

    lhs = exact.lhs - scale * limit.lhs
    rhs = exact.rhs - scale * limit.rhs
    logger.debug('%s at epsilon = %s: side differences %s, %s', theorem_id, eps, lhs, rhs)

    return LimitResult(
        epsilon=eps,
        lhs_difference=magnitude(lhs),
        rhs_difference=magnitude(rhs),
        radius=max(radius(lhs), radius(rhs))
    )


def _fold_weight(theorem_id: str, q: Scalar) -> Weight:
    if theorem_id == 'thm-a':
        # 1 for k = 0, then 1 + q^k
        return lambda k, qk: Fraction(1) if k == 0 else 1 + qk

    return lambda k, qk: 1 - q * qk * qk


def _bilateral(theorem_id: str, params: dict[str, Any], prec: int) -> SeriesSpec:
    theorem = get(theorem_id)
    values = theorem.solve(params, prec)

    return theorem.series_specs(values, 'lhs', prec)[0]


def fold_check(theorem_id: str, params: dict[str, Any], ctx: Optional[EvalContext] = None) -> SideValues:
    """Compares the folded unilateral sum against the 7psi7 series it folds into. The result carries the folded sum
    as its left-hand side and the bilateral series as its right-hand side."""

    _check_theorem(theorem_id)
    ctx = ctx or EvalContext()
    start = ctx.terms_used

    spec = _bilateral(theorem_id, params, ctx.prec)
    folded = weighted_sum(spec, _fold_weight(theorem_id, spec.q), weight_bound=2, ctx=ctx)
    bilateral = evaluate(spec, ctx).value

    return SideValues(
        lhs=folded,
        rhs=bilateral,
        lhs_terms=[folded],
        rhs_terms=[bilateral],
        terms_used=ctx.terms_used - start,
        precision=ctx.prec
    )


def fold_partial(
    theorem_id: str,
    params: dict[str, Any],
    terms: int,
    ctx: Optional[EvalContext] = None
) -> tuple[Scalar, Scalar]:
    """The folded sum over 0 <= k <= K and the bilateral sum over the indices its terms regroup, -K <= k <= K for
    thm-a and -K - 1 <= k <= K for thm-b. Both are exact for rational parameters."""

    _check_theorem(theorem_id)
    if terms < 0:
        raise DomainError('negative truncation index')

    ctx = ctx or EvalContext()
    spec = _bilateral(theorem_id, params, ctx.prec)
    kmin = -terms if theorem_id == 'thm-a' else -terms - 1

    folded = partial_sum(spec, 0, terms, weight=_fold_weight(theorem_id, spec.q), ctx=ctx)
    bilateral = partial_sum(spec, kmin, terms, ctx=ctx)

    return folded, bilateral
