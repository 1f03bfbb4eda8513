"""Reductions and specializations between catalog identities.

A chain maps the parameters of its target identity (plus a free pairing parameter `x` for reductions that cancel a
parameter pair) onto the parameters of its source identity. Checking a chain evaluates both identities at the
corresponding points; for reductions the bilateral series of both are the same series and must agree as well."""

from __future__ import annotations

import dataclasses
import enum
import logging

from typing import Any, Optional, Union

from qseries.qcore.context import EvalContext
from qseries.qcore.scalars import Scalar, is_exact, to_scalar

from . import formulas, get
from .base import Environment, SideValues


PAIRING_SYMBOL = 'x'
SPECIALIZATION_N = 8

logger = logging.getLogger(__name__)


class ChainKind(str, enum.Enum):
    REDUCTION = 'reduction'
    SPECIALIZATION = 'specialization'


@dataclasses.dataclass(frozen=True)
class Chain:
    source: str
    target: str
    kind: ChainKind
    substitution: tuple[tuple[str, str], ...]
    n: Optional[int] = None

    @property
    def name(self) -> str:
        return f'{self.source}=>{self.target}'

    def uses_pairing(self) -> bool:
        return any(PAIRING_SYMBOL in formulas.parse(f).symbols for _, f in self.substitution)


def _reduction(source: str, target: str, **substitution: str) -> Chain:
    return Chain(source, target, ChainKind.REDUCTION, tuple(substitution.items()))


def _specialization(source: str, target: str, **substitution: str) -> Chain:
    return Chain(source, target, ChainKind.SPECIALIZATION, tuple(substitution.items()), n=SPECIALIZATION_N)


_PAIRED_1 = dict(b='b', c='q/x', d='x', e='c', f='d')
_PAIRED_2 = dict(b='b', c='q^2/x', d='x', e='c', f='d')
_THEOREM_PAIRED_1 = dict(b='b', c='q/x', d='x', e='e', f='f', g='c')
_THEOREM_PAIRED_2 = dict(b='b', c='q^2/x', d='x', e='e', f='f', g='c')
_SPECIALIZED_1 = dict(b='q^(n+2)/(b*c*d*e*f)', c='c', d='d', e='b', f='f', g='e')
_SPECIALIZED_2 = dict(b='q^(n+5)/(b*c*d*e*f)', c='c', d='d', e='b', f='f', g='e')

CHAINS: list[Chain] = [
    _reduction('corl-a', 'p33-a', **_PAIRED_1),
    _reduction('corl-b', 'p55-a', b='b', c='c', d='d', e='q^(n+1)/(b*c*d)'),
    _reduction('corl-c', 'p33-b', **_PAIRED_2),
    _reduction('corl-d', 'p55-b', b='b', c='c', d='d', e='q^(n+3)/(b*c*d)'),
    _reduction('corl-e', 'p33-c', **_PAIRED_1),
    _reduction('corl-f', 'p55-c', b='b', c='c', d='d', e='q^(n+1)/(b*c*d)'),
    _reduction('corl-g', 'p33-d', **_PAIRED_2),
    _reduction('corl-h', 'p55-d', b='b', c='c', d='d', e='q^(n+3)/(b*c*d)'),
    _reduction('thm-a', 'corl-b', **_THEOREM_PAIRED_1),
    _reduction('thm-b', 'corl-d', **_THEOREM_PAIRED_2),
    _reduction('prop-a', 'corl-f', **_THEOREM_PAIRED_1),
    _reduction('prop-b', 'corl-h', **_THEOREM_PAIRED_2),
    _specialization('thm-a', 'corl-a', **_SPECIALIZED_1),
    _specialization('thm-b', 'corl-c', **_SPECIALIZED_2),
    _specialization('prop-a', 'corl-e', **_SPECIALIZED_1),
    _specialization('prop-b', 'corl-g', **_SPECIALIZED_2),
]


def find(source: str, target: str) -> Chain:
    for chain in CHAINS:
        if chain.source == source and chain.target == target:
            return chain

    raise KeyError(f'{source}=>{target}')


@dataclasses.dataclass
class ChainCheck:
    chain: Chain
    source: SideValues
    target: SideValues
    series_agree: Optional[bool]

    def certify(self, tol_rel: Any) -> Optional[bool]:
        """`True` when both identities and, for reductions, the shared bilateral series certifiably agree; `False`
        on a certified disagreement; `None` otherwise."""

        results = [self.source.certify(tol_rel), self.target.certify(tol_rel)]
        if self.series_agree is not None:
            results.append(self.series_agree)
        if False in results:
            return False
        if None in results:
            return None

        return True


def _agree(x: Scalar, y: Scalar) -> bool:
    d = x - y
    return d == 0 if is_exact(d) else d.contains_zero()


def source_params(
    chain: Chain,
    target_values: dict[str, Any],
    x: Optional[Union[Scalar, str]] = None,
    prec: int = 128
) -> dict[str, Any]:
    """The source identity's free parameters at the point corresponding to the (solved) target parameters."""

    values = dict(target_values)
    if chain.n is not None:
        values[formulas.N_SYMBOL] = chain.n
    if chain.uses_pairing():
        if x is None:
            raise ValueError(f'{chain.name} needs a value for {PAIRING_SYMBOL}')
        values[PAIRING_SYMBOL] = to_scalar(x, prec)

    env = Environment(values, EvalContext(prec=prec))
    assignment = {'q': values['q']}
    for symbol, formula in chain.substitution:
        assignment[symbol] = env.monomial(formulas.parse(formula))

    return assignment


def check(
    chain: Chain,
    target_params: dict[str, Any],
    x: Optional[Union[Scalar, str]] = None,
    ctx: Optional[EvalContext] = None
) -> ChainCheck:
    ctx = ctx or EvalContext()
    source = get(chain.source)
    target = get(chain.target)

    target_values = target.solve(target_params, ctx.prec)
    source_values = source.solve(source_params(chain, target_values, x, ctx.prec), ctx.prec)

    source_sides = source.eval_sides(source_values, ctx)
    target_sides = target.eval_sides(target_values, ctx)

    series_agree = None
    if chain.kind == ChainKind.REDUCTION:
        series_agree = _agree(source_sides.lhs_terms[0], target_sides.lhs_terms[0])

    logger.debug('%s: series agree = %s', chain.name, series_agree)

    return ChainCheck(chain=chain, source=source_sides, target=target_sides, series_agree=series_agree)
