from __future__ import annotations

from fractions import Fraction
from typing import Any, Optional, Union

from qseries.qcore.context import EvalContext

from .base import ADMISSIBILITY_MARGIN, IDENTITIES, Admissibility, Identity, SideValues
from .exceptions import UnknownIdentity, UnknownSymbol


IdentityLike = Union[str, type[Identity]]


def catalog() -> list[type[Identity]]:
    """All identities, in their stable catalog order."""

    return list(IDENTITIES.values())


def ids() -> list[str]:
    return list(IDENTITIES)


def get(identity: IdentityLike) -> type[Identity]:
    if not isinstance(identity, str):
        return identity

    try:
        return IDENTITIES[identity]
    except KeyError:
        raise UnknownIdentity(identity) from None


def solve_params(identity: IdentityLike, assignment: dict[str, Any], prec: int = 128) -> dict[str, Any]:
    return get(identity).solve(assignment, prec)


def admissible(
    identity: IdentityLike,
    params: dict[str, Any],
    margin: Fraction = ADMISSIBILITY_MARGIN,
    ratio_limit: Optional[float] = None
) -> Admissibility:
    return get(identity).admissible(params, margin, ratio_limit)


def eval_sides(identity: IdentityLike, params: dict[str, Any], ctx: Optional[EvalContext] = None) -> SideValues:
    return get(identity).eval_sides(params, ctx or EvalContext())


def corrupt(identity: IdentityLike, symbol: str = 'b', factor: Fraction = Fraction(1001, 1000)) -> type[Identity]:
    """A copy of `identity` whose right-hand side (or, for identities stating that a sum vanishes, whose last term)
    sees `symbol` multiplied by `factor`."""

    identity = get(identity)
    if symbol not in identity.symbols():
        raise UnknownSymbol(symbol, 0)

    return type(f'Corrupted{identity.__name__}', (identity,), {'CORRUPTION': (symbol, Fraction(factor))})


# Registration order is catalog order
from . import bailey, bilateral, theorems, corollaries, equivalents
