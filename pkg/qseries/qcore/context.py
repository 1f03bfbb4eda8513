from __future__ import annotations

import dataclasses

from fractions import Fraction
from typing import Optional, Union

from . import bounds
from .ball import DEFAULT_PREC
from .exceptions import BudgetError


DEFAULT_TOL_BITS = 16
DEFAULT_MAX_TERMS = 100_000


@dataclasses.dataclass
class EvalContext:
    """Working precision, relative tolerance and term budget of one evaluation.

    The context also counts the series terms it has been charged for, which is what reports show as terms used."""

    prec: int = DEFAULT_PREC
    tol: Optional[Union[Fraction, float]] = None
    max_terms: int = DEFAULT_MAX_TERMS
    terms_used: int = 0

    def __post_init__(self) -> None:
        if self.tol is None:
            self.tol = Fraction(1, 2 ** (self.prec - DEFAULT_TOL_BITS))

    @classmethod
    def for_precision(
        cls,
        prec: int,
        tol_bits: int = DEFAULT_TOL_BITS,
        max_terms: int = DEFAULT_MAX_TERMS
    ) -> EvalContext:
        return cls(prec=prec, tol=Fraction(1, 2 ** max(prec - tol_bits, 1)), max_terms=max_terms)

    @property
    def tol_bound(self) -> tuple:
        return bounds.down(self.tol)

    @property
    def margin_bits(self) -> int:
        return self.prec // 2

    def derive(self, **kwargs) -> EvalContext:
        return dataclasses.replace(self, terms_used=0, **kwargs)

    def charge(self, terms: int, budget_used: int = 0) -> None:
        self.terms_used += terms
        if budget_used > self.max_terms:
            raise BudgetError(self.max_terms)
