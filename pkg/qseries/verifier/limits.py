"""Runs of the limit consistency check over sampled theorem parameters."""

from __future__ import annotations

import dataclasses
import logging

from fractions import Fraction
from typing import Optional, Union

from qseries.identities.proofs import limit_consistency
from qseries.qcore.exceptions import EvaluationError
from qseries.qcore.scalars import ComplexRational
from qseries.typing import GenericJSONDict

from .report import format_error
from .sampling import SampleSpec, sample


logger = logging.getLogger(__name__)


@dataclasses.dataclass
class LimitRow:
    theorem: str
    sample_index: int
    epsilon: str
    residual: Optional[str]
    radius: Optional[str]
    decreasing: Optional[bool]
    reason: Optional[str] = None

    def to_json(self) -> GenericJSONDict:
        return dataclasses.asdict(self)


def parse_epsilons(text: str) -> list[Fraction]:
    """Parses a comma separated list like `1e-2,1e-3`, largest offset first."""

    epsilons = sorted((Fraction(e.strip()) for e in text.split(',') if e.strip()), reverse=True)
    if not epsilons:
        raise ValueError('no limit offsets given')

    return epsilons


def limit_rows(theorem_id: str, epsilons: list[Union[Fraction, str]], spec: SampleSpec) -> list[LimitRow]:
    """One row per sample and offset. `decreasing` tells whether the residual dropped below the one of the previous,
    larger offset on the same sample."""

    epsilons = sorted((Fraction(e) for e in epsilons), reverse=True)
    ctx = spec.context(spec.precisions()[-1])
    rows = []

    for s in sample(theorem_id, spec):
        previous = None
        for eps in epsilons:
            row = LimitRow(theorem_id, s.index, str(ComplexRational(eps)), None, None, None)
            try:
                result = limit_consistency(theorem_id, eps, s.params, ctx.derive())
            except EvaluationError as e:
                logger.debug('%s sample %d at epsilon %s: %s', theorem_id, s.index, eps, e)
                row.reason = e.to_json()['reason']
                previous = None
                rows.append(row)
                continue

            row.residual = format_error(result.residual)
            row.radius = format_error(result.radius, 3)
            if previous is not None:
                row.decreasing = bool(result.residual < previous)

            previous = result.residual
            rows.append(row)

    return rows


def monotone(rows: list[LimitRow]) -> bool:
    return all(r.decreasing is not False and r.reason is None for r in rows)
