"""Seeded drawing of admissible parameter sets."""

from __future__ import annotations

import collections
import dataclasses
import hashlib
import logging
import math
import random

from fractions import Fraction
from typing import Any, Optional

from qseries.conf import settings
from qseries.identities import IdentityLike, get
from qseries.identities.base import SCAN_PREC, Identity
from qseries.qcore.context import EvalContext
from qseries.qcore.exceptions import EvaluationError
from qseries.qcore.scalars import ComplexRational
from qseries.typing import ParamStrings

from .exceptions import ExhaustionError, InvalidSampleSpec


GRID_BITS = 16
EXACT_NOMES = (Fraction(1, 2), Fraction(2, 3), Fraction(3, 5))
EXACT_HEIGHT = 12

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class SampleSpec:
    seed: int = 0
    count: int = 10
    q_range: tuple[float, float] = (0.1, 0.8)
    param_range: tuple[float, float] = (0.2, 5.0)
    n_range: tuple[int, int] = (0, 5)
    allow_complex: bool = True
    exact: bool = False
    margin: Fraction = Fraction(1, 2 ** 16)
    ratio_limit: float = 0.85
    ladder: tuple[int, ...] = (64, 128, 256)
    precision_cap: int = 256
    tol_bits: int = 16
    tol_rel: float = 1e-20
    max_terms: int = 100_000
    resample_factor: int = 100
    report_digits: int = 30

    def __post_init__(self) -> None:
        if self.count < 1:
            raise InvalidSampleSpec('count', str(self.count))

        lo, hi = self.q_range
        if not 0 < lo <= hi < 1:
            raise InvalidSampleSpec('q range', f'[{lo}, {hi}]')

        lo, hi = self.param_range
        if not 0 < lo <= hi:
            raise InvalidSampleSpec('parameter range', f'[{lo}, {hi}]')

        lo, hi = self.n_range
        if not 0 <= lo <= hi:
            raise InvalidSampleSpec('n range', f'{lo}..{hi}')

        if not 0 < self.ratio_limit < 1:
            raise InvalidSampleSpec('ratio limit', str(self.ratio_limit))

        if not self.precisions():
            raise InvalidSampleSpec('precision cap', str(self.precision_cap))

    @classmethod
    def from_settings(cls, **overrides) -> SampleSpec:
        fields = dict(
            seed=settings.verification.seed,
            count=settings.verification.samples,
            q_range=tuple(settings.sampling.q_range),
            param_range=tuple(settings.sampling.param_range),
            n_range=tuple(settings.sampling.n_range),
            allow_complex=settings.sampling.allow_complex,
            margin=Fraction(1, 2 ** settings.sampling.margin_bits),
            ratio_limit=settings.sampling.ratio_limit,
            ladder=tuple(settings.evaluation.precision_ladder),
            precision_cap=settings.verification.precision_cap,
            tol_bits=settings.evaluation.tol_bits,
            tol_rel=settings.verification.tol_rel,
            max_terms=settings.evaluation.max_terms,
            resample_factor=settings.sampling.resample_factor,
            report_digits=settings.report.digits
        )
        fields.update(overrides)

        return cls(**fields)

    def precisions(self) -> list[int]:
        """The precision ladder cut at the cap; a cap above the last rung adds the cap itself as a final rung."""

        rungs = [p for p in self.ladder if p <= self.precision_cap]
        if self.ladder and self.precision_cap > max(self.ladder):
            rungs.append(self.precision_cap)

        return rungs

    def context(self, prec: int) -> EvalContext:
        return EvalContext.for_precision(prec, self.tol_bits, self.max_terms)


@dataclasses.dataclass(frozen=True)
class Sample:
    index: int
    params: dict[str, Any]

    def to_strings(self) -> ParamStrings:
        return {name: str(value) for name, value in sorted(self.params.items())}


def seed_for(seed: int, identity_id: str) -> int:
    digest = hashlib.sha256(f'{seed}:{identity_id}'.encode()).digest()
    return int.from_bytes(digest[:8], 'big')


def _on_grid(x: float) -> Fraction:
    return Fraction(round(x * 2 ** GRID_BITS), 2 ** GRID_BITS)


def _draw_value(rng: random.Random, lo: float, hi: float, allow_complex: bool) -> ComplexRational:
    r = rng.uniform(lo, hi)
    if allow_complex:
        phase = rng.uniform(0, 2 * math.pi)
        return ComplexRational(_on_grid(r * math.cos(phase)), _on_grid(r * math.sin(phase)))

    return ComplexRational(_on_grid(r * rng.choice((1, -1))))


def _draw_exact(rng: random.Random) -> ComplexRational:
    value = Fraction(rng.randint(1, EXACT_HEIGHT), rng.randint(1, EXACT_HEIGHT))
    return ComplexRational(value * rng.choice((1, -1)))


def draw(identity: type[Identity], rng: random.Random, spec: SampleSpec) -> dict[str, Any]:
    params = {}
    for name in identity.FREE:
        if spec.exact:
            params[name] = ComplexRational(rng.choice(EXACT_NOMES)) if name == 'q' else _draw_exact(rng)
        elif name == 'q':
            params[name] = _draw_value(rng, *spec.q_range, spec.allow_complex)
        else:
            params[name] = _draw_value(rng, *spec.param_range, spec.allow_complex)

    # A corrupted terminating identity is left untouched at n = 0, where its bracket is empty
    lo, hi = spec.n_range
    if identity.CORRUPTION:
        lo = max(lo, 1)
        hi = max(hi, lo)

    for name in identity.INTEGER:
        params[name] = rng.randint(lo, hi)

    return params


def check(
    identity: type[Identity],
    params: dict[str, Any],
    margin: Fraction,
    ratio_limit: Optional[float] = None
) -> Optional[str]:
    """Returns the first rejection diagnostic of a drawn parameter set, or `None` if it is admissible."""

    try:
        values = identity.solve(params, SCAN_PREC)
    except EvaluationError as e:
        return str(e)

    result = identity.admissible(values, margin, ratio_limit)
    if not result:
        return result.diagnostics[0]

    return None


def sample(identity: IdentityLike, spec: SampleSpec) -> list[Sample]:
    """Draws `spec.count` admissible parameter sets. The draws only depend on the seed and the identity id."""

    identity = get(identity)
    rng = random.Random(seed_for(spec.seed, identity.ID))
    rejections = collections.Counter()
    samples = []

    for _ in range(spec.resample_factor * spec.count):
        params = draw(identity, rng, spec)
        diagnostic = check(identity, params, spec.margin, spec.ratio_limit)
        if diagnostic:
            logger.debug('%s: rejected sample: %s', identity.ID, diagnostic)
            rejections[diagnostic] += 1
            continue

        samples.append(Sample(len(samples), params))
        if len(samples) == spec.count:
            return samples

    dominant = rejections.most_common(1)
    raise ExhaustionError(identity.ID, dominant[0][0] if dominant else 'no attempts')
