from __future__ import annotations

import asyncio
import concurrent.futures
import logging

from fractions import Fraction
from typing import Any, Optional

from qseries.identities import IdentityLike, get
from qseries.identities.base import Identity, SideValues
from qseries.identities.exceptions import TermEvaluationError
from qseries.identities.proofs import THEOREMS, fold_check
from qseries.qcore.context import EvalContext
from qseries.qcore.exceptions import DomainError, EvaluationError, PoleError, PrecisionError
from qseries.qcore.scalars import ComplexRational, is_exact
from qseries.utils.logging import LoggableMixin

from .report import (
    FAIL,
    INCONCLUSIVE,
    PASS,
    REJECTED,
    SampleRecord,
    VerificationReport,
    format_error,
    format_value,
)
from .sampling import Sample, SampleSpec, sample


FOLD_SUFFIX = ':fold'

logger = logging.getLogger('qseries.verifier')


def _precision_limited(e: EvaluationError) -> bool:
    if isinstance(e, TermEvaluationError):
        e = e.cause

    return isinstance(e, PrecisionError)


def _reason(e: Exception) -> str:
    if isinstance(e, EvaluationError):
        return e.to_json()['reason']

    return type(e).__name__


class IdentityVerifier(LoggableMixin):
    """Evaluates the samples of one identity along the precision ladder until each one is certified."""

    def __init__(self, identity: IdentityLike, spec: SampleSpec, name: Optional[str] = None) -> None:
        self.identity: type[Identity] = get(identity)
        self.spec: SampleSpec = spec
        self.name: str = name or self.identity.ID

        super().__init__(self.name, logger)

    def sides(self, values: dict[str, Any], ctx: EvalContext) -> SideValues:
        return self.identity.eval_sides(values, ctx)

    def _fill(self, record: SampleRecord, sides: SideValues) -> None:
        digits = self.spec.report_digits
        record.lhs = format_value(sides.lhs, digits)
        record.rhs = format_value(sides.rhs, digits)
        record.abs_err = format_error(sides.abs_residual)
        record.rel_err = format_error(sides.rel_residual)
        record.radius = '0' if sides.exact else format_error(sides.radius, 3)
        record.precision_bits = sides.precision
        record.terms_used = sides.terms_used

    def verify_sample(self, s: Sample) -> SampleRecord:
        record = SampleRecord(identity=self.name, sample_index=s.index, params=s.to_strings(), status=INCONCLUSIVE)

        for prec in self.spec.precisions():
            ctx = self.spec.context(prec)
            try:
                values = self.identity.solve(s.params, prec)
                sides = self.sides(values, ctx)

            except EvaluationError as e:
                record.precision_bits = prec
                record.terms_used = ctx.terms_used
                record.reason = _reason(e)
                if _precision_limited(e):
                    self.debug('sample %d: %s; escalating', s.index, e)
                    continue

                self.debug('sample %d rejected: %s', s.index, e)
                record.status = REJECTED
                return record

            self._fill(record, sides)
            verdict = sides.certify(self.spec.tol_rel)
            if verdict is None:
                self.debug('sample %d: residual %s straddles the threshold at %d bits', s.index, record.rel_err, prec)
                continue

            record.status = PASS if verdict else FAIL
            record.reason = None
            if not verdict:
                self.warning('sample %d failed: relative residual %s', s.index, record.rel_err)

            return record

        self.debug('sample %d inconclusive at the %d bits cap', s.index, self.spec.precisions()[-1])
        return record

    def run(self, samples: Optional[list[Sample]] = None) -> VerificationReport:
        if samples is None:
            samples = sample(self.identity, self.spec)

        report = VerificationReport(
            identity=self.name,
            records=[self.verify_sample(s) for s in samples],
            tol_rel=format_error(Fraction(str(self.spec.tol_rel)), 3)
        )
        self.info(
            '%d passed, %d failed, %d inconclusive, %d rejected',
            report.passed, report.failed, report.inconclusive, report.rejected
        )

        return report


class FoldVerifier(IdentityVerifier):
    """Checks the folded unilateral form of a 7psi7 theorem against its bilateral series."""

    def __init__(self, theorem_id: str, spec: SampleSpec) -> None:
        if theorem_id not in THEOREMS:
            raise DomainError(f'{theorem_id} has no folded form')

        super().__init__(theorem_id, spec, name=f'{theorem_id}{FOLD_SUFFIX}')

    def sides(self, values: dict[str, Any], ctx: EvalContext) -> SideValues:
        return fold_check(self.identity.ID, values, ctx)


def verify(identity: IdentityLike, spec: SampleSpec) -> VerificationReport:
    return IdentityVerifier(identity, spec).run()


def verify_fold(theorem_id: str, spec: SampleSpec) -> VerificationReport:
    return FoldVerifier(theorem_id, spec).run()


def parse_params(params: dict[str, str], identity: IdentityLike) -> dict[str, Any]:
    """Turns exact parameter strings (e.g. `{'q': '1/2', 'b': '0.5+0.25i', 'n': '3'}`) into sample parameters."""

    identity = get(identity)
    parsed = {}
    for name, value in params.items():
        if name in identity.INTEGER:
            parsed[name] = int(value)
        else:
            parsed[name] = ComplexRational.parse(value)

    for name in (*identity.FREE, *identity.INTEGER):
        if name not in parsed:
            raise DomainError(f'missing parameter {name}')

    return parsed


def verify_point(identity: IdentityLike, params: dict[str, Any], spec: SampleSpec) -> VerificationReport:
    """Verifies a single, explicitly given parameter set; it is not filtered by admissibility."""

    return IdentityVerifier(identity, spec).run([Sample(0, params)])


def verify_exact(identity: IdentityLike, n: int, params: dict[str, Any]) -> Fraction:
    """Exact residual lhs - rhs of a terminating identity at rational parameters."""

    identity = get(identity)
    if not identity.is_finite():
        raise DomainError(f'{identity.ID} does not terminate')

    values = identity.solve({**params, 'n': n})
    for name in identity.FREE:
        if not is_exact(values[name]):
            raise DomainError(f'non-rational parameter {name}')

    try:
        sides = identity.eval_sides(values, EvalContext())
    except TermEvaluationError as e:
        if isinstance(e.cause, PoleError):
            raise e.cause from e

        raise

    if not sides.exact:
        raise DomainError(f'inexact evaluation of {identity.ID}')

    return Fraction(sides.residual)


async def verify_many(
    identities: list[str],
    spec: SampleSpec,
    jobs: int = 1,
    fold: bool = False
) -> list[VerificationReport]:
    """Verifies each identity (and, with `fold`, the folded form of each theorem among them). Reports come back in
    the order of `identities` however the work is spread over `jobs` processes."""

    tasks = [(verify, i) for i in identities]
    if fold:
        tasks += [(verify_fold, i) for i in identities if i in THEOREMS]

    if jobs <= 1:
        return [func(i, spec) for func, i in tasks]

    loop = asyncio.get_running_loop()
    with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as executor:
        futures = [loop.run_in_executor(executor, func, i, spec) for func, i in tasks]
        return list(await asyncio.gather(*futures))
