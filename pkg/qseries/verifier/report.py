"""Verification report models and their JSON, CSV and text renderings."""

from __future__ import annotations

import csv
import dataclasses
import io
import json
import os

from fractions import Fraction
from typing import Any, Optional, Union

import jinja2
import mpmath

from qseries.qcore.scalars import Scalar, format_scalar, is_exact
from qseries.typing import GenericJSONDict, ParamStrings

from . import schema


PASS = 'pass'
FAIL = 'fail'
INCONCLUSIVE = 'inconclusive'
REJECTED = 'rejected'

STATUSES = (PASS, FAIL, INCONCLUSIVE, REJECTED)

COLUMNS = [
    'identity', 'sample_index', 'params', 'lhs', 'rhs', 'abs_err', 'rel_err', 'radius', 'precision_bits',
    'terms_used', 'status', 'reason'
]

TEMPLATES_DIR = os.path.join(os.path.dirname(os.path.dirname(__file__)), 'templates')
TEXT_TEMPLATE = 'report.txt.j2'


class InvalidReport(ValueError):
    pass


def format_value(x: Optional[Scalar], digits: int = 30) -> Optional[str]:
    if x is None:
        return None
    if is_exact(x):
        return str(Fraction(x))

    return format_scalar(x, digits)


def format_error(x: Optional[Union[Fraction, mpmath.mpf]], digits: int = 6) -> Optional[str]:
    if x is None:
        return None
    if isinstance(x, Fraction):
        if x == 0:
            return '0'
        x = mpmath.mpf(x.numerator) / x.denominator

    return mpmath.nstr(x, digits)


def _error_value(s: Optional[str]) -> Optional[mpmath.mpf]:
    return mpmath.mpf(s) if s is not None else None


@dataclasses.dataclass
class SampleRecord:
    identity: str
    sample_index: int
    params: ParamStrings
    status: str
    lhs: Optional[str] = None
    rhs: Optional[str] = None
    abs_err: Optional[str] = None
    rel_err: Optional[str] = None
    radius: Optional[str] = None
    precision_bits: Optional[int] = None
    terms_used: int = 0
    reason: Optional[str] = None

    def to_json(self) -> GenericJSONDict:
        return {c: getattr(self, c) for c in COLUMNS}


@dataclasses.dataclass
class VerificationReport:
    identity: str
    records: list[SampleRecord]
    tol_rel: str = ''

    def count(self, status: str) -> int:
        return sum(1 for r in self.records if r.status == status)

    @property
    def passed(self) -> int:
        return self.count(PASS)

    @property
    def failed(self) -> int:
        return self.count(FAIL)

    @property
    def inconclusive(self) -> int:
        return self.count(INCONCLUSIVE)

    @property
    def rejected(self) -> int:
        return self.count(REJECTED)

    def _max(self, field: str) -> Optional[str]:
        values = [(_error_value(getattr(r, field)), getattr(r, field)) for r in self.records]
        values = [v for v in values if v[0] is not None]
        if not values:
            return None

        return max(values, key=lambda v: v[0])[1]

    def summary(self) -> GenericJSONDict:
        return {
            'count': len(self.records),
            'passed': self.passed,
            'failed': self.failed,
            'inconclusive': self.inconclusive,
            'rejected': self.rejected,
            'max_abs_err': self._max('abs_err'),
            'max_rel_err': self._max('rel_err')
        }

    def to_json(self) -> GenericJSONDict:
        return {
            'identity': self.identity,
            'tol_rel': self.tol_rel,
            'summary': self.summary(),
            'records': [r.to_json() for r in self.records]
        }


def validate(report: VerificationReport) -> GenericJSONDict:
    """Returns the JSON form of `report`, raising `InvalidReport` if it does not match the report schema."""

    j = report.to_json()
    error = schema.validate(j, schema.REPORT)
    if error:
        raise InvalidReport(f'{report.identity}: {error}')

    return j


def dumps_json(reports: list[VerificationReport], extra: Optional[GenericJSONDict] = None) -> str:
    document = dict(extra or {})
    document['reports'] = [validate(r) for r in reports]

    return json.dumps(document, sort_keys=True, indent=2) + '\n'


def _csv_cell(value: Any) -> Any:
    if isinstance(value, dict):
        return ','.join(f'{k}={v}' for k, v in value.items())
    if value is None:
        return ''

    return value


def dumps_csv(reports: list[VerificationReport]) -> str:
    f = io.StringIO()
    writer = csv.DictWriter(f, fieldnames=COLUMNS, lineterminator='\n')
    writer.writeheader()
    for report in reports:
        validate(report)
        for record in report.records:
            writer.writerow({k: _csv_cell(v) for k, v in record.to_json().items()})

    return f.getvalue()


_j2env: Optional[jinja2.Environment] = None


def get_j2env() -> jinja2.Environment:
    global _j2env

    if _j2env is None:
        _j2env = jinja2.Environment(
            loader=jinja2.FileSystemLoader(TEMPLATES_DIR),
            trim_blocks=True,
            lstrip_blocks=True,
            keep_trailing_newline=True
        )

    return _j2env


def render_text(reports: list[VerificationReport], **context) -> str:
    context = {'limits': [], 'elapsed': None, 'verbose': False, **context}
    template = get_j2env().get_template(TEXT_TEMPLATE)

    return template.render(reports=reports, **context)
