import json

import pytest

from qseries.verifier import (
    FAIL,
    PASS,
    REJECTED,
    LimitRow,
    SampleRecord,
    VerificationReport,
    dumps_csv,
    dumps_json,
    render_text,
)
from qseries.verifier.report import COLUMNS, InvalidReport, validate


@pytest.fixture
def report():
    return VerificationReport(
        identity='p33-a',
        tol_rel='1e-20',
        records=[
            SampleRecord(
                identity='p33-a',
                sample_index=0,
                params={'b': '3', 'c': '5', 'd': '7', 'q': '1/2'},
                status=PASS,
                lhs='2.5',
                rhs='2.5',
                abs_err='1.0e-40',
                rel_err='4.0e-41',
                radius='2.0e-40',
                precision_bits=128,
                terms_used=210
            ),
            SampleRecord(
                identity='p33-a',
                sample_index=1,
                params={'b': '3', 'c': '5', 'd': '7', 'q': '2/3'},
                status=FAIL,
                lhs='2.5',
                rhs='2.6',
                abs_err='0.1',
                rel_err='0.04',
                radius='1.0e-38',
                precision_bits=128,
                terms_used=180
            ),
            SampleRecord(
                identity='p33-a',
                sample_index=2,
                params={'b': '1/2', 'c': '5', 'd': '7', 'q': '1/2'},
                status=REJECTED,
                precision_bits=64,
                reason='pole'
            ),
        ]
    )


def test_summary(report):
    assert report.summary() == {
        'count': 3,
        'passed': 1,
        'failed': 1,
        'inconclusive': 0,
        'rejected': 1,
        'max_abs_err': '0.1',
        'max_rel_err': '0.04'
    }


def test_validate(report):
    assert validate(report)['identity'] == 'p33-a'

    report.records[0].status = 'great'
    with pytest.raises(InvalidReport):
        validate(report)


def test_dumps_json(report):
    document = json.loads(dumps_json([report], extra={'seed': 1}))
    assert document['seed'] == 1
    assert document['reports'][0]['summary']['failed'] == 1
    assert list(document['reports'][0]['records'][0]) == sorted(COLUMNS)


def test_dumps_csv(report):
    lines = dumps_csv([report]).splitlines()
    assert lines[0] == ','.join(COLUMNS)
    assert len(lines) == 4
    assert lines[3].endswith(',0,rejected,pole')


def test_render_text(report):
    text = render_text([report], version='0.1.0', seed=1, samples=3, precision_cap=256, tol_rel='1e-20')
    assert '== p33-a ==' in text
    assert '1 passed, 1 failed, 0 inconclusive, 1 rejected of 3' in text
    assert '#1 fail at 128 bits' in text
    assert '#0 pass' not in text
    assert 'finished in' not in text


def test_render_text_verbose(report):
    limits = [LimitRow('thm-a', 0, '1/100', '3.1e-5', '1.0e-40', None)]
    text = render_text([report], verbose=True, limits=limits, elapsed='1.5')
    assert '#0 pass' in text
    assert 'thm-a #0 epsilon 1/100: residual 3.1e-5' in text
    assert 'finished in 1.5 s' in text
