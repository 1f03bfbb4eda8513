import json

import pytest

from qseries import commands
from qseries.commands import main
from qseries.conf import settings


EXACT_ARGS = ['verify', '--identity', 'p55-a', '--exact', '--n', '0..5', '--samples', '5', '--seed', '42']


@pytest.fixture(autouse=True)
def no_logging_setup(mocker):
    mocker.patch('qseries.startup.init_logging')


def test_list_json(capsys):
    assert commands.run(main.main, ['list', '--format', 'json']) == commands.EXIT_OK

    entries = json.loads(capsys.readouterr().out)
    assert len(entries) == 21
    assert entries[0]['id'] == 'four-term'


def test_list_text(capsys):
    assert commands.run(main.main, ['list', '--identity', 'p33-a']) == commands.EXIT_OK

    out = capsys.readouterr().out
    assert out.startswith('p33-a')
    assert 'conditions: |q/bcd|<1' in out


def test_unknown_identity(capsys):
    assert commands.run(main.main, ['verify', '--identity', 'nope']) == commands.EXIT_CONFIG
    assert 'nope' in capsys.readouterr().err


def test_verify_needs_identity():
    assert commands.run(main.main, ['verify']) == commands.EXIT_CONFIG


def test_params_need_single_identity():
    argv = ['verify', '--identity', 'p33-a,p33-c', '--params', 'q=1/2,b=3,c=5,d=7']
    assert commands.run(main.main, argv) == commands.EXIT_CONFIG


def test_bad_argument():
    with pytest.raises(SystemExit):
        commands.run(main.main, ['verify', '--identity', 'p55-a', '--n', 'abc'])


def test_verify_exact(capsys):
    assert commands.run(main.main, EXACT_ARGS) == commands.EXIT_OK
    assert settings.verification.samples == 5
    assert settings.sampling.n_range == [0, 5]

    out = capsys.readouterr().out
    assert '5 passed, 0 failed, 0 inconclusive, 0 rejected of 5' in out
    assert 'finished in' in out


def test_verify_json_deterministic(tmp_path):
    first = tmp_path / 'first.json'
    second = tmp_path / 'second.json'

    assert commands.run(main.main, [*EXACT_ARGS, '--format', 'json', '--out', str(first)]) == commands.EXIT_OK
    assert commands.run(main.main, [*EXACT_ARGS, '--format', 'json', '--out', str(second)]) == commands.EXIT_OK
    assert first.read_bytes() == second.read_bytes()

    document = json.loads(first.read_text())
    assert document['seed'] == 42
    assert document['reports'][0]['summary']['passed'] == 5


def test_verify_point_csv(capsys):
    argv = ['verify', '--identity', 'p33-a', '--params', 'q=1/2,b=3,c=5,d=7', '--format', 'csv']
    assert commands.run(main.main, argv) == commands.EXIT_OK

    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 2
    assert lines[0].startswith('identity,sample_index,params')
    assert ',pass,' in lines[1]


def test_limits_need_theorem():
    argv = ['verify', '--identity', 'p55-a', '--exact', '--samples', '1', '--limit-eps', '1e-2,1e-3']
    assert commands.run(main.main, argv) == commands.EXIT_CONFIG


def test_exhaustion():
    argv = ['verify', '--identity', 'p33-a', '--samples', '1', '--q-range', '0.7,0.8', '--param-range', '0.2,0.3']
    assert commands.run(main.main, argv) == commands.EXIT_CONFIG


def test_invalid_sample_spec():
    argv = ['verify', '--identity', 'p33-a', '--q-range', '0.5,1.5']
    assert commands.run(main.main, argv) == commands.EXIT_CONFIG


def test_precision_cap_env(monkeypatch, capsys):
    monkeypatch.setenv('QSERIES_PRECISION_CAP', 'abc')
    assert commands.run(main.main, ['list']) == commands.EXIT_CONFIG
    assert 'QSERIES_PRECISION_CAP' in capsys.readouterr().err


def test_version(capsys):
    with pytest.raises(SystemExit):
        commands.run(main.main, ['--version'])

    assert capsys.readouterr().out == 'qseries 0.1.0\n'


def test_list_unwritable_out(tmp_path):
    out = tmp_path / 'missing' / 'catalog.txt'
    assert commands.run(main.main, ['list', '--out', str(out)]) == commands.EXIT_CONFIG
    assert not out.exists()


def test_config_file(tmp_path):
    config_file = tmp_path / 'qseries.conf'
    config_file.write_text('debug = true\nverification {\n    samples = 3\n}\n')

    assert commands.run(main.main, ['-c', str(config_file), 'list']) == commands.EXIT_OK
    assert settings.debug is True
    assert settings.verification.samples == 3
    assert settings.verification.precision_cap == 256


def test_missing_config_file(tmp_path):
    assert commands.run(main.main, ['-c', str(tmp_path / 'none.conf'), 'list']) == commands.EXIT_CONFIG


def test_verbose_sets_debug():
    assert commands.run(main.main, ['-v', 'list']) == commands.EXIT_OK
    assert settings.debug is True
