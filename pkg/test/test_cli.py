#
#   Test the command line interface
#   Copyright EAVISE
#

import io
import json
from pathlib import Path
import pandas as pd
import pytest
from sjo.cli import main, FORMS
from sjo.metric import CSV_COLUMNS

golden = Path(__file__).parent.parent / 'golden'


def test_list_ops(capsys):
    assert main(['list-ops']) == 0
    ops = json.loads(capsys.readouterr().out)
    names = [op['name'] for op in ops]
    assert 'D1' in names
    assert 'D1_det' in names

    assert main(['list-ops', '--n', '2', '--m', '2']) == 0
    names = [op['name'] for op in json.loads(capsys.readouterr().out)]
    assert 'D1_det' in names
    assert 'D1' not in names

    # General degree operators need n <= m
    assert main(['list-ops', '--n', '2', '--m', '1']) == 0
    names = [op['name'] for op in json.loads(capsys.readouterr().out)]
    assert 'D1_det' not in names


def test_qexp_check(capsys):
    for form in FORMS:
        assert main(['qexp', 'check', str(golden / f'{form}.csv')]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data['ok'] is True
        assert data['mismatches'] == []


def test_qexp_dump(tmp_path, capsys):
    path = tmp_path / 'phi.csv'
    assert main(['qexp', 'dump', '--form', 'phi_0_1', '--trunc', '6', '--out', str(path)]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data['trunc'] == 6
    assert data['path'] == str(path)
    lines = path.read_text().splitlines()
    expected = (golden / 'phi_0_1.csv').read_text().splitlines()
    # Equal up to the provenance line
    assert lines[0] == expected[0]
    assert lines[2:] == expected[2:]

    text = path.read_text().replace('\n0,0,10,1\n', '\n0,0,11,1\n')
    path.write_text(text)
    assert main(['qexp', 'check', str(path)]) == 1
    assert json.loads(capsys.readouterr().out)['mismatches'] == [['0', '0']]


def test_apply(capsys):
    assert main(['apply', '--op', 'D1', '--point', '{"z": "i", "w": "0.2"}', '--point', '{"z": "0.1+1.5i", "w": "0"}']) == 0
    data = json.loads(capsys.readouterr().out)
    assert data['op'] == 'D1'
    assert data['signature']['k'] == 3
    assert len(data['values']) == 2
    assert data['values'][0]['point']['n'] == 1

    assert main(['apply', '--op', 'serre_like', '--form', 'phi_-2_1', '--opt', 'variant=c', '--trunc', '30', '--point', '{"z": "0.1+1.2i", "w": "0.1+0.05i"}']) == 0
    data = json.loads(capsys.readouterr().out)
    assert data['options'] == {'variant': 'c'}
    assert data['signature']['k'] == -1


def test_christoffel(capsys):
    assert main(['christoffel', '--n', '2', '--m', '1', '--A', '2']) == 0
    frame = pd.read_csv(io.StringIO(capsys.readouterr().out))
    assert list(frame.columns) == CSV_COLUMNS
    assert len(frame) > 0


def test_verify(tmp_path, capsys):
    out = tmp_path / 'report.json'
    argv = ['-q', 'verify', '--suite', 'quick', '--claim', 'qexp-heat-exact', '--no-timing', '--out', str(out)]
    assert main(argv) == 0
    text = capsys.readouterr().out
    data = json.loads(text)
    assert data['pass'] is True
    assert [c['claim'] for c in data['claims']] == ['qexp-heat-exact']
    assert out.read_text() == text

    assert main(argv) == 0
    assert capsys.readouterr().out == text


@pytest.mark.slow
def test_verify_quick_suite(capsys):
    code = main(['-q', 'verify', '--suite', 'quick', '--no-timing'])
    data = json.loads(capsys.readouterr().out)
    failed = [c['claim'] for c in data['claims'] if not c['pass']]
    assert failed == []
    assert data['pass'] is True
    assert code == 0


def test_errors(capsys):
    assert main([]) == 2
    assert main(['--help']) == 0
    assert main(['apply', '--op', 'D9']) == 2
    assert main(['apply', '--op', 'D1', '--form', 'phi_2_1']) == 2
    assert main(['apply', '--op', 'D1', '--point', '{"z": "-i"}']) == 2
    assert main(['apply', '--op', 'D1', '--opt', 'variant']) == 2
    assert main(['apply', '--op', 'bracket']) == 2
    assert main(['qexp', 'check']) == 2
    assert main(['verify', '--claim', 'unknown']) == 2
    assert main(['verify', '--suite', 'quick', '--tol', 'speed=1']) == 2
    assert main(['christoffel', '--A', '0']) == 2
