#
#   Test the verification harness, reports and suite parameters
#   Copyright EAVISE
#

import json
import math
import pytest
import sjo
from sjo.cfg import suite_path
from sjo.verify import (
    VerificationReport, REPORT_KEYS, SuiteParameters, TOLERANCES, CLAIMS, claim, get_claim,
    residual, run_samples, run_suite, suite_json, summary, corpus_form, MAX_ATTEMPTS,
)
from sjo.space import WeightIndex


def report(residuals, tolerance=1e-7, claim='test', negative=False):
    return VerificationReport(claim, 'anchor', 1, 1, residuals, tolerance, 0, negative=negative)


# Reports
def test_report_pass():
    assert report([1e-9, 1e-8]).passed
    assert not report([1e-9, 1e-6]).passed
    assert not report([1e-9, math.nan]).passed

    assert report([0.5], negative=True, tolerance=1e-2).passed
    assert not report([1e-3], negative=True, tolerance=1e-2).passed
    assert not report([], negative=True).passed

    assert report([0.0, 0.0], tolerance=0.0).passed
    assert not report([0.0, 1e-300], tolerance=0.0).passed


def test_report_merge():
    a = report([1e-9], claim='a')
    b = VerificationReport('a', 'anchor', 2, 2, [1e-8, 2e-9], 1e-7, 0, elapsed_ms=3, worst={'sample': 0})
    merged = a.merge(b)
    assert merged.samples == 3
    assert merged.max_residual == 1e-8
    assert merged.n == [1, 2]
    assert merged.worst == {'sample': 0}
    assert merged.elapsed_ms == 3

    with pytest.raises(ValueError):
        a.merge(report([1e-9], claim='b'))


def test_report_json():
    data = report([1e-9, 3e-9]).to_json()
    assert tuple(data.keys()) == REPORT_KEYS
    assert data['mean_residual'] == pytest.approx(2e-9)
    assert data['pass'] is True

    data = json.loads(report([0.5], negative=True, tolerance=1e-2).dumps())
    assert data['negative'] is True
    assert data['pass'] is True


# Parameters
def test_parameters():
    params = SuiteParameters()
    assert params.seed == 0
    assert params.samples == 20
    assert params.claims is None
    assert params.trunc == 50
    assert params.tolerance('covariance') == TOLERANCES['1']['covariance']
    assert params.tolerance('exact') == 0

    params = SuiteParameters(claims='cocycle', tolerances={'covariance': 1e-6})
    assert params.claims == ['cocycle']
    assert params.tolerance('covariance') == 1e-6


@pytest.mark.parametrize('kwargs', [
    {'seed': -1},
    {'samples': 0},
    {'threads': 0},
    {'tolerance_version': '0'},
    {'tolerances': {'speed': 1}},
])
def test_parameters_errors(kwargs):
    with pytest.raises(sjo.errors.ConfigError):
        SuiteParameters(**kwargs)

    with pytest.raises(sjo.errors.ConfigError):
        SuiteParameters().tolerance('speed')


def test_parameters_threads(monkeypatch):
    monkeypatch.setenv('SJO_THREADS', '4')
    assert SuiteParameters().threads == 4
    monkeypatch.setenv('SJO_THREADS', 'many')
    with pytest.raises(sjo.errors.ConfigError):
        SuiteParameters()


def test_parameters_serialize(tmp_path):
    params = SuiteParameters(samples=5, _note='not saved')
    assert params.note == 'not saved'
    assert 'note' not in params.state()

    path = tmp_path / 'params.json'
    params.save(path)
    loaded = SuiteParameters()
    loaded.load(path)
    assert loaded.samples == 5
    assert loaded.state() == params.state()


def test_parameters_file():
    params = SuiteParameters.from_file(suite_path('quick'))
    assert params.samples == 3
    assert SuiteParameters.from_file(suite_path('default')).samples == 20

    with pytest.raises(sjo.errors.ConfigError):
        suite_path('slow')
    with pytest.raises(sjo.errors.ConfigError):
        SuiteParameters.from_file(suite_path('quick'), variable='config')


# Harness
def test_residual():
    assert residual([1, 2], [1, 2]) == 0
    assert residual(3, 1) == pytest.approx(1)
    assert residual([], []) == 0
    with pytest.raises(sjo.errors.DimensionMismatch):
        residual([1, 2], [1, 2, 3])


def test_run_samples():
    def fn(gen, case):
        return gen.random(), {'case': case}

    first = run_samples(fn, 4, seed=1, key='claim')
    assert first.residuals == run_samples(fn, 4, seed=1, key='claim', threads=3).residuals
    assert first.residuals != run_samples(fn, 4, seed=2, key='claim').residuals
    assert first.residuals != run_samples(fn, 4, seed=1, key='other').residuals
    assert first.worst['residual'] == max(first.residuals)
    assert first.resampled == 0


def test_run_samples_degenerate():
    calls = []

    def flaky(gen, case):
        calls.append(case)
        if len(calls) == 1:
            raise sjo.errors.SingularFactor('det(CZ+D) vanishes')
        return 0.0, {}

    result = run_samples(flaky, 2)
    assert result.residuals == [0.0, 0.0]
    assert result.resampled == 1

    def degenerate(gen, case):
        raise sjo.errors.PoleProximity('w on the lattice')

    result = run_samples(degenerate, 1)
    assert math.isnan(result.residuals[0])
    assert result.resampled == MAX_ATTEMPTS
    assert not report(result.residuals).passed


def test_corpus_form_errors():
    with pytest.raises(sjo.errors.ConfigError):
        corpus_form(WeightIndex(-2, [[2]]))
    with pytest.raises(sjo.errors.ConfigError):
        corpus_form(WeightIndex(2, [[1]]))
    with pytest.raises(sjo.errors.ConfigError):
        corpus_form(WeightIndex(-4, [[1]]))
    assert corpus_form(WeightIndex(-4, [[1, 0], [0, 1]]), 10).m == 2


# Claims and suite
def test_claims():
    assert len(CLAIMS) >= 25
    assert get_claim('cocycle').family == 'cocycle'
    assert get_claim('neg-wrong-weight').family == 'negative'
    for c in CLAIMS.values():
        assert c.anchor
        assert c.family in TOLERANCES['1']

    with pytest.raises(sjo.errors.ConfigError):
        get_claim('unknown')
    with pytest.raises(sjo.errors.ConfigError):
        claim('cocycle', 'duplicate', 'cocycle')(lambda ctx: None)


def test_empty_suite():
    reports, status = run_suite(SuiteParameters(claims=[]), progress=False)
    assert reports == []
    assert status
    assert json.loads(suite_json(reports, SuiteParameters()))['pass'] is True


def test_suite_deterministic():
    params = SuiteParameters(claims=['qexp-heat-exact', 'kernel-transform'], samples=2, timing=False)
    reports, status = run_suite(params, progress=False)
    assert status
    assert [r.claim for r in reports] == params.claims
    assert reports[0].max_residual == 0

    again, _ = run_suite(SuiteParameters(claims=['qexp-heat-exact', 'kernel-transform'], samples=2, timing=False), progress=False)
    assert suite_json(reports, params, status) == suite_json(again, params)

    data = json.loads(suite_json(reports, params, status))
    assert data['seed'] == 0
    assert data['tolerance_version'] == '1'
    assert all(c['elapsed_ms'] == 0 for c in data['claims'])

    frame = summary(reports)
    assert list(frame['claim']) == params.claims
    assert frame['pass'].all()

    with pytest.raises(sjo.errors.ConfigError):
        run_suite(SuiteParameters(claims=['unknown']), progress=False)
    with pytest.raises(sjo.errors.ConfigError):
        run_suite({'seed': 0}, progress=False)


@pytest.mark.slow
@pytest.mark.parametrize('suite', ['quick', 'default'])
@pytest.mark.parametrize('id', [c.id for c in CLAIMS.values() if c.negative])
def test_negative_controls_are_falsified(suite, id):
    params = SuiteParameters.from_file(suite_path(suite))
    params.claims = [id]
    params.timing = False
    reports, status = run_suite(params, progress=False)
    assert status, reports[0]
    assert reports[0].negative
    assert reports[0].max_residual > reports[0].tolerance
