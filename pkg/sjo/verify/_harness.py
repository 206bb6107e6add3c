#
#   Sampling harness that turns identities into measured residuals
#   Copyright EAVISE
#

import logging
import time
import zlib
from collections import namedtuple
from functools import lru_cache
from concurrent.futures import ThreadPoolExecutor
import numpy as np

from ..calculus import ExpPolyTestFunction
from ..errors import ConfigError, DimensionMismatch, SingularFactor, PoleProximity, TruncationTooSmall, StepUnderflow
from ..metric import MetricParams, connection_closed, christoffel_numeric
from ..operators import get_operator, CovariantOperator, InvariantOperator
from ..qseries import SeriesMap, weak_jacobi
from ..space import (
    WeightIndex, box_point, random_group_element, random_heisenberg, slash, compose, automorphy_factor,
    translation, inversion, identity_element, ProductMap, ConstantMap,
)
from ._report import VerificationReport
from ._tolerance import TOLERANCES, TOLERANCE_VERSION

__all__ = [
    'residual', 'sample_generator', 'run_samples', 'check_samples', 'check_covariance',
    'check_invariance', 'check_connection', 'corpus_form', 'corpus_point', 'corpus_group_element',
    'DEGENERATE', 'MAX_ATTEMPTS',
]
log = logging.getLogger(__name__)

DEGENERATE = (SingularFactor, PoleProximity, TruncationTooSmall, StepUnderflow)
MAX_ATTEMPTS = 25
SERIES_TOL = 1e-10

SampleResult = namedtuple('SampleResult', ['residuals', 'worst', 'resampled'])


def residual(a, b):
    """ Largest normalized difference :math:`|a - b| / (1 + |b|)` over all entries. """
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.shape != b.shape:
        raise DimensionMismatch(f'Cannot compare values of shape {a.shape} and {b.shape}')
    if a.size == 0:
        return 0.0
    return float(np.max(np.abs(a - b) / (1 + np.abs(b))))


def _key(text):
    if isinstance(text, int):
        return text
    return zlib.crc32(str(text).encode('utf-8'))


def sample_generator(seed, key, sample, attempt=0):
    """ Numpy generator of one sample, which only depends on the suite seed, the claim key, the sample number and the attempt. """
    return np.random.default_rng([int(seed), _key(key), int(sample), int(attempt)])


def run_samples(fn, cases, seed=0, key=0, threads=1):
    """ Evaluate a residual function on independent samples.

    Args:
        fn (callable): ``fn(gen, case) -> (residual, info)`` with gen a numpy generator and info a JSON serializable dictionary
        cases (int or list): Number of samples or a list of cases that are passed to fn
        seed (int, optional): Seed; Default **0**
        key (str or int, optional): Key that separates the random streams of different claims; Default **0**
        threads (int, optional): Number of worker threads; Default **1**

    Returns:
        SampleResult: Residuals in sample order, the info of the worst sample and the number of degenerate samples that were replaced

    Note:
        Samples that raise a degenerate error (singular factor of automorphy, pole proximity, truncation or step underflow)
        are drawn again with a new attempt number. After ``MAX_ATTEMPTS`` the residual of the sample is NaN, which fails the claim.
    """
    if isinstance(cases, int):
        cases = list(range(cases))

    def one(item):
        i, case = item
        for attempt in range(MAX_ATTEMPTS):
            gen = sample_generator(seed, key, i, attempt)
            try:
                value, info = fn(gen, case)
                return float(value), info, attempt
            except DEGENERATE as err:
                log.debug(f'Resampling sample {i} of {key} [{err}]')
        log.warning(f'Sample {i} of {key} stayed degenerate after {MAX_ATTEMPTS} attempts')
        return float('nan'), {'degenerate': True}, MAX_ATTEMPTS

    items = list(enumerate(cases))
    if threads > 1 and len(items) > 1:
        with ThreadPoolExecutor(max_workers=threads) as executor:
            results = list(executor.map(one, items))
    else:
        results = [one(item) for item in items]

    residuals = [r[0] for r in results]
    resampled = sum(r[2] for r in results)
    worst = None
    if results:
        scores = [np.inf if np.isnan(r) else r for r in residuals]
        i = int(np.argmax(scores))
        worst = dict(results[i][1] or {})
        worst['sample'] = i
        worst['residual'] = residuals[i]
    return SampleResult(residuals, worst, resampled)


def _tolerance(family, tolerance):
    if tolerance is not None:
        return tolerance
    return TOLERANCES[TOLERANCE_VERSION][family]


def check_samples(claim, anchor, fn, n, m, cases, seed=0, tolerance=1e-7, threads=1, negative=False, timing=True, determination=None):
    """ Run a residual function on samples and gather a :class:`~sjo.verify.VerificationReport`.

    Args:
        claim (str): Claim identifier, also used to separate random streams
        anchor (str): Statement that is checked
        fn (callable): ``fn(gen, case) -> (residual, info)``, see :func:`run_samples`
        n, m (int or list): Dimensions, as reported
        cases (int or list): Number of samples or list of cases
        seed (int, optional): Seed; Default **0**
        tolerance (float, optional): Tolerance; Default **1e-7**
        threads (int, optional): Number of worker threads; Default **1**
        negative (bool, optional): Negative control; Default **False**
        timing (bool, optional): Measure wall clock time; Default **True**
        determination (str, optional): Written outcome for experiments
    """
    start = time.perf_counter()
    result = run_samples(fn, cases, seed, (claim, n, m), threads)
    elapsed = round((time.perf_counter() - start) * 1000, 3) if timing else 0
    return VerificationReport(
        claim, anchor, n, m, result.residuals, tolerance, seed, elapsed,
        negative=negative, worst=result.worst, determination=determination, resampled=result.resampled,
    )


def _sample_info(x, g):
    return {'point': x.to_json(), 'g': g.to_json()}


# Corpus forms
@lru_cache(maxsize=None)
def _weak_jacobi(k, trunc):
    return weak_jacobi(k, trunc)


def corpus_form(wi, trunc=50, tol=SERIES_TOL):
    """ Weak Jacobi form of a certain weight and diagonal index one matrix on :math:`\\mathbb{H}_{1,m}`.

    For m elliptic variables the form is the product :math:`\\prod_t \\varphi_{k_t,1}(z, w_t)`,
    with the first :math:`-k/2` factors of weight -2 and the others of weight 0.

    Args:
        wi (sjo.space.WeightIndex): Weight and index, the index should be the identity matrix
        trunc (int, optional): Truncation of the q-expansions; Default **50**
        tol (float, optional): Largest allowed tail estimate of the series; Default **1e-10**

    Raises:
        ConfigError: There is no corpus form of this weight and index
    """
    m = wi.m
    if not np.array_equal(wi.M, np.eye(m)):
        raise ConfigError(f'Corpus forms have an identity index matrix [{wi}]')
    if wi.k > 0 or wi.k % 2 or -wi.k // 2 > m:
        raise ConfigError(f'Corpus forms on H_{{1,{m}}} have an even weight in [{-2*m}, 0] [{wi.k}]')

    negative = -wi.k // 2
    factors = [SeriesMap(_weak_jacobi(-2 if t < negative else 0, trunc), m, t, tol) for t in range(m)]
    form = factors[0]
    for factor in factors[1:]:
        form = ProductMap(form, factor)
    return form


def corpus_point(m, gen):
    """ Point of :math:`\\mathbb{H}_{1,m}` in the box of the corpus checks, where the truncated series converge quickly. """
    return box_point(1, m, gen, eig=(0.8, 1.5), re=0.5, w=0.3)


def corpus_group_element(m, gen, heisenberg=True):
    """ Integral element of the Jacobi group, whose symplectic part is a word of length at most 2 in S, T and the inverse of T. """
    generators = [inversion(1, m), translation([[1]], m), translation([[-1]], m)]
    g = identity_element(1, m)
    for _ in range(int(gen.integers(1, 3))):
        g = compose(g, generators[int(gen.integers(0, len(generators)))])
    if heisenberg:
        g = compose(g, random_heisenberg(1, m, gen))
    return g


# Checks
def check_covariance(
    op, wi_in, n, m, samples=20, seed=0, mode='generic', options=None, out=None, scale=3, literal=False,
    holomorphic=False, trunc=50, tolerance=None, threads=1, timing=True, claim=None, anchor=None, negative=False,
):
    """ Measure how well an operator intertwines the slash actions.

    Every sample draws a point x, a group element g and test functions f, and compares
    :math:`Op(f|_{k,M}g)(x)` with :math:`(Op f)|_{k',M'}g(x)`.
    Both values are multiplied by :math:`|J_{k',M'}(g, x)|` before taking the residual,
    so they are compared at the size of :math:`(Op f)(g \\cdot x)`.

    Args:
        op (str or sjo.operators.CovariantOperator): Operator
        wi_in (sjo.space.WeightIndex or list): Input weight(s) and index(es)
        n, m (int): Dimensions
        samples (int, optional): Number of samples; Default **20**
        seed (int, optional): Seed; Default **0**
        mode (str, optional): **generic** for random test functions, **corpus** for weak Jacobi forms (n = 1); Default **generic**
        options (dict, optional): Keyword arguments of the operator, eg. ``{'variant': 'b'}``
        out (sjo.space.WeightIndex, optional): Output signature; Default **declared by the operator**
        scale (int, optional): Word length of the random group elements in generic mode; Default **3**
        literal (bool, optional): Literal factor of automorphy convention; Default **False**
        holomorphic (bool, optional): Use holomorphic test functions; Default **False**
        trunc (int, optional): Truncation of the corpus forms; Default **50**
        tolerance (float, optional): Tolerance; Default **covariance tolerance of the registry**
        threads (int, optional): Number of worker threads; Default **1**
        timing (bool, optional): Measure wall clock time; Default **True**
        claim (str, optional): Claim identifier; Default **cov-<op>**
        anchor (str, optional): Statement that is checked
        negative (bool, optional): Negative control; Default **False**

    Returns:
        sjo.verify.VerificationReport
    """
    if not isinstance(op, CovariantOperator):
        op = get_operator(op)
    wis = [wi_in] if isinstance(wi_in, WeightIndex) else list(wi_in)
    options = dict(options or {})
    if not op.supports(n, m):
        raise DimensionMismatch(f'{op.name} is not defined on H_{{{n},{m}}}')
    if out is None:
        out = op.signature(wis, n, options.get('variant'))
    if mode not in ('generic', 'corpus'):
        raise ConfigError(f'Unknown covariance mode "{mode}", should be generic or corpus')
    if mode == 'corpus':
        if n != 1:
            raise ConfigError(f'Corpus forms only exist for n = 1 [{n}]')
        forms = [corpus_form(wi, trunc) for wi in wis]

    def fn(gen, case):
        if mode == 'generic':
            x = box_point(n, m, gen)
            g = random_group_element(n, m, gen, scale)
            fs = [ExpPolyTestFunction.random(n, m, gen, holomorphic=holomorphic) for _ in wis]
        else:
            x = corpus_point(m, gen)
            g = corpus_group_element(m, gen)
            fs = forms

        slashed = []
        plain = []
        for f, wi in zip(fs, wis):
            slashed += [slash(f, g, wi, literal), wi]
            plain += [f, wi]

        lhs = op(*slashed, **options)(x)
        rhs = slash(op(*plain, **options), g, out, literal)(x)
        # Both sides carry 1/J(g, x) of the output signature, which is tiny for large indices
        size = abs(complex(automorphy_factor(g, x, out, literal)))
        return residual(np.asarray(lhs) * size, np.asarray(rhs) * size), _sample_info(x, g)

    if claim is None:
        claim = f'cov-{op.name}'
    if anchor is None:
        anchor = f'{op.name} maps weight {[wi.k for wi in wis]} to weight {out.k}'
    return check_samples(
        claim, anchor, fn, n, m, samples, seed, _tolerance('negative' if negative else 'covariance', tolerance),
        threads, negative, timing,
    )


def check_invariance(inv, n, m, samples=20, seed=0, scale=3, constant=False, tolerance=None, threads=1, timing=True, claim=None, anchor=None, negative=False):
    """ Measure the transformation law :math:`Inv(\\varphi \\circ g)(x) = L \\, (Inv \\, \\varphi)(g \\cdot x) \\, R` of an invariant operator.

    Args:
        inv (sjo.operators.InvariantOperator or callable): Operator, or a factory ``inv(n, m)``
        n, m (int): Dimensions
        samples (int, optional): Number of samples; Default **20**
        seed (int, optional): Seed; Default **0**
        scale (int, optional): Word length of the random group elements; Default **3**
        constant (bool, optional): Use constant functions instead of random test functions; Default **False**
        tolerance (float, optional): Tolerance; Default **invariance tolerance of the registry**

    Note:
        The other arguments match :func:`check_covariance`.
    """
    if not isinstance(inv, InvariantOperator):
        inv = inv(n, m)

    def fn(gen, case):
        x = box_point(n, m, gen)
        g = random_group_element(n, m, gen, scale)
        if constant:
            f = ConstantMap(complex(gen.normal(), gen.normal()), n, m)
        else:
            f = ExpPolyTestFunction.random(n, m, gen)
        return inv.law_residual(f, g, x), _sample_info(x, g)

    if claim is None:
        claim = f'inv-{inv.name}'
    if anchor is None:
        anchor = f'{inv.name} transforms with law {inv.law}'
    return check_samples(
        claim, anchor, fn, n, m, samples, seed, _tolerance('negative' if negative else 'invariance', tolerance),
        threads, negative, timing,
    )


def check_connection(n, m, params=MetricParams(), samples=20, seed=0, numeric_params=None, tolerance=None, threads=1, timing=True, claim=None, anchor=None, negative=False):
    """ Max-norm difference between the closed form connection and the Christoffel symbols computed from the metric.

    Args:
        n, m (int): Dimensions
        params (sjo.metric.MetricParams, optional): Metric constants
        samples (int, optional): Number of points; Default **20**
        seed (int, optional): Seed; Default **0**
        numeric_params (sjo.metric.MetricParams, optional): Metric constants of the Christoffel symbols; Default **params**
        tolerance (float, optional): Tolerance; Default **connection tolerance of the registry**
    """
    if numeric_params is None:
        numeric_params = params

    def fn(gen, case):
        x = box_point(n, m, gen)
        closed = connection_closed(x, params)
        numeric = christoffel_numeric(x, numeric_params)
        return closed.max_difference(numeric), {'point': x.to_json(), 'params': [params.A, params.B]}

    if claim is None:
        claim = 'connection'
    if anchor is None:
        anchor = f'closed form connection equals the Christoffel symbols for (A, B) = ({params.A}, {params.B})'
    return check_samples(
        claim, anchor, fn, n, m, samples, seed, _tolerance('negative' if negative else 'connection', tolerance),
        threads, negative, timing,
    )
