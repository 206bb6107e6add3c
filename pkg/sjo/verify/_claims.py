#
#   Registry of verified claims
#   Copyright EAVISE
#

import logging
import math
import time
from collections import OrderedDict
from fractions import Fraction
from functools import reduce
import numpy as np

from ..calculus import (
    grad, fd_oracle, ExpPolyTestFunction, grad_trace_MVRV_W, grad_trace_MVRV_Z, grad_detY_Z, grad_R_Z,
    grad_log_kernel, hessian_W_kernel, cofactor_trace_identity_check,
)
from ..errors import ConfigError
from ..metric import (
    MetricParams, metric_matrix, metric_inverse_matrix, connection_closed, metric_invariance_residual,
    metric_compatibility_residual,
)
from ..operators import (
    get_operator, bracket_candidates, build_invariant, InvariantOperator, H_j, T_kl, U_kl, V_kl, YmYp,
    weight_kernel, kernel_transform_residual,
)
from ..qseries import (
    weak_jacobi, heat_on_series, heat_ez_check, serre_compat_check, theta_decompose, theta_reconstruct,
    E1hat, twisted_G, eisenstein_G_value, lattice_bound,
)
from ..space import (
    WeightIndex, Coordinate, JetMap, ProductMap, PointJet, box_point, random_group_element, act,
    slash, cocycle_phase, inversion, translation, heisenberg,
)
from ._harness import (
    residual, check_samples, check_covariance, check_invariance, check_connection,
    corpus_form, corpus_point, SERIES_TOL,
)

__all__ = ['Claim', 'ClaimContext', 'CLAIMS', 'claim', 'get_claim', 'list_claims']
log = logging.getLogger(__name__)

CLAIMS = OrderedDict()

# Weight and index of the generic test functions, per m
WI = {
    1: WeightIndex(3, [[2]]),
    2: WeightIndex(2, [[2, Fraction(1, 2)], [Fraction(1, 2), 1]]),
    3: WeightIndex(2, [[2, Fraction(1, 2), 0], [Fraction(1, 2), 2, Fraction(1, 2)], [0, Fraction(1, 2), 2]]),
}
BRACKET = {m: (WI[m].with_weight(3), WeightIndex(2, np.eye(m, dtype=int).tolist())) for m in WI}
CORPUS = {k: WeightIndex(k, [[1]]) for k in (-2, 0)}
METRIC_PARAMS = (MetricParams(1, 1), MetricParams(1, 3), MetricParams(2, 1))
METRIC_GRID = ((1, 1), (1, 2), (2, 1), (2, 2), (2, 3), (3, 2))
EISENSTEIN_BOUND = 400


class Claim:
    """ Statement that is checked numerically or exactly.

    Args:
        id (str): Claim identifier
        anchor (str): Statement that is checked
        family (str): Tolerance family, see :data:`~sjo.verify.TOLERANCES`
        fn (callable): ``fn(ctx) -> VerificationReport`` with ctx a :class:`~sjo.verify.ClaimContext`
        negative (bool, optional): Negative control, which should be falsified; Default **False**
    """
    def __init__(self, id, anchor, family, fn, negative=False):
        self.id = id
        self.anchor = anchor
        self.family = 'negative' if negative else family
        self.fn = fn
        self.negative = negative
        self.__doc__ = fn.__doc__

    def __repr__(self):
        return f'{self.__class__.__name__}({self.id}, family={self.family})'

    def run(self, params):
        """ Check the claim with certain suite parameters. """
        start = time.perf_counter()
        report = self.fn(ClaimContext(self, params))
        if params.timing:
            report.elapsed_ms = round((time.perf_counter() - start) * 1000, 3)
        else:
            report.elapsed_ms = 0
        if self.negative and report.determination is None:
            report.determination = 'falsified' if report.passed else 'not falsified, the control holds within tolerance'

        status = 'pass' if report.passed else 'FAIL'
        log.verify(f'{self.id:28} {status}  max {report.max_residual:.3e}  tol {report.tolerance:.1e}  ({report.samples} samples)')
        if report.determination is not None:
            log.info(f'{self.id}: {report.determination}')
        return report


class ClaimContext:
    """ Suite parameters of a single claim, with shortcuts to the harness checks.

    Attributes:
        self.claim: The claim that is checked
        self.params: Suite parameters
        self.tolerance: Tolerance of the claim family
    """
    def __init__(self, claim, params):
        self.claim = claim
        self.params = params
        self.seed = params.seed
        self.samples = params.samples
        self.threads = params.threads
        self.timing = params.timing
        self.trunc = params.trunc
        self.bound = params.eisenstein_bound
        self.tau_pole = params.pole_distance
        self.tolerance = params.tolerance(claim.family)

    def _common(self, kwargs):
        common = {
            'seed': self.seed,
            'tolerance': self.tolerance,
            'threads': self.threads,
            'timing': self.timing,
            'claim': self.claim.id,
            'anchor': self.claim.anchor,
            'negative': self.claim.negative,
        }
        common.update(kwargs)
        return common

    def run(self, fn, n, m, cases=None, determination=None):
        """ Run ``fn(gen, case) -> (residual, info)`` on ``cases``, which defaults to the number of samples. """
        return check_samples(
            self.claim.id, self.claim.anchor, fn, n, m, self.samples if cases is None else cases,
            self.seed, self.tolerance, self.threads, self.claim.negative, self.timing, determination,
        )

    def covariance(self, op, wi, n, m, samples=None, **kwargs):
        kwargs.setdefault('trunc', self.trunc)
        return check_covariance(op, wi, n, m, self.samples if samples is None else samples, **self._common(kwargs))

    def invariance(self, inv, n, m, samples=None, **kwargs):
        return check_invariance(inv, n, m, self.samples if samples is None else samples, **self._common(kwargs))

    def connection(self, n, m, params, samples=None, **kwargs):
        return check_connection(n, m, params, self.samples if samples is None else samples, **self._common(kwargs))


def merge(reports, determination=None):
    """ Combine the reports of one claim. """
    report = reduce(lambda a, b: a.merge(b), reports)
    if determination is not None:
        report.determination = determination
    return report


def claim(id, anchor, family, negative=False):
    """ Decorator that registers a claim function in :data:`CLAIMS`. """
    def decorator(fn):
        if id in CLAIMS:
            raise ConfigError(f'Claim {id} is already registered')
        CLAIMS[id] = Claim(id, anchor, family, fn, negative)
        return fn

    return decorator


def get_claim(id):
    try:
        return CLAIMS[id]
    except KeyError:
        raise ConfigError(f'Unknown claim "{id}", should be one of {list(CLAIMS)}') from None


def list_claims():
    return list(CLAIMS.values())


def _status(report, tolerance):
    return f'{report.max_residual:.2e} ({"holds" if report.max_residual < tolerance else "fails"})'


# Sanity
@claim('identity', 'the identity operator intertwines every slash action', 'identity')
def _identity(ctx):
    return merge([ctx.covariance('identity', WI[m], n, m) for n, m in ((1, 1), (2, 2))])


# Metric and connection
@claim('connection', 'closed form connection equals the Christoffel symbols of the metric', 'connection')
def _connection(ctx):
    return merge([ctx.connection(n, m, p) for n, m in METRIC_GRID for p in METRIC_PARAMS])


@claim('metric-inverse', 'closed form inverse blocks invert the metric', 'inverse')
def _metric_inverse(ctx):
    def fn(gen, p):
        x = box_point(n, m, gen)
        G = metric_matrix(x, p)
        Ginv = metric_inverse_matrix(x, p)
        return float(np.max(np.abs(G @ Ginv - np.eye(G.shape[0])))), {'point': x.to_json()}

    reports = []
    for n, m in METRIC_GRID:
        cases = [METRIC_PARAMS[i % len(METRIC_PARAMS)] for i in range(ctx.samples)]
        reports.append(ctx.run(fn, n, m, cases))
    return merge(reports)


@claim('connection-explicit', 'general connection formulas reduce to the explicit coefficients on H_{1,1}', 'explicit')
def _connection_explicit(ctx):
    def fn(gen, p):
        x = box_point(1, 1, gen)
        general = connection_closed(x, p, 'general')
        explicit = connection_closed(x, p, 'explicit')
        return general.max_difference(explicit), {'point': x.to_json(), 'coefficients': {k: str(v) for k, v in explicit.coefficients().items()}}

    return ctx.run(fn, 1, 1, [METRIC_PARAMS[i % len(METRIC_PARAMS)] for i in range(ctx.samples)])


@claim('metric-invariance', 'the metric is invariant under the Jacobi group', 'metric')
def _metric_invariance(ctx):
    def fn(gen, p):
        x = box_point(n, m, gen)
        g = random_group_element(n, m, gen)
        return metric_invariance_residual(x, g, p, seed=gen), {'point': x.to_json(), 'g': g.to_json()}

    reports = []
    for n in (1, 2, 3):
        for m in (1, 2, 3):
            reports.append(ctx.run(fn, n, m, [METRIC_PARAMS[i % len(METRIC_PARAMS)] for i in range(ctx.samples)]))
    return merge(reports)


@claim('metric-compatibility', 'the closed form connection is compatible with the metric', 'metric')
def _metric_compatibility(ctx):
    def fn(gen, p):
        x = box_point(n, m, gen)
        return metric_compatibility_residual(x, p), {'point': x.to_json()}

    reports = []
    for n, m in ((1, 1), (1, 2), (2, 1), (2, 2)):
        reports.append(ctx.run(fn, n, m, [METRIC_PARAMS[i % len(METRIC_PARAMS)] for i in range(ctx.samples)]))
    return merge(reports)


@claim('cocycle', 'the factor of automorphy is a cocycle up to a constant of modulus one', 'cocycle')
def _cocycle(ctx):
    def fn(gen, case):
        x = box_point(n, m, gen)
        x2 = box_point(n, m, gen)
        g1 = random_group_element(n, m, gen)
        g2 = random_group_element(n, m, gen)
        phase = cocycle_phase(g1, g2, x, WI[m])
        phase2 = cocycle_phase(g1, g2, x2, WI[m])
        info = {'point': x.to_json(), 'g1': g1.to_json(), 'g2': g2.to_json(), 'phase': str(phase)}
        return max(abs(abs(phase) - 1), abs(phase - phase2)), info

    reports = []
    for n, m in ((1, 1), (1, 2), (2, 2)):
        reports.append(ctx.run(fn, n, m))
    return merge(reports)


# Covariant operators of degree one
@claim('cov-D1', 'D1 raises the weight by one', 'covariance')
def _cov_D1(ctx):
    return ctx.covariance('D1', WI[1], 1, 1)


@claim('cov-D2', 'D2 raises the weight by two', 'covariance')
def _cov_D2(ctx):
    return ctx.covariance('D2', WI[1], 1, 1)


@claim('cov-delta1', 'delta1 lowers the weight by one', 'covariance')
def _cov_delta1(ctx):
    return ctx.covariance('delta1', WI[1], 1, 1)


@claim('cov-delta2', 'delta2 lowers the weight by two', 'covariance')
def _cov_delta2(ctx):
    return ctx.covariance('delta2', WI[1], 1, 1)


@claim('cov-heat', 'the non-holomorphic heat operator raises the weight by two', 'covariance')
def _cov_heat(ctx):
    return ctx.covariance('heat_Lkm', WI[1], 1, 1)


@claim('cov-heisenberg', 'D1_i, delta1_i, heat_m, D2_m and delta2_m are covariant on H_{1,m}', 'covariance')
def _cov_heisenberg(ctx):
    reports = []
    for m in (2, 3):
        for name, options in (('D1_i', {'i': m - 1}), ('delta1_i', {'i': 1}), ('heat_m', {}), ('D2_m', {}), ('delta2_m', {})):
            reports.append(ctx.covariance(name, WI[m], 1, m, options=options))
    return merge(reports)


# Covariant operators of general degree
def _general(ctx, name, dims=((2, 2), (2, 3)), **options):
    reports = []
    for n, m in dims:
        opts = dict(options)
        if name in ('D1_det', 'delta1_det') and m > n:
            opts['rows'] = [0, m - 1]
        reports.append(ctx.covariance(name, WI[m], n, m, options=opts))
    return merge(reports)


@claim('cov-D1-det', 'D1_det maps weight k to nk+1 and index M to nM', 'covariance')
def _cov_D1_det(ctx):
    return _general(ctx, 'D1_det')


@claim('cov-delta1-det', 'delta1_det maps weight k to nk-1 and index M to nM', 'covariance')
def _cov_delta1_det(ctx):
    return _general(ctx, 'delta1_det')


@claim('cov-heat-det', 'heat_det maps weight k to nk+2 and index M to nM', 'covariance')
def _cov_heat_det(ctx):
    return _general(ctx, 'heat_det')


@claim('cov-D2-det', 'D2_det maps weight k to nk+2 and index M to nM', 'covariance')
def _cov_D2_det(ctx):
    return _general(ctx, 'D2_det')


@claim('cov-delta2-det', 'delta2_det maps weight k to nk-2 and index M to nM', 'covariance')
def _cov_delta2_det(ctx):
    return _general(ctx, 'delta2_det')


@claim('cov-bracket', 'brackets of two Jacobi forms are Jacobi forms of index n(M1+M2)', 'covariance')
def _cov_bracket(ctx):
    reports = []
    for n, m, variant in ((1, 1, 'a'), (2, 2, 'a'), (2, 2, 'b'), (2, 3, 'b')):
        reports.append(ctx.covariance('bracket', BRACKET[m], n, m, options={'variant': variant}))
    return merge(reports)


@claim('cov-corpus', 'degree one operators map weak Jacobi forms to Jacobi-like forms', 'covariance')
def _cov_corpus(ctx):
    reports = []
    for k, wi in CORPUS.items():
        for name in ('D1', 'D2', 'delta1', 'delta2', 'heat_Lkm'):
            reports.append(ctx.covariance(name, wi, 1, 1, mode='corpus'))
    wi = WeightIndex(-2, [[1, 0], [0, 1]])
    for name in ('D1_i', 'heat_m', 'D2_m'):
        reports.append(ctx.covariance(name, wi, 1, 2, mode='corpus'))
    return merge(reports)


# q-expansions
def _corpus_generators():
    return {
        'S': inversion(1, 1),
        'T': translation([[1]], 1),
        'lambda': heisenberg([[1]], [[0]], [[0]]),
        'mu': heisenberg([[0]], [[1]], [[0]]),
    }


@claim('corpus-slash', 'the weak Jacobi forms of index one are invariant under S, T and the lattice translations', 'corpus')
def _corpus_slash(ctx):
    generators = _corpus_generators()
    names = list(generators)

    def fn(gen, name):
        x = corpus_point(1, gen)
        g = generators[name]
        return residual(slash(form, g, wi)(x), form(x)), {'point': x.to_json(), 'g': name}

    reports = []
    for k, wi in CORPUS.items():
        form = corpus_form(wi, ctx.trunc)
        reports.append(ctx.run(fn, 1, 1, [names[i % len(names)] for i in range(ctx.samples)]))
    return merge(reports)


@claim('qexp-heat-exact', 'the heat operator acts as (4n - r^2) and commutes with the theta correspondence', 'exact')
def _qexp_heat(ctx):
    def fn(gen, k):
        s = weak_jacobi(k, 21)
        heat = heat_on_series(s)
        worst = Fraction(0)
        for (n, r), c in s.coeffs.items():
            worst = max(worst, abs(heat[n, r] - (4 * n - r * r) * c))
        worst = max(worst, heat_ez_check(s))
        if theta_reconstruct(*theta_decompose(s)) != s:
            worst = max(worst, Fraction(1))
        return float(worst), {'weight': k, 'trunc': 21}

    return ctx.run(fn, 1, 1, list(CORPUS))


@claim('qexp-serre-compat', 'the Serre type heat operator matches its modular counterpart coefficientwise', 'exact')
def _qexp_serre(ctx):
    def fn(gen, k):
        return float(serre_compat_check(weak_jacobi(k, 31))), {'weight': k, 'trunc': 31}

    return ctx.run(fn, 1, 1, list(CORPUS))


# Eisenstein series
def _eisenstein_sample(gen, bound, tau_pole):
    x = box_point(1, 1, gen)
    g = random_group_element(1, 1, gen)
    y = act(g, x)
    c, d = g.C[0, 0], g.D[0, 0]
    j = c * x.z + d
    A = max(EISENSTEIN_BOUND, lattice_bound(y.z, y.w), lattice_bound(x.z, x.w)) if bound is None else bound
    return x, g, y, c, j, A


@claim('eisenstein-laws', 'twisted Eisenstein series transform as weight one and two forms up to the G2 anomaly', 'eisenstein')
def _eisenstein_laws(ctx):
    def fn(gen, case):
        x, g, y, c, j, A = _eisenstein_sample(gen, ctx.bound, ctx.tau_pole)
        z, w = x.z, x.w

        e1 = E1hat(y.z, y.w, A, ctx.tau_pole) - y.w.imag / y.z.imag
        r1 = residual(e1, j * (E1hat(z, w, A, ctx.tau_pole) - w.imag / z.imag))

        g2hat = twisted_G(2, y.z, y.w, A, ctx.tau_pole, SERIES_TOL)
        r2 = residual(g2hat, j**2 * twisted_G(2, z, w, A, ctx.tau_pole, SERIES_TOL) - 2j * math.pi * c * j)

        g2 = eisenstein_G_value(2, y.z, A)
        r3 = residual(g2, j**2 * eisenstein_G_value(2, z, A) - 2j * math.pi * c * j)

        lam, mu = (int(v) for v in gen.integers(-1, 2, size=2))
        shifted = twisted_G(1, z, w + lam * z + mu, A, ctx.tau_pole, SERIES_TOL)
        r4 = residual(shifted, twisted_G(1, z, w, A, ctx.tau_pole, SERIES_TOL) - 2j * math.pi * lam)

        return max(r1, r2, r3, r4), {'point': x.to_json(), 'g': g.to_json(), 'bound': A}

    return ctx.run(fn, 1, 1)


# Serre type operators
def _serre_options(ctx, **options):
    options.update({'bound': ctx.bound, 'tau_pole': ctx.tau_pole})
    return options


@claim('serre-a', 'the Serre type operator with G2 is covariant', 'serre')
def _serre_a(ctx):
    return ctx.covariance('serre_like', WI[1], 1, 1, options=_serre_options(ctx, variant='a'))


@claim('serre-a-holomorphy', 'the Serre type operator with G2 preserves holomorphy', 'holomorphy')
def _serre_a_holomorphy(ctx):
    op = get_operator('serre_like')
    antiholomorphic = [Coordinate('Zbar', 0, 0), Coordinate('Wbar', 0, 0)]

    def fn(gen, case):
        x = box_point(1, 1, gen)
        f = ExpPolyTestFunction.random(1, 1, gen, holomorphic=True)
        out = op(f, WI[1], **_serre_options(ctx, variant='a'))
        value = out(x)
        worst = max(abs(out.partial(x, [c])) for c in antiholomorphic)
        return worst / (1 + abs(value)), {'point': x.to_json()}

    return ctx.run(fn, 1, 1)


@claim('serre-b', 'the Serre type operator with the twisted G2 is covariant away from its poles', 'serre')
def _serre_b(ctx):
    return ctx.covariance('serre_like', WI[1], 1, 1, options=_serre_options(ctx, variant='b'))


@claim('serre-c', 'the first order Serre type operator with E1 is covariant for the coefficient 4 pi i M', 'serre')
def _serre_c(ctx):
    report = ctx.covariance('serre_like', WI[1], 1, 1, options=_serre_options(ctx, variant='c'))
    literal = ctx.covariance('serre_like', WI[1], 1, 1, samples=min(ctx.samples, 5), options=_serre_options(ctx, variant='c', literal=True))
    report.determination = f'coefficient 4*pi*i*M: {_status(report, ctx.tolerance)}; coefficient 4*pi*M: {_status(literal, ctx.tolerance)}'
    return report


@claim('serre-d', 'the mixed Serre type operator is covariant when the G2 coefficients sum to -1', 'serre')
def _serre_d(ctx):
    reports = [
        ctx.covariance('serre_like', WI[1], 1, 1, options=_serre_options(ctx, variant='d', a=-1, b=0)),
        ctx.covariance('serre_like', WI[1], 1, 1, options=_serre_options(ctx, variant='d', a=0, b=-1)),
    ]
    free = {}
    for a, b in ((1, 0), (-2, 1), (-1, -1)):
        rep = ctx.covariance('serre_like', WI[1], 1, 1, samples=min(ctx.samples, 5), options=_serre_options(ctx, variant='d', a=a, b=b, free=True))
        free[(a, b)] = rep
    scan = '; '.join(f'(a, b) = ({a}, {b}): {_status(rep, ctx.tolerance)}' for (a, b), rep in free.items())
    report = merge(reports)
    report.determination = f'a + b = -1: {_status(report, ctx.tolerance)}; {scan}'
    return report


@claim('serre-m', 'the Serre type operators on H_{1,m} are covariant', 'serre')
def _serre_m(ctx):
    reports = []
    for m, variant, options in ((2, 'a', {}), (3, 'a', {}), (2, 'b', {'row': 1}), (2, 'c', {'i': 1}), (3, 'c', {'i': 0})):
        options = _serre_options(ctx, variant=variant, **options)
        reports.append(ctx.covariance('serre_like_m', WI[m], 1, m, options=options))
    return merge(reports)


# Invariant operators
@claim('inv-H1', 'the second order operator H1 is invariant', 'invariance')
def _inv_H1(ctx):
    reports = [ctx.invariance(lambda n, m: H_j(1, n, m), n, m) for n, m in ((1, 1), (1, 2), (2, 1), (2, 2))]
    reports.append(ctx.invariance(lambda n, m: H_j(1, n, m), 1, 1, constant=True))
    return merge(reports)


@claim('inv-H2', 'the fourth order operator H2 is invariant', 'invariance')
def _inv_H2(ctx):
    return merge([ctx.invariance(lambda n, m: H_j(2, n, m), n, m) for n, m in ((1, 1), (2, 1), (1, 2))])


@claim('inv-YmYp', 'every entry of Y-Y+ is invariant', 'invariance')
def _inv_YmYp(ctx):
    reports = []
    for n, m in ((1, 2), (2, 2)):
        for k in range(m):
            for l in range(m):
                reports.append(ctx.invariance(YmYp(k, l, n, m), n, m))
    return merge(reports)


@claim('inv-TUV', 'the operators T1_kl, U_kl and V_kl are invariant', 'invariance')
def _inv_TUV(ctx):
    n, m = 1, 2
    reports = []
    for k in range(m):
        for l in range(m):
            for inv in (T_kl(1, k, l, n, m), U_kl(k, l, n, m), V_kl(k, l, n, m)):
                reports.append(ctx.invariance(inv, n, m))
    return merge(reports)


@claim('inv-laws', 'first order operator matrices follow their transformation laws', 'invariance')
def _inv_laws(ctx):
    reports = []
    for n, m in ((1, 2), (2, 2)):
        for name in ('Y+', 'Y-', 'X+', 'X-', 'K', 'Lambda', 'Y-Y+'):
            reports.append(ctx.invariance(build_invariant(name, n, m), n, m))
        for name in ('Y+k', 'Y-k'):
            reports.append(ctx.invariance(build_invariant(name, n, m, m - 1), n, m))
    return merge(reports)


# Derivative identities
def _trace_map(M, n, m):
    return JetMap(lambda P: (M @ P.V @ P.R @ P.V.T).trace(), n, m)


@claim('lemma-gradients', 'closed form gradients of the kernel match direct evaluation and finite differences', 'lemma')
def _lemma_gradients(ctx):
    def fn(gen, case):
        x = box_point(n, m, gen)
        wi = WI[m]
        M = wi.M

        direct = grad(_trace_map(M, n, m), x)
        worst = residual(grad_trace_MVRV_W(x, M), direct.dW)
        worst = max(worst, residual(grad_trace_MVRV_Z(x, M), direct.dZ))
        worst = max(worst, residual(grad_detY_Z(x), grad(JetMap(lambda P: P.Y.det(), n, m), x).dZ))

        R = JetMap(lambda P: P.R, n, m, shape=(n, n))
        dR = grad_R_Z(x)
        for k in range(n):
            for l in range(k, n):
                worst = max(worst, residual(dR[:, :, k, l], R.partial(x, [Coordinate('Z', k, l)])))

        h1 = weight_kernel(wi, n)
        value = h1(x)
        dZ, dW = grad_log_kernel(x, wi)
        kernel = grad(h1, x)
        worst = max(worst, residual(dZ, kernel.dZ / value), residual(dW, kernel.dW / value))
        fd = fd_oracle(h1, x, [Coordinate('W', 0, 0)])
        worst = max(worst, residual(fd.value / value, dW[0, 0]))
        return worst, {'point': x.to_json()}

    reports = []
    for n, m in ((1, 1), (1, 2), (2, 1), (2, 2), (2, 3), (3, 2)):
        reports.append(ctx.run(fn, n, m))
    return merge(reports)


@claim('lemma-hessian', 'second W derivatives of f h1 and the cofactor trace identity', 'lemma')
def _lemma_hessian(ctx):
    def fn(gen, case):
        x = box_point(n, m, gen)
        wi = WI[m]
        f = ExpPolyTestFunction.random(n, m, gen)
        i, j = (int(v) for v in gen.integers(0, m, size=2))

        h1 = weight_kernel(wi, n)
        S = PointJet.seed(x, 2)
        H = S.dW(S.dW(ProductMap(f, h1).jet(S))).value
        direct = H[:, j, :, i] / h1(x)
        worst = residual(hessian_W_kernel(f, x, wi, i, j), direct)

        identity = cofactor_trace_identity_check(f, x, wi, seed=gen)
        worst = max(worst, identity / (1 + abs(f(x))))
        return worst, {'point': x.to_json(), 'rows': [i, j]}

    reports = []
    for n, m in ((1, 1), (1, 2), (2, 2), (2, 3)):
        reports.append(ctx.run(fn, n, m))
    return merge(reports)


@claim('kernel-transform', 'the kernel h1 transforms with the inverse squared modulus of the factor of automorphy', 'lemma')
def _kernel_transform(ctx):
    def fn(gen, case):
        x = box_point(n, m, gen)
        g = random_group_element(n, m, gen)
        return kernel_transform_residual(WI[m], g, x), {'point': x.to_json(), 'g': g.to_json()}

    reports = []
    for n, m in ((1, 1), (1, 2), (2, 2)):
        reports.append(ctx.run(fn, n, m))
    return merge(reports)


@claim('degeneration', 'operators of general degree and of H_{1,m} reduce to the degree one operators', 'degeneration')
def _degeneration(ctx):
    wi = WI[1]
    M = wi.M[0, 0]
    pairs = [
        ('D1_det', 'D1', 1), ('delta1_det', 'delta1', 1), ('heat_det', 'heat_Lkm', M), ('D2_det', 'D2', 1),
        ('delta2_det', 'delta2', 1), ('D1_i', 'D1', 1), ('delta1_i', 'delta1', 1), ('heat_m', 'heat_Lkm', 1),
        ('D2_m', 'D2', 1), ('delta2_m', 'delta2', 1),
    ]

    def fn(gen, case):
        general, degree1, factor = case
        x = box_point(1, 1, gen)
        f = ExpPolyTestFunction.random(1, 1, gen)
        lhs = get_operator(general)(f, wi)(x) * factor
        rhs = get_operator(degree1)(f, wi)(x)
        return residual(lhs, rhs), {'point': x.to_json(), 'operators': [general, degree1]}

    return ctx.run(fn, 1, 1, [pairs[i % len(pairs)] for i in range(max(ctx.samples, len(pairs)))])


# Experiments
@claim('bracket-weight-scan', 'the brackets only intertwine for their registered weight and index', 'experiment')
def _bracket_weight_scan(ctx):
    n = m = 2
    wis = BRACKET[m]
    op = get_operator('bracket')
    reports = []
    lines = []
    for variant in ('a', 'b'):
        registered = op.signature(wis, n, variant)
        report = ctx.covariance(op, wis, n, m, options={'variant': variant})
        reports.append(report)
        scan = [f'registered (k={registered.k}) {_status(report, ctx.tolerance)}']
        for label, candidate in bracket_candidates(*wis, n):
            if candidate == registered:
                continue
            rep = ctx.covariance(op, wis, n, m, samples=min(ctx.samples, 3), options={'variant': variant}, out=candidate)
            scan.append(f'{label} (k={candidate.k}) {_status(rep, ctx.tolerance)}')
        lines.append(f'{variant}: ' + ', '.join(scan))
    return merge(reports, '; '.join(lines))


@claim('d2det-symmetrization', 'the cross term of D2_det and delta2_det needs to be symmetrized', 'experiment')
def _d2det_symmetrization(ctx):
    reports = []
    lines = []
    for name in ('D2_det', 'delta2_det'):
        report = _general(ctx, name, symmetric=True)
        plain = _general(ctx, name, dims=((2, 2),), symmetric=False)
        reports.append(report)
        lines.append(f'{name} symmetrized: {_status(report, ctx.tolerance)}, as is: {_status(plain, ctx.tolerance)}')
    return merge(reports, '; '.join(lines))


# Negative controls
@claim('neg-wrong-weight', 'D1 with an output weight that is one too high does not intertwine', 'covariance', negative=True)
def _neg_wrong_weight(ctx):
    out = get_operator('D1').signature(WI[1], 1)
    return ctx.covariance('D1', WI[1], 1, 1, out=out.with_weight(out.k + 1))


@claim('neg-wrong-weight-det', 'D1_det with an output weight that is one too high does not intertwine', 'covariance', negative=True)
def _neg_wrong_weight_det(ctx):
    out = get_operator('D1_det').signature(WI[2], 2)
    return ctx.covariance('D1_det', WI[2], 2, 2, out=out.with_weight(out.k + 1))


@claim('neg-dropped-term', 'the heat operator without its 1/y term does not intertwine', 'covariance', negative=True)
def _neg_dropped_term(ctx):
    return ctx.covariance('heat_hol', WI[1], 1, 1)


@claim('neg-serre-d', 'the mixed Serre type operator with a + b = 1 does not intertwine', 'serre', negative=True)
def _neg_serre_d(ctx):
    return ctx.covariance('serre_like', WI[1], 1, 1, options=_serre_options(ctx, variant='d', a=1, b=0, free=True))


@claim('neg-invariance', 'Y+ is not invariant', 'invariance', negative=True)
def _neg_invariance(ctx):
    op = build_invariant('Y+', 2, 2)
    return ctx.invariance(InvariantOperator('Y+ as invariant', op.matrix), 2, 2)


@claim('neg-connection', 'the connection of one metric does not match the Christoffel symbols of another', 'connection', negative=True)
def _neg_connection(ctx):
    return ctx.connection(2, 2, METRIC_PARAMS[1], numeric_params=METRIC_PARAMS[0])


@claim('neg-corpus-weight', 'the weak Jacobi form of weight -2 is not invariant under S with weight 0', 'corpus', negative=True)
def _neg_corpus_weight(ctx):
    form = corpus_form(CORPUS[-2], ctx.trunc)
    wrong = CORPUS[-2].with_weight(0)
    S = inversion(1, 1)

    def fn(gen, case):
        x = corpus_point(1, gen)
        return residual(slash(form, S, wrong)(x), form(x)), {'point': x.to_json()}

    return ctx.run(fn, 1, 1)


@claim('neg-g2-anomaly', 'G2 without its anomaly does not transform as a weight two form', 'eisenstein', negative=True)
def _neg_g2_anomaly(ctx):
    def fn(gen, case):
        x, g, y, c, j, A = _eisenstein_sample(gen, ctx.bound, ctx.tau_pole)
        return residual(eisenstein_G_value(2, y.z, A), j**2 * eisenstein_G_value(2, x.z, A)), {'point': x.to_json(), 'g': g.to_json()}

    return ctx.run(fn, 1, 1)
