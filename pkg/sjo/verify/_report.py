#
#   Verification reports
#   Copyright EAVISE
#

import json
import logging
import math
from collections import OrderedDict

__all__ = ['VerificationReport', 'REPORT_KEYS']
log = logging.getLogger(__name__)

REPORT_KEYS = ('claim', 'anchor', 'n', 'm', 'samples', 'max_residual', 'mean_residual', 'tolerance', 'pass', 'seed', 'elapsed_ms')


class VerificationReport:
    """ Outcome of one claim.

    Args:
        claim (str): Claim identifier
        anchor (str): Short description of the statement that is checked
        n (int or list): Degree(s) that were sampled
        m (int or list): Number(s) of rows of W that were sampled
        residuals (list): One residual per sample
        tolerance (float): Largest allowed residual
        seed (int): Seed of the suite
        elapsed_ms (float, optional): Wall clock time; Default **0**
        negative (bool, optional): Negative control, which passes when the largest residual exceeds the tolerance; Default **False**
        worst (dict, optional): Serialized sample with the largest residual
        determination (str, optional): Written outcome of an experiment
        resampled (int, optional): Number of degenerate samples that were replaced; Default **0**

    Note:
        A positive claim passes when its largest residual is below the tolerance.
        The residual of an exact claim is 0 exactly, and the tolerance 0 is used to require that.
    """
    def __init__(self, claim, anchor, n, m, residuals, tolerance, seed, elapsed_ms=0, negative=False, worst=None, determination=None, resampled=0):
        self.claim = claim
        self.anchor = anchor
        self.n = n
        self.m = m
        self.residuals = [float(r) for r in residuals]
        self.tolerance = float(tolerance)
        self.seed = seed
        self.elapsed_ms = elapsed_ms
        self.negative = negative
        self.worst = worst
        self.determination = determination
        self.resampled = resampled

    def __repr__(self):
        status = 'pass' if self.passed else 'FAIL'
        return f'{self.__class__.__name__}({self.claim}, {status}, max={self.max_residual:.3e}, tol={self.tolerance:.1e}, samples={self.samples})'

    @property
    def samples(self):
        return len(self.residuals)

    @property
    def max_residual(self):
        return max(self.residuals, default=0.0)

    @property
    def mean_residual(self):
        if not self.residuals:
            return 0.0
        return math.fsum(self.residuals) / len(self.residuals)

    @property
    def passed(self):
        if any(math.isnan(r) for r in self.residuals):
            return False
        if self.negative:
            return self.samples > 0 and self.max_residual > self.tolerance
        if self.tolerance == 0:
            return self.max_residual == 0
        return self.max_residual < self.tolerance

    def merge(self, other):
        """ Combine the samples of two reports of the same claim. """
        if other.claim != self.claim:
            raise ValueError(f'Cannot merge reports of different claims [{self.claim}, {other.claim}]')
        worst = self.worst if self.max_residual >= other.max_residual else other.worst
        return VerificationReport(
            self.claim, self.anchor, _merged(self.n, other.n), _merged(self.m, other.m),
            self.residuals + other.residuals, self.tolerance, self.seed,
            self.elapsed_ms + other.elapsed_ms, self.negative, worst,
            self.determination or other.determination, self.resampled + other.resampled,
        )

    def to_json(self):
        data = OrderedDict([
            ('claim', self.claim),
            ('anchor', self.anchor),
            ('n', self.n),
            ('m', self.m),
            ('samples', self.samples),
            ('max_residual', self.max_residual),
            ('mean_residual', self.mean_residual),
            ('tolerance', self.tolerance),
            ('pass', self.passed),
            ('seed', self.seed),
            ('elapsed_ms', self.elapsed_ms),
        ])
        if self.negative:
            data['negative'] = True
        if self.resampled:
            data['resampled'] = self.resampled
        if self.determination is not None:
            data['determination'] = self.determination
        if self.worst is not None:
            data['worst'] = self.worst
        return data

    def dumps(self):
        return json.dumps(self.to_json(), indent=2)


def _merged(a, b):
    a = a if isinstance(a, list) else [a]
    b = b if isinstance(b, list) else [b]
    out = sorted(set(a) | set(b))
    return out[0] if len(out) == 1 else out
