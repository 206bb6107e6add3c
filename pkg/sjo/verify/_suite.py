#
#   Verification suite runner
#   Copyright EAVISE
#

import sys
import json
import logging
from collections import OrderedDict
import pandas as pd
from tqdm import tqdm

from ..errors import ConfigError
from ._claims import CLAIMS, get_claim
from ._parameter import SuiteParameters

__all__ = ['run_suite', 'suite_json', 'summary']
log = logging.getLogger(__name__)


def run_suite(params=None, progress=True):
    """ Check a list of claims.

    Args:
        params (sjo.verify.SuiteParameters, optional): Suite parameters; Default **SuiteParameters()**
        progress (bool, optional): Show a progress bar on stderr; Default **True**

    Returns:
        tuple: ``(reports, status)`` with the list of :class:`~sjo.verify.VerificationReport` and whether every claim passed

    Note:
        An empty claim list succeeds.
        With ``params.timing = False`` the reports only depend on the parameters, so two runs give byte identical output.
    """
    if params is None:
        params = SuiteParameters()
    elif not isinstance(params, SuiteParameters):
        raise ConfigError(f'Suite parameters should be a SuiteParameters object [{type(params).__name__}]')
    params.validate()

    ids = list(CLAIMS) if params.claims is None else list(params.claims)
    claims = [get_claim(i) for i in ids]
    log.info(f'Checking {len(claims)} claims with seed {params.seed} and {params.samples} samples')

    reports = []
    for c in tqdm(claims, desc='claims', file=sys.stderr, disable=not progress or not claims, leave=False):
        reports.append(c.run(params))

    status = all(r.passed for r in reports)
    if reports:
        log.info('Suite summary\n' + summary(reports).to_string(index=False))
    failed = [r.claim for r in reports if not r.passed]
    if failed:
        log.error(f'{len(failed)} claims failed: {failed}')
    return reports, status


def summary(reports):
    """ One row per report, as a pandas DataFrame. """
    return pd.DataFrame(
        [(r.claim, r.samples, r.max_residual, r.tolerance, r.negative, r.passed) for r in reports],
        columns=['claim', 'samples', 'max_residual', 'tolerance', 'negative', 'pass'],
    )


def suite_json(reports, params, status=None):
    """ Serialize the outcome of :func:`run_suite`. """
    if status is None:
        status = all(r.passed for r in reports)
    data = OrderedDict([
        ('seed', params.seed),
        ('tolerance_version', params.tolerance_version),
        ('claims', [r.to_json() for r in reports]),
        ('pass', status),
    ])
    return json.dumps(data, indent=2)
