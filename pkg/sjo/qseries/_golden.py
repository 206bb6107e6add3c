#
#   Golden files of Fourier-Jacobi coefficients
#   Copyright EAVISE
#

import io
import logging
import re
from collections import namedtuple
from fractions import Fraction
from pathlib import Path
import pandas as pd

from ..errors import ConfigError
from ._corpus import weak_jacobi
from ._series import FourierJacobiSeries

__all__ = ['GOLDEN_COLUMNS', 'GoldenCheck', 'golden_text', 'write_golden', 'read_golden', 'check_golden']
log = logging.getLogger(__name__)

GOLDEN_COLUMNS = ['n_num', 'r_num', 'coeff_num', 'coeff_den']
HEADER = re.compile(r'^#\s*weight\s+(\S+)\s+index\s+(\S+)\s+dq\s+(\d+)\s+dz\s+(\d+)\s+trunc\s+(\S+)\s*$')

GoldenCheck = namedtuple('GoldenCheck', ['ok', 'mismatches', 'expected', 'actual'])
GoldenCheck.__doc__ = """ Result of :func:`check_golden`, with the differing ``(n, r)`` keys in ``mismatches``. """


def golden_text(series, provenance=None):
    """ Golden file contents of a series.

    The first line is the header ``# weight k index M dq a dz b trunc T``, followed by an optional provenance comment
    and CSV rows ``n_num,r_num,coeff_num,coeff_den`` sorted by (n, r), where the exponents are ``n_num/dq`` and ``r_num/dz``.
    The denominators are the smallest ones that represent every exponent, which divide 24 and 2.
    Files written with larger divisors of 24 and 2 read back to the same series.
    """
    dq, dz = series.dq, series.dz
    lines = [f'# weight {series.weight} index {series.index} dq {dq} dz {dz} trunc {series.trunc}']
    if provenance:
        lines.append(f'# {provenance}')
    lines.append(','.join(GOLDEN_COLUMNS))
    for (n, r), c in series.items():
        lines.append(f'{int(n * dq)},{int(r * dz)},{c.numerator},{c.denominator}')
    return '\n'.join(lines) + '\n'


def write_golden(series, path, provenance=None):
    """ Write a series to a golden file, see :func:`golden_text`. """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(golden_text(series, provenance))
    log.info(f'Wrote {len(series.coeffs)} coefficients to {path}')


def read_golden(source):
    """ Read a golden file.

    Args:
        source (str, pathlib.Path or file): Path or text stream

    Returns:
        sjo.qseries.FourierJacobiSeries
    """
    if hasattr(source, 'read'):
        text = source.read()
    else:
        text = Path(source).read_text()

    header = HEADER.match(text.split('\n', 1)[0])
    if header is None:
        raise ConfigError(f'Invalid golden file header [{text.splitlines()[0] if text else ""}]')
    weight, index, dq, dz, trunc = header.groups()
    dq, dz = int(dq), int(dz)
    if dq < 1 or dz < 1 or 24 % dq or 2 % dz:
        raise ConfigError(f'Exponent denominators should divide 24 (q) and 2 (zeta) [dq {dq}, dz {dz}]')

    df = pd.read_csv(io.StringIO(text), comment='#', dtype=str)
    if list(df.columns) != GOLDEN_COLUMNS:
        raise ConfigError(f'Golden file columns should be {GOLDEN_COLUMNS} [{list(df.columns)}]')

    coeffs = {}
    for row in df.itertuples(index=False):
        key = (Fraction(int(row.n_num), dq), Fraction(int(row.r_num), dz))
        coeffs[key] = Fraction(int(row.coeff_num), int(row.coeff_den))
    weight = None if weight == 'None' else Fraction(weight)
    index = None if index == 'None' else Fraction(index)
    return FourierJacobiSeries(coeffs, Fraction(trunc), weight, index)


def check_golden(source, series=None):
    """ Compare a golden file with a freshly computed series.

    Args:
        source (str, pathlib.Path or file): Golden file
        series (sjo.qseries.FourierJacobiSeries, optional): Series to compare with; Default **weak Jacobi form of the weight in the header**

    Returns:
        sjo.qseries.GoldenCheck
    """
    expected = read_golden(source)
    if series is None:
        series = weak_jacobi(int(expected.weight), expected.trunc)

    keys = set(expected.coeffs) | set(series.coeffs)
    mismatches = sorted(k for k in keys if k[0] < min(expected.trunc, series.trunc) and expected.coeffs.get(k) != series.coeffs.get(k))
    ok = not mismatches and expected.trunc == series.trunc and (expected.weight, expected.index) == (series.weight, series.index)
    if not ok:
        log.warning(f'Golden file differs from the computed series [{len(mismatches)} coefficients]')
    return GoldenCheck(ok, mismatches, expected, series)
