"""
Suite configurations |br|
Every file in this folder defines a ``params`` variable, that can be loaded with :func:`~sjo.cfg.suite_path`
and :meth:`sjo.verify.SuiteParameters.from_file`.
"""

import os
from ..errors import ConfigError

__all__ = ['suite_path', 'SUITES']

SUITES = ('default', 'quick')


def suite_path(name):
    """ Path of a bundled suite configuration, or ``name`` itself if it is an existing file. """
    if os.path.isfile(name):
        return name
    if name not in SUITES:
        raise ConfigError(f'Unknown suite "{name}", should be one of {SUITES} or a path to a configuration file')
    return os.path.join(os.path.dirname(os.path.abspath(__file__)), f'{name}.py')
