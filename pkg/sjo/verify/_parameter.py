#
#   Verification suite parameter container
#   Copyright EAVISE
#

import os
import json
import logging
import importlib.util

from ..errors import ConfigError
from ._tolerance import TOLERANCES, TOLERANCE_VERSION

__all__ = ['SuiteParameters']
log = logging.getLogger(__name__)


def _default_threads():
    value = os.environ.get('SJO_THREADS', '1')
    try:
        threads = int(value)
    except ValueError:
        raise ConfigError(f'SJO_THREADS should be an integer [{value}]') from None
    return max(threads, 1)


class SuiteParameters:
    """ This class is a container for the parameters of a verification suite.
    It allows to store the configuration of a run next to its report and reload it at a later stage.

    Args:
        **kwargs (dict, optional): Keywords arguments that will be set as attributes of the instance and serialized as well

    Attributes:
        self.seed: Seed of the suite; Gets initialized to **0**
        self.samples: Number of samples per claim; Gets initialized to **20**
        self.claims: Claim identifiers to run, None runs every registered claim; Gets initialized to **None**
        self.tolerance_version: Version of the tolerance registry; Gets initialized to the latest version
        self.tolerances: Tolerance per claim family, overriding the registry; Gets initialized to **{}**
        self.threads: Number of worker threads; Gets initialized to **SJO_THREADS** or **1**
        self.timing: Measure wall clock times, disable for byte identical reports; Gets initialized to **True**
        self.trunc: Truncation of q-expansions; Gets initialized to **50**
        self.eisenstein_bound: Number of lattice rows of the Eisenstein sums, None chooses from the point; Gets initialized to **None**
        self.pole_distance: Smallest allowed distance to the poles of the twisted Eisenstein series; Gets initialized to **1e-3**
        self.*: All arguments passed to the initialization function can be accessed as attributes of this object

    Note:
        If you pass a ``kwarg`` that starts with an **_**,
        the parameter class will store it as a regular property without the leading **_**, but it will not serialize this variable.
        This allows you to store all parameters in this object, regardless of whether you want to serialize it.

        >>> param = sjo.verify.SuiteParameters()
        >>> param._dummy = 666
        >>> print(param.dummy)
        666
    """
    __init_done = False

    def __init__(self, **kwargs):
        self.seed = 0
        self.samples = 20
        self.claims = None
        self.tolerance_version = TOLERANCE_VERSION
        self.tolerances = {}
        self.threads = _default_threads()
        self.timing = True
        self.trunc = 50
        self.eisenstein_bound = None
        self.pole_distance = 1e-3

        self.__no_serialize = []
        for key, val in kwargs.items():
            serialize = not key.startswith('_')
            if not serialize:
                key = key[1:]

            if key in self.__dict__ and serialize:
                super().__setattr__(key, val)
            elif not hasattr(self, key):
                setattr(self, key, val)
                if not serialize:
                    self.__no_serialize.append(key)
            else:
                log.error(f'{key} attribute already exists as a SuiteParameter and will not be overwritten.')

        self.__init_done = True
        self.validate()

    def __setattr__(self, item, value):
        """ Store extra variables in this container class.
        This custom function allows to store objects after creation and mark whether are not you want to serialize them,
        by prefixing them with an underscore.
        """
        if item in self.__dict__ or not self.__init_done:
            super().__setattr__(item, value)
        elif item[0] == '_':
            if item[1:] in self.__dict__:
                raise AttributeError(f'{item} already stored in this object! Use {item[1:]} to access and modify it.')
            self.__no_serialize.append(item[1:])
            super().__setattr__(item[1:], value)
        else:
            super().__setattr__(item, value)

    def __repr__(self):
        """ Print all values stored in the object.
        Objects that will not be serialized are marked with an asterisk.
        """
        s = f'{self.__class__.__name__}('
        for k in sorted(self.__dict__.keys()):
            if k.startswith('_SuiteParameters__'):
                continue

            val = self.__dict__[k]
            valrepr = str(val)
            if '\n' in valrepr:
                valrepr = val.__class__.__name__
            if k in self.__no_serialize:
                k += '*'

            s += f'\n  {k} = {valrepr}'

        return s + '\n)'

    def validate(self):
        if not isinstance(self.seed, int) or self.seed < 0:
            raise ConfigError(f'Seed should be a non negative integer [{self.seed}]')
        if not isinstance(self.samples, int) or self.samples < 1:
            raise ConfigError(f'Number of samples should be a positive integer [{self.samples}]')
        if self.tolerance_version not in TOLERANCES:
            raise ConfigError(f'Unknown tolerance version "{self.tolerance_version}", should be one of {list(TOLERANCES)}')
        if not isinstance(self.threads, int) or self.threads < 1:
            raise ConfigError(f'Number of threads should be a positive integer [{self.threads}]')
        if self.claims is not None and isinstance(self.claims, str):
            self.claims = [self.claims]
        unknown = set(self.tolerances) - set(TOLERANCES[self.tolerance_version])
        if unknown:
            raise ConfigError(f'Unknown tolerance families {sorted(unknown)}')

    def tolerance(self, family):
        """ Tolerance of a claim family, taking overrides into account. """
        if family in self.tolerances:
            return float(self.tolerances[family])
        try:
            return TOLERANCES[self.tolerance_version][family]
        except KeyError:
            raise ConfigError(f'Unknown tolerance family "{family}"') from None

    @classmethod
    def from_file(cls, path, variable='params', **kwargs):
        """ Create a SuiteParameters object from a dictionary in an external configuration file.
        This function will import a file by its path and extract a variable to use as SuiteParameters.

        Args:
            path (str or path-like object): Path to the configuration python file
            variable (str, optional): Variable to extract from the configuration file; Default **'params'**
            **kwargs (dict, optional): Extra parameters that are passed to the extracted variable if it is a callable object

        Note:
            The extracted variable can be one of the following:

            - :class:`sjo.verify.SuiteParameters`: This object will simply be returned
            - ``dictionary``: The dictionary will be expanded as the parameters for initializing a new :class:`~sjo.verify.SuiteParameters` object
            - ``callable``: The object will be called with the optional kwargs and should return either a :class:`~sjo.verify.SuiteParameters` object or a ``dictionary``
        """
        try:
            spec = importlib.util.spec_from_file_location('sjo.cfg', path)
            cfg = importlib.util.module_from_spec(spec)
            spec.loader.exec_module(cfg)
        except (AttributeError, FileNotFoundError) as err:
            raise ConfigError(f'Failed to import the file [{path}]. Are you sure it is a valid python file?') from err

        try:
            params = getattr(cfg, variable)
        except AttributeError as err:
            raise ConfigError(f'Configuration variable [{variable}] not found in file [{path}]') from err

        if callable(params):
            params = params(**kwargs)

        if isinstance(params, cls):
            return params
        elif isinstance(params, dict):
            return cls(**params)
        else:
            raise ConfigError(f'Unkown type for configuration variable {variable} [{type(params).__name__}]. This variable should be a dictionary or sjo.verify.SuiteParameters object.')

    def state(self):
        """ Serializable parameters. """
        return {k: v for k, v in vars(self).items() if not k.startswith('_SuiteParameters__') and k not in self.__no_serialize}

    def save(self, filename):
        """ Serialize all the parameters to a JSON file. """
        with open(filename, 'w') as f:
            json.dump(self.state(), f, indent=2, sort_keys=True)

    def load(self, filename):
        """ Load the parameters from a serialized JSON file. """
        log.info(f'Loading parameters from file [{filename}]')
        with open(filename, 'r') as f:
            state = json.load(f)

        for k, v in state.items():
            setattr(self, k, v)
        self.validate()
