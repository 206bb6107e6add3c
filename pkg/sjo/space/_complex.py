#
#   Text representation of complex numbers
#   Copyright EAVISE
#

import re
from numbers import Number

__all__ = ['format_complex', 'parse_complex']

_number = r'(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?'
_real_re = re.compile(rf'^[+-]?{_number}$')
_imag_re = re.compile(rf'^(?P<sign>[+-]?)(?P<im>{_number})?[ij]$')
_complex_re = re.compile(rf'^(?P<re>[+-]?{_number})(?P<sign>[+-])(?P<im>{_number})?[ij]$')


def format_complex(value):
    """ Format a complex number as ``"a+bi"`` with the shortest round-tripping representation of both parts. """
    value = complex(value)
    sign = '-' if str(value.imag).startswith('-') else '+'
    return f'{value.real!r}{sign}{abs(value.imag)!r}i'


def parse_complex(text):
    """ Parse ``"a+bi"``, ``"a"``, ``"bi"`` or ``"i"``; Numbers are converted to complex. """
    if isinstance(text, Number):
        return complex(text)
    if not isinstance(text, str):
        raise ValueError(f'Cannot parse {text!r} as a complex number')

    text = text.replace(' ', '')
    if _real_re.match(text):
        return complex(float(text), 0.0)

    match = _imag_re.match(text)
    if match:
        imag = float(match.group('im')) if match.group('im') else 1.0
        return complex(0.0, -imag if match.group('sign') == '-' else imag)

    match = _complex_re.match(text)
    if match:
        imag = float(match.group('im')) if match.group('im') else 1.0
        return complex(float(match.group('re')), -imag if match.group('sign') == '-' else imag)

    raise ValueError(f'Cannot parse "{text}" as a complex number')
