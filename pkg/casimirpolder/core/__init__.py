# Copyright (C) 2024-2026 The python-casimirpolder developers
#
# This file is part of python-casimirpolder.
#
# It is subject to the license terms in the LICENSE file found in the top-level
# directory of this distribution.
#
# No part of python-casimirpolder, including this file, may be copied, modified,
# propagated, or distributed except according to the terms contained in the
# LICENSE file.

"""Core definitions: physical constants, errors and immutable records

Everything in here is context independent; the numerical modules build on it.
"""

from __future__ import absolute_import, division, print_function, unicode_literals

import math

import numpy as np
import scipy.constants

# CODATA values, SI units
HBAR = scipy.constants.hbar
C_LIGHT = scipy.constants.c
K_B = scipy.constants.k
EV = scipy.constants.electron_volt
ANGSTROM = scipy.constants.angstrom
HBAR_C = HBAR * C_LIGHT


class CasimirError(Exception):
    """Base class for all errors raised by casimirpolder

    Subclasses register themselves by ERROR_CODE, the short tag written into
    sweep rows when a point fails, and carry the EXIT_CODE the command line
    front end returns for them.
    """

    ERROR_CODE = 'error'
    EXIT_CODE = 1
    SUBCLS_BY_CODE = {}

    @classmethod
    def _register_subcls(cls, subcls):
        cls.SUBCLS_BY_CODE[subcls.ERROR_CODE] = subcls
        return subcls


@CasimirError._register_subcls
class DomainError(CasimirError, ValueError):
    """Argument outside the mathematical domain of an operation"""

    ERROR_CODE = 'domain'

    def __init__(self, msg, name=None, value=None):
        super(DomainError, self).__init__(msg)
        self.name = name
        self.value = value


@CasimirError._register_subcls
class CapabilityError(CasimirError):
    """Argument inside the domain but outside what is supported"""

    ERROR_CODE = 'capability'

    def __init__(self, msg, limit=None):
        super(CapabilityError, self).__init__(msg)
        self.limit = limit


@CasimirError._register_subcls
class ConvergenceError(CasimirError):
    """A series or quadrature did not converge within its caps

    partial is the best value obtained, bound the estimated size of what was
    left out.
    """

    ERROR_CODE = 'convergence'
    EXIT_CODE = 2

    def __init__(self, msg, partial=None, bound=None):
        super(ConvergenceError, self).__init__(msg)
        self.partial = partial
        self.bound = bound


@CasimirError._register_subcls
class SingularityError(CasimirError):
    """A continued Jost function vanishes on the integration path"""

    ERROR_CODE = 'singularity'
    EXIT_CODE = 2

    def __init__(self, msg, location=None):
        super(SingularityError, self).__init__(msg)
        self.location = location


@CasimirError._register_subcls
class RegimeError(CasimirError):
    """An asymptotic formula was requested outside its validity"""

    ERROR_CODE = 'regime'

    def __init__(self, msg, validity=()):
        super(RegimeError, self).__init__(msg)
        self.validity = validity


@CasimirError._register_subcls
class PrecisionError(CasimirError):
    """A Richardson table did not settle"""

    ERROR_CODE = 'precision'
    EXIT_CODE = 2

    def __init__(self, msg, estimate=None, error=None):
        super(PrecisionError, self).__init__(msg)
        self.estimate = estimate
        self.error = error


@CasimirError._register_subcls
class SearchError(CasimirError):
    """No bracket found for a root or threshold search"""

    ERROR_CODE = 'search'
    EXIT_CODE = 2

    def __init__(self, msg, bracket=None):
        super(SearchError, self).__init__(msg)
        self.bracket = bracket


@CasimirError._register_subcls
class ConfigError(CasimirError, ValueError):
    """Invalid run configuration; field is the dotted path of the culprit"""

    ERROR_CODE = 'config'

    def __init__(self, msg, field=None):
        super(ConfigError, self).__init__(msg)
        self.field = field


@CasimirError._register_subcls
class OutputError(CasimirError, IOError):
    """Results could not be written"""

    ERROR_CODE = 'io'
    EXIT_CODE = 3

    def __init__(self, msg, path=None):
        super(OutputError, self).__init__(msg)
        self.path = path


class RegimeWarning(UserWarning):
    """An asymptotic formula is used with little room in its validity"""


class ImmutableRecord(object):
    """Base class for immutable value objects

    Subclasses list their fields in __slots__; instances are set up once in
    __init__ and can not be modified afterwards.
    """
    __slots__ = []

    def __init__(self, **kwargs):
        for name in self.__slots__:
            object.__setattr__(self, name, kwargs.pop(name))
        if kwargs:
            raise TypeError('Unexpected fields %r for %s' %
                            (sorted(kwargs), self.__class__.__name__))

    def __setattr__(self, name, value):
        raise AttributeError('Object is immutable')

    def __delattr__(self, name):
        raise AttributeError('Object is immutable')

    def __eq__(self, other):
        if other.__class__ is not self.__class__:
            return NotImplemented
        return all(getattr(self, n) == getattr(other, n) for n in self.__slots__)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(tuple(getattr(self, n) for n in self.__slots__))

    def __repr__(self):
        return '%s(%s)' % (self.__class__.__name__,
                           ', '.join('%s=%r' % (n, getattr(self, n))
                                     for n in self.__slots__))

    def replace(self, **kwargs):
        """Return a copy with some fields replaced"""
        fields = self.to_dict()
        fields.update(kwargs)
        return self.__class__(**fields)

    def to_dict(self):
        return dict((n, getattr(self, n)) for n in self.__slots__)


def bose(v):
    """1/(exp(v) - 1) for v > 0, without overflow for large v"""
    v = np.asarray(v, dtype=float)
    q = np.exp(-v)
    return q / -np.expm1(-v)


def sinh_damping(v):
    """(v/sinh v)**2, evaluated in log space so large v underflows cleanly"""
    v = np.asarray(v, dtype=float)
    with np.errstate(divide='ignore', invalid='ignore'):
        out = np.exp(2.0 * (np.log(2.0 * v) - v - np.log(-np.expm1(-2.0 * v))))
    return np.where(v == 0.0, 1.0, out)


def check_positive(name, value, allow_zero=False):
    """Raise DomainError unless value is a finite positive number"""
    try:
        value = float(value)
    except (TypeError, ValueError):
        raise DomainError('%s must be a number, got %r' % (name, value), name, value)
    if math.isnan(value) or math.isinf(value) or value < 0.0 \
            or (value == 0.0 and not allow_zero):
        raise DomainError('%s must be %s, got %r' %
                          (name, 'non-negative' if allow_zero else 'positive', value),
                          name, value)
    return value


__all__ = (
    'HBAR',
    'C_LIGHT',
    'K_B',
    'EV',
    'ANGSTROM',
    'HBAR_C',
    'CasimirError',
    'DomainError',
    'CapabilityError',
    'ConvergenceError',
    'SingularityError',
    'RegimeError',
    'PrecisionError',
    'SearchError',
    'ConfigError',
    'OutputError',
    'RegimeWarning',
    'ImmutableRecord',
    'bose',
    'sinh_damping',
    'check_positive',
)
