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

from __future__ import absolute_import, division, print_function, unicode_literals

from casimirpolder.core import ANGSTROM, EV, HBAR

from version import __version__


class C60HydrogenParams(object):
    """Hydrogen atom near a C60 molecule modelled as a plasma shell"""
    NAME = 'c60-hydrogen'
    RADIUS = 0.342e-9
    # Q = Omega R = 4.94e-2
    PLASMA_OMEGA = 4.94e-2 / 0.342e-9
    OMEGA_A = 11.65 * EV / HBAR
    ALPHA0 = 0.667 * ANGSTROM ** 3
    SEPARATION = 0.5 * 0.342e-9
    TEMPERATURE = 300.0


class IdealSphereParams(object):
    """Hydrogen atom 100 nm from an ideally conducting 1 um sphere"""
    NAME = 'ideal-sphere'
    RADIUS = 1e-6
    PLASMA_OMEGA = float('inf')
    OMEGA_A = 11.65 * EV / HBAR
    ALPHA0 = 0.667 * ANGSTROM ** 3
    SEPARATION = 1e-7
    TEMPERATURE = 300.0


PRESETS = {cls.NAME: cls for cls in (C60HydrogenParams, IdealSphereParams)}

"""Master global setting for the preset in use

Don't set this directly, use SelectParams() instead.
"""
params = C60HydrogenParams()


def SelectParams(name):
    """Select the preset system to use

    name is one of 'c60-hydrogen' or 'ideal-sphere'

    Default preset is 'c60-hydrogen'
    """
    global params
    try:
        params = PRESETS[name]()
    except KeyError:
        raise ValueError('Unknown preset %r' % name)
    return params


def preset_system(name=None, temperature=None):
    """PhysicalSystem of a preset, the selected one by default"""
    from casimirpolder.model import PhysicalSystem
    if name is None:
        p = params
    else:
        try:
            p = PRESETS[name]()
        except KeyError:
            raise ValueError('Unknown preset %r' % name)
    return PhysicalSystem(radius=p.RADIUS, plasma_omega=p.PLASMA_OMEGA, omega_a=p.OMEGA_A,
                          alpha0=p.ALPHA0, separation=p.SEPARATION,
                          temperature=p.TEMPERATURE if temperature is None else temperature)


__all__ = (
    '__version__',
    'C60HydrogenParams',
    'IdealSphereParams',
    'PRESETS',
    'params',
    'SelectParams',
    'preset_system',
)
