# :coding: utf-8
# :copyright: Copyright (c) 2024 ftrack
import math

import numpy as np

from mott_track.model.config import MultiIndex


def energy_level(eps, n):
    '''Return the oscillator energy eps * (|n| + 3/2) of level *n*.'''
    return eps * (MultiIndex.parse(n).degree + 1.5)


def normalization_constant(eps, v0):
    '''Return N_eps normalising the initial spherical wave.

    For the Gaussian envelope the squared norm of the spherical wave is
    N^2 (16 pi^2 / v0^2) (1 - exp(-v0^2 / eps^2)), which gives the closed
    form below; it tends to v0 / (4 pi) as eps goes to zero.
    '''
    if not eps > 0 or not v0 > 0:
        raise ValueError('eps and v0 must be positive')
    return (v0 / (4.0 * math.pi)) / math.sqrt(
        -math.expm1(-(v0 * v0) / (eps * eps))
    )


def envelope(x):
    '''Gaussian envelope f(x) = pi^(-3/4) exp(-|x|^2 / 2) over the last
    axis of *x*.'''
    x = np.asarray(x, dtype=float)
    return math.pi ** -0.75 * np.exp(-0.5 * np.sum(x * x, axis=-1))
