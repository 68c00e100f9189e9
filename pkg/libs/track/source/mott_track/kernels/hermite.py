# :coding: utf-8
# :copyright: Copyright (c) 2024 ftrack
import math

import numpy as np

from mott_track.model.config import MultiIndex


def hermite_functions(n_max, x):
    '''Return the orthonormal Hermite functions of orders 0..*n_max* at
    *x*, stacked along a new first axis.

    Uses the normalised three term recurrence, which stays bounded for
    large orders where the raw polynomials overflow.
    '''
    x = np.asarray(x, dtype=float)
    values = np.empty((n_max + 1,) + x.shape)
    values[0] = math.pi**-0.25 * np.exp(-0.5 * x * x)
    if n_max >= 1:
        values[1] = math.sqrt(2.0) * x * values[0]
    for k in range(1, n_max):
        values[k + 1] = (
            math.sqrt(2.0 / (k + 1)) * x * values[k]
            - math.sqrt(k / (k + 1.0)) * values[k - 1]
        )
    return values


def hermite_1d(n, x):
    '''Orthonormal Hermite function phi_n at *x*.'''
    if n < 0:
        raise ValueError(
            'Hermite order must be non negative, got {}'.format(n)
        )
    return hermite_functions(n, x)[n]


def eigenfunction_3d(n, x):
    '''Three dimensional oscillator eigenfunction phi_n at *x* (last axis
    holds the three coordinates).'''
    n = MultiIndex.parse(n)
    x = np.asarray(x, dtype=float)
    result = np.ones(x.shape[:-1])
    for axis, order in enumerate(n):
        result = result * hermite_1d(order, x[..., axis])
    return result
