# :coding: utf-8
# :copyright: Copyright (c) 2024 ftrack
import math
import cmath

import numpy as np

from mott_constants import numerics as constants

from mott_track.exceptions import CausticTimeError
from mott_track.kernels.hermite import hermite_functions


def _prefactor(t, damping):
    '''(2 pi i sin tau)^(-1/2) at tau = t - i damping, on the branch that
    is continuous from t -> 0+ along the real axis.'''
    turns = math.floor(t / math.pi)
    real_phase = cmath.exp(-0.25j * math.pi * (2 * turns + 1))
    if damping == 0.0:
        return real_phase / math.sqrt(2.0 * math.pi * abs(math.sin(t)))
    value = 1.0 / cmath.sqrt(2j * math.pi * cmath.sin(t - 1j * damping))
    # Pick the root closest to the real time branch.
    if abs(cmath.phase(value / real_phase)) > 0.5 * math.pi:
        value = -value
    return value


def mehler_kernel(t, x, y, damping=0.0):
    '''Integral kernel of the one dimensional oscillator propagator,
    matching sum_n phi_n(x) phi_n(y) exp(-i t (n + 1/2)).

    A positive *damping* evaluates it at the complex time t - i damping.
    Raise :exc:`CausticTimeError` when |sin t| is below tolerance.
    '''
    if damping < 0:
        raise ValueError('damping must be non negative')
    if damping == 0.0:
        sine, cosine = math.sin(t), math.cos(t)
    else:
        tau = complex(t, -damping)
        sine, cosine = cmath.sin(tau), cmath.cos(tau)
    if abs(sine) <= constants.CAUSTIC_TOLERANCE:
        raise CausticTimeError(t)
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    exponent = 1j * ((x * x + y * y) * cosine - 2.0 * x * y) / (2.0 * sine)
    return _prefactor(t, damping) * np.exp(exponent)


def mehler_eigensum(t, x, y, n_terms=60, damping=0.0):
    '''Truncated eigenfunction expansion of :func:`mehler_kernel` over
    orders 0..*n_terms*.'''
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    orders = np.arange(n_terms + 1)
    phases = np.exp(-(1j * t + damping) * (orders + 0.5))
    phi_x = hermite_functions(n_terms, x)
    phi_y = hermite_functions(n_terms, y)
    return np.tensordot(phases, phi_x * phi_y, axes=(0, 0))
