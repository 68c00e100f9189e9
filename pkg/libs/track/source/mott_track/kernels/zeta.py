# :coding: utf-8
# :copyright: Copyright (c) 2024 ftrack
import math

import numpy as np

from mott_track.quadrature.rules import gauss_legendre


def zeta_axis(t, xi, xi2):
    '''Single axis correlation <phi_0, e^{i xi2 x} U(t) e^{-i xi x} phi_0>.

    e^{-i xi x} phi_0 is the coherent state of label -i xi / sqrt(2), so
    the matrix element is a coherent state overlap.
    '''
    xi = np.asarray(xi, dtype=float)
    xi2 = np.asarray(xi2, dtype=float)
    rotation = np.exp(-1j * t)
    return np.exp(-0.5j * t) * np.exp(
        -0.25 * (xi * xi + xi2 * xi2) + 0.5 * xi * xi2 * rotation
    )


def zeta2(t, xi, xi2):
    '''Three dimensional correlation zeta_t(xi, xi2), the product of
    :func:`zeta_axis` over the last axis.'''
    return np.prod(zeta_axis(t, xi, xi2), axis=-1)


def zeta2_quadrature(t, xi, xi2, nodes=512, half_width=8.0):
    '''Evaluate :func:`zeta2` by double Gauss-Legendre quadrature of the
    Mehler kernel on [-half_width, half_width]^2 per axis.'''
    from mott_track.kernels.mehler import mehler_kernel

    points, weights = gauss_legendre(nodes, -half_width, half_width)
    ground = math.pi**-0.25 * np.exp(-0.5 * points * points)
    kernel = mehler_kernel(t, points[:, None], points[None, :])
    result = 1.0 + 0.0j
    for first, second in zip(np.ravel(xi), np.ravel(xi2)):
        left = weights * ground * np.exp(1j * second * points)
        right = weights * ground * np.exp(-1j * first * points)
        result *= left @ kernel @ right
    return complex(result)
