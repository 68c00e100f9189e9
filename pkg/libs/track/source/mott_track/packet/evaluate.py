# :coding: utf-8
# :copyright: Copyright (c) 2024 ftrack
import math

import numpy as np

from mott_constants import numerics as constants

from mott_track.exceptions import OrthogonalityError
from mott_track.kernels import coupling_g
from mott_track.quadrature.rules import gauss_legendre


def profile_argument(desc, y):
    '''Momentum at which the pair coupling is read for the transverse
    point *y*: -y / tau - |n| a_hat / v0 (the critical momentum of the
    first order phase).'''
    y = np.asarray(y, dtype=float)
    return -y / desc.tau - (desc.degree / desc.v0) * desc.a_hat


def chirped_profile(desc, y):
    '''A(y) without the orthogonality check.'''
    y = np.asarray(y, dtype=float)
    chirp = np.exp(-0.5j * np.sum(y * y, axis=-1) / desc.tau)
    return chirp * coupling_g(desc.n, profile_argument(desc, y), desc.width)


def transverse_profile(desc, y):
    '''Transverse amplitude A(y) for points *y* orthogonal to a_hat.

    Raise :exc:`OrthogonalityError` when *y* has a component along a_hat.
    '''
    y = np.asarray(y, dtype=float)
    along = np.abs(y @ desc.a_hat)
    if np.any(along > constants.ORTHOGONALITY_TOLERANCE):
        raise OrthogonalityError(
            'Transverse argument has a component {:.3e} along a_hat'.format(
                float(np.max(along))
            )
        )
    return chirped_profile(desc, y)


def longitudinal_factor(desc, r, t=0.0):
    '''Longitudinal Gaussian factor at the coordinate *r* along a_hat,
    freely evolved for the time *t*.

    Free evolution keeps the Gaussian form with the width parameter
    eps^2 replaced by eps^2 (1 + i t).
    '''
    r = np.asarray(r, dtype=float)
    eps2 = desc.eps * desc.eps
    spread = 1.0 + 1j * t
    centre = desc.z_shift + desc.momentum * t
    return (
        spread**-0.5
        * np.exp(-((r - centre) ** 2) / (2.0 * eps2 * spread))
        * np.exp(1j * desc.momentum * r / eps2)
        * np.exp(-0.5j * desc.momentum**2 * t / eps2)
    )


def longitudinal_transform(desc, k):
    '''Fourier transform, kernel (2 pi)^(-1/2) exp(-i k r), of
    :func:`longitudinal_factor` at time zero.'''
    k = np.asarray(k, dtype=float)
    eps = desc.eps
    offset = k - desc.momentum / (eps * eps)
    return eps * np.exp(
        -0.5 * eps * eps * offset * offset
        - 1j * desc.z_shift * offset
    )


def split_coordinates(desc, R):
    R = np.asarray(R, dtype=float)
    along = R @ desc.a_hat
    across = R - along[..., None] * desc.a_hat
    return along, across


def packet_eval(desc, R):
    '''Value of the wave packet at the points *R* (last axis).'''
    along, across = split_coordinates(desc, R)
    return (
        desc.amplitude
        * desc.eps**-1.5
        * chirped_profile(desc, across / desc.eps)
        * longitudinal_factor(desc, along)
    )


def _transverse_half_width(desc):
    decay = 0.5 * desc.width**2 + 0.25
    return desc.tau * (
        math.sqrt(40.0 / decay) + desc.degree / desc.v0
    )


def transverse_transform(desc, k, nodes=160):
    '''Two dimensional transform (2 pi)^(-1) int exp(-i k.y) A(y) dy over
    the transverse plane, by Gauss-Legendre quadrature on a square that
    holds the profile.

    *k* holds transverse wave vectors in frame coordinates (last axis of
    length 2).
    '''
    k = np.asarray(k, dtype=float)
    half_width = _transverse_half_width(desc)
    points, weights = gauss_legendre(nodes, -half_width, half_width)
    axes = desc.transverse_axes
    y = (
        points[:, None, None] * axes[0]
        + points[None, :, None] * axes[1]
    )
    values = (
        np.outer(weights, weights) * chirped_profile(desc, y)
    ) / (2.0 * math.pi)
    first = np.exp(-1j * k[..., 0, None] * points)
    second = np.exp(-1j * k[..., 1, None] * points)
    return np.einsum('...a,ab,...b->...', first, values, second)


def packet_ft(desc, K, nodes=160):
    '''Fourier transform, kernel (2 pi)^(-3/2) exp(-i K.R), of the packet
    at the wave vectors *K* (last axis).'''
    K = np.asarray(K, dtype=float)
    along = K @ desc.a_hat
    across = K @ desc.transverse_axes.T
    eps = desc.eps
    # eps^(-3/2) from the packet, eps^2 from the transverse rescaling.
    return (
        math.sqrt(eps)
        * desc.amplitude
        * transverse_transform(desc, eps * across, nodes=nodes)
        * longitudinal_transform(desc, along)
    )
