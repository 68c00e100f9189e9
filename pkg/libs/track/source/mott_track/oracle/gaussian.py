# :coding: utf-8
# :copyright: Copyright (c) 2024 ftrack
import numpy as np

from mott_constants import numerics as constants

from mott_track.exceptions import OscillatoryDominanceError
from mott_track.quadrature.rules import gauss_legendre


def _check_damping(alpha):
    real = np.real(alpha)
    if np.any(real < constants.ALPHA_FLOOR):
        raise OscillatoryDominanceError(
            complex(np.ravel(alpha)[np.argmin(np.ravel(real))])
        )


def axis_integrals(m_max, alpha, beta):
    '''Return the stack I_0 .. I_{m_max} of

        I_m = int xi^m exp(-alpha xi^2 + beta xi) d xi

    by the moment recurrence, broadcasting *alpha* against *beta*.

    Raise :exc:`OscillatoryDominanceError` when Re(alpha) falls below the
    damping floor.
    '''
    alpha = np.asarray(alpha, dtype=complex)
    beta = np.asarray(beta, dtype=complex)
    _check_damping(alpha)
    alpha, beta = np.broadcast_arrays(alpha, beta)
    moments = np.empty((m_max + 1,) + beta.shape, dtype=complex)
    moments[0] = np.sqrt(np.pi / alpha) * np.exp(beta * beta / (4.0 * alpha))
    if m_max >= 1:
        moments[1] = beta / (2.0 * alpha) * moments[0]
    for m in range(2, m_max + 1):
        moments[m] = (
            (m - 1) * moments[m - 2] + beta * moments[m - 1]
        ) / (2.0 * alpha)
    return moments


def axis_integral(m, alpha, beta):
    '''Single moment I_m of :func:`axis_integrals`.'''
    if m < 0:
        raise ValueError(
            'Moment order must be non negative, got {}'.format(m)
        )
    return axis_integrals(m, alpha, beta)[m]


def axis_integrals_quadrature(m_max, alpha, beta, nodes, cutoff):
    '''The moments of :func:`axis_integrals` by Gauss-Legendre quadrature
    with *nodes* points on [-cutoff, cutoff].'''
    alpha = np.asarray(alpha, dtype=complex)
    beta = np.asarray(beta, dtype=complex)
    _check_damping(alpha)
    alpha, beta = np.broadcast_arrays(alpha, beta)
    xi, weights = gauss_legendre(nodes, -cutoff, cutoff)
    kernel = weights * np.exp(
        -alpha[..., None] * xi * xi + beta[..., None] * xi
    )
    powers = xi[None, :] ** np.arange(m_max + 1)[:, None]
    return np.moveaxis(np.einsum('...q,mq->...m', kernel, powers), -1, 0)
