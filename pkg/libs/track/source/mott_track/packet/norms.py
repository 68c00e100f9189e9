# :coding: utf-8
# :copyright: Copyright (c) 2024 ftrack
import math
import logging
import dataclasses

import numpy as np
from numpy.polynomial.hermite import hermgauss

from mott_track.exceptions import QuadratureError
from mott_track.kernels import coupling_g, coupling_g_gradient
from mott_track.kernels.transforms import minus_i_power
from mott_track.packet import evaluate
from mott_track.packet.evaluate import profile_argument

logger = logging.getLogger(__name__)

# Relative agreement of the m and m + 4 node rules, both exact here.
_RULE_AGREEMENT = 1e-10
_EXTRA_NODES = 4
_LINE_NODES = 40


@dataclasses.dataclass(frozen=True)
class MomentReport(object):
    '''Position and momentum moments of a packet.

    Vectors are in frame coordinates: the two transverse axes first, the
    longitudinal axis a_hat last. *frame* holds the axes as rows, so lab
    vectors are ``frame.T @ vector``.
    '''

    mean_pos: np.ndarray
    std_pos: np.ndarray
    mean_mom: np.ndarray
    std_mom: np.ndarray
    frame: np.ndarray

    @property
    def longitudinal_uncertainty(self):
        '''std_pos * std_mom along a_hat, eps^2 / 2 for a minimal packet.'''
        return float(self.std_pos[2] * self.std_mom[2])

    def lab_mean_pos(self):
        return self.frame.T @ self.mean_pos

    def lab_mean_mom(self):
        return self.frame.T @ self.mean_mom


def _decay(desc):
    return 0.5 * desc.width**2 + 0.25


def _transverse_rule(desc, count):
    '''Return frame points y (count^2, 2) and weights for integrals
    over the transverse plane of the profile intensity.

    The intensity is a polynomial times exp(-2 b |y|^2 / tau^2); the
    Hermite weight is divided out so the rule applies to the plain
    integrand.
    '''
    nodes, weights = hermgauss(count)
    scale = desc.tau / math.sqrt(2.0 * _decay(desc))
    first, second = np.meshgrid(nodes, nodes, indexing='ij')
    points = scale * np.stack([first.ravel(), second.ravel()], axis=-1)
    plain = (
        np.outer(weights * np.exp(nodes**2), weights * np.exp(nodes**2))
        .ravel()
        * scale
        * scale
    )
    return points, plain


def _lab(desc, points):
    return points @ desc.transverse_axes


def _intensity(desc, points):
    xi = profile_argument(desc, _lab(desc, points))
    return np.abs(coupling_g(desc.n, xi, desc.width)) ** 2


def _checked_integral(desc, integrand, minimum):
    '''Integrate *integrand(points)* with the minimal exact rule and the
    rule four nodes larger; raise :exc:`QuadratureError` on disagreement.'''
    results = []
    for count in (minimum, minimum + _EXTRA_NODES):
        points, weights = _transverse_rule(desc, count)
        results.append(np.tensordot(weights, integrand(points), axes=1))
    coarse, fine = results
    scale = max(float(np.max(np.abs(fine))), np.finfo(float).tiny)
    estimate = float(np.max(np.abs(fine - coarse))) / scale
    if estimate > _RULE_AGREEMENT:
        raise QuadratureError(
            'Transverse integral of channel j={} n={} did not '
            'converge'.format(desc.j, desc.n),
            estimate=estimate,
        )
    return fine


def transverse_mass(desc):
    '''Integral of |A|^2 over the transverse plane.'''
    return float(
        _checked_integral(
            desc, lambda points: _intensity(desc, points), desc.degree + 1
        )
    )


def packet_norm(desc):
    '''L2 norm of the packet.

    The longitudinal Gaussian contributes eps sqrt(pi) and the transverse
    rescaling eps^2, which cancel the eps^-3 of the prefactor:
    ||P||^2 = sqrt(pi) |C|^2 int |A|^2 dy.
    '''
    norm = math.sqrt(
        math.sqrt(math.pi) * abs(desc.amplitude) ** 2 * transverse_mass(desc)
    )
    logger.debug(
        'Packet j={} n={} eps={}: norm {!r}'.format(
            desc.j, desc.n, desc.eps, norm
        )
    )
    return norm


def _real_profile_gradient(desc, points):
    '''Gradient in frame coordinates of the real part h of the profile
    without its chirp, i^|n| g(-y / tau - |n| a_hat / v0).'''
    xi = profile_argument(desc, _lab(desc, points))
    gradient = coupling_g_gradient(desc.n, xi, desc.width)
    # d xi / d y_l = -t_l / tau for the frame axis t_l.
    frame_gradient = -(gradient @ desc.transverse_axes.T) / desc.tau
    return np.real(frame_gradient / minus_i_power(desc.degree))


def _line_moments(density, centre, scale):
    '''Mean and standard deviation of the line density *density*.

    The Gauss-Hermite rule is centred at *centre* with width *scale*; the
    Hermite weight is divided out so any density decaying like that
    Gaussian is integrated to rounding.
    '''
    nodes, weights = hermgauss(_LINE_NODES)
    x = centre + scale * nodes
    mass = weights * np.exp(nodes**2) * density(x)
    total = np.sum(mass)
    mean = np.sum(mass * x) / total
    variance = np.sum(mass * (x - mean) ** 2) / total
    return float(mean), math.sqrt(max(float(variance), 0.0))


def longitudinal_position_moments(desc, t=0.0):
    '''Mean and standard deviation of a_hat . R under |P_t|^2.

    The transverse factor integrates out, so only the freely evolved
    longitudinal factor enters.
    '''
    eps = desc.eps
    return _line_moments(
        lambda r: np.abs(evaluate.longitudinal_factor(desc, r, t)) ** 2,
        desc.z_shift + desc.momentum * t,
        eps * math.sqrt(1.0 + t * t),
    )


def longitudinal_momentum_moments(desc):
    '''Mean and standard deviation of the momentum eps^2 k along a_hat
    under |P~|^2.'''
    eps2 = desc.eps * desc.eps
    mean_k, std_k = _line_moments(
        lambda k: np.abs(evaluate.longitudinal_transform(desc, k)) ** 2,
        desc.momentum / eps2,
        1.0 / desc.eps,
    )
    return eps2 * mean_k, eps2 * std_k


def packet_moments(desc):
    '''Return the :class:`MomentReport` of *desc*.

    Transverse position moments are eps times the moments of y under
    |A(y)|^2; transverse momentum moments are eps times the moments of the
    transform variable, read off the profile and its gradient. Longitudinal
    moments come from line quadratures of the longitudinal factor and its
    transform.
    '''
    minimum = desc.degree + 2

    def integrand(points):
        intensity = _intensity(desc, points)
        gradient = _real_profile_gradient(desc, points)
        return np.column_stack(
            [
                intensity,
                intensity[:, None] * points,
                intensity[:, None] * points**2,
                gradient**2,
            ]
        )

    moments = _checked_integral(desc, integrand, minimum)
    mass = moments[0]
    mean_y = moments[1:3] / mass
    square_y = moments[3:5] / mass
    square_k = square_y / desc.tau**2 + moments[5:7] / mass
    mean_k = -mean_y / desc.tau
    std_y = np.sqrt(np.maximum(square_y - mean_y**2, 0.0))
    std_k = np.sqrt(np.maximum(square_k - mean_k**2, 0.0))

    mean_z, std_z = longitudinal_position_moments(desc)
    mean_p, std_p = longitudinal_momentum_moments(desc)
    eps = desc.eps
    return MomentReport(
        mean_pos=np.array([eps * mean_y[0], eps * mean_y[1], mean_z]),
        std_pos=np.array([eps * std_y[0], eps * std_y[1], std_z]),
        mean_mom=np.array([eps * mean_k[0], eps * mean_k[1], mean_p]),
        std_mom=np.array([eps * std_k[0], eps * std_k[1], std_p]),
        frame=desc.frame,
    )
