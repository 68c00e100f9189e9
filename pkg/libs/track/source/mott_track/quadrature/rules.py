# :coding: utf-8
# :copyright: Copyright (c) 2024 ftrack
import math
import dataclasses

import numpy as np
from scipy import special

from mott_constants import numerics as constants


@dataclasses.dataclass(frozen=True)
class AngularRule(object):
    '''Quadrature rule on part of the unit sphere, in the frame whose pole
    is the cone axis. *directions* has shape (m, 3), *weights* (m,).'''

    directions: np.ndarray
    weights: np.ndarray

    def __len__(self):
        return self.weights.shape[0]

    def rotated(self, rotation):
        '''Return the rule expressed in lab axes for the pole *rotation*
        (lab = rotation.T @ frame).'''
        return AngularRule(self.directions @ rotation, self.weights)

    def concatenate(self, other):
        return AngularRule(
            np.concatenate([self.directions, other.directions]),
            np.concatenate([self.weights, other.weights]),
        )


def gauss_legendre(count, lower, upper):
    '''Return Gauss-Legendre nodes and weights of *count* points mapped to
    [*lower*, *upper*].'''
    nodes, weights = special.roots_legendre(count)
    half = 0.5 * (upper - lower)
    return lower + half * (nodes + 1.0), half * weights


def angular_rule(theta_lower, theta_upper, n_theta, n_phi):
    '''Product rule on the zone theta_lower <= theta <= theta_upper.

    Gauss-Legendre in the polar angle carries the sin(theta) measure, the
    azimuth uses the periodic trapezoid rule, which is spectrally accurate
    for the smooth periodic integrands met here.
    '''
    theta, theta_weights = gauss_legendre(n_theta, theta_lower, theta_upper)
    phi = 2.0 * math.pi * np.arange(n_phi) / n_phi
    sin_theta = np.sin(theta)
    directions = np.stack(
        [
            np.outer(sin_theta, np.cos(phi)),
            np.outer(sin_theta, np.sin(phi)),
            np.outer(np.cos(theta), np.ones(n_phi)),
        ],
        axis=-1,
    ).reshape(-1, 3)
    weights = np.outer(
        theta_weights * sin_theta, np.full(n_phi, 2.0 * math.pi / n_phi)
    ).reshape(-1)
    return AngularRule(directions, weights)


def region_rule(region, theta0, nodes):
    '''Return the pole frame rule of *region* for a cone of half angle
    *theta0*, with *nodes* points per angular dimension.

    The sphere rule is the cone rule followed by the complement rule, so
    sums over the three regions are additive node by node.
    '''
    cone = angular_rule(0.0, theta0, nodes, nodes)
    if region == constants.REGION_CONE:
        return cone
    complement = angular_rule(theta0, math.pi, nodes, nodes)
    if region == constants.REGION_COMPLEMENT:
        return complement
    if region == constants.REGION_SPHERE:
        return cone.concatenate(complement)
    raise ValueError(
        'Unknown region {!r}, expected one of {}'.format(
            region, constants.REGIONS
        )
    )
