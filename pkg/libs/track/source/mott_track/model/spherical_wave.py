# :coding: utf-8
# :copyright: Copyright (c) 2024 ftrack
import math

import numpy as np

from mott_track.model.physics import envelope, normalization_constant
from mott_track.quadrature.rules import angular_rule, gauss_legendre


def _prefactor(cfg, R):
    R = np.asarray(R, dtype=float)
    eps = cfg.epsilon
    return (
        normalization_constant(eps, cfg.v0)
        * eps**-2.5
        * envelope(R / eps)
    )


def spherical_wave(cfg, R):
    '''Initial state of the test particle at the points *R* (last axis).

    The angular superposition has the closed form
    4 pi sin(k |R|) / (k |R|) with k = v0 / eps^2.
    '''
    R = np.asarray(R, dtype=float)
    k = cfg.v0 / cfg.epsilon**2
    radius = np.linalg.norm(R, axis=-1)
    # np.sinc(x) is sin(pi x) / (pi x)
    angular = 4.0 * math.pi * np.sinc(k * radius / math.pi)
    return _prefactor(cfg, R) * angular


def spherical_wave_portion(cfg, geom, j, R, nodes=48):
    '''Portion of the initial state carried by the directions of cone C_j.

    *j* = 0 selects the remainder of the sphere outside every cone, so the
    portions over j = 0..N add up to :func:`spherical_wave`.
    '''
    R = np.atleast_2d(np.asarray(R, dtype=float))
    k = cfg.v0 / cfg.epsilon**2
    if j == 0:
        angular = 4.0 * math.pi * np.sinc(
            k * np.linalg.norm(R, axis=-1) / math.pi
        ) - sum(
            _cone_integral(geom, label, R, k, nodes)
            for label in range(1, geom.count + 1)
        )
    else:
        angular = _cone_integral(geom, j, R, k, nodes)
    return _prefactor(cfg, R) * angular


def _cone_integral(geom, j, R, k, nodes):
    rule = angular_rule(0.0, geom.theta0, nodes, nodes).rotated(
        geom.rotation_of(j)
    )
    phase = np.exp(1j * k * (R @ rule.directions.T))
    return phase @ rule.weights


def spherical_wave_norm(cfg, nodes=400, cutoff=9.0):
    '''Squared L2 norm of :func:`spherical_wave` by radial Gauss-Legendre
    quadrature on [0, cutoff * eps].'''
    radius, weights = gauss_legendre(nodes, 0.0, cutoff * cfg.epsilon)
    points = np.zeros((nodes, 3))
    points[:, 2] = radius
    values = spherical_wave(cfg, points)
    return float(
        np.sum(weights * 4.0 * math.pi * radius**2 * np.abs(values) ** 2)
    )
