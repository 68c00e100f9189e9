# :coding: utf-8
# :copyright: Copyright (c) 2024 ftrack
import math
import logging
import dataclasses
from typing import Dict, Tuple

import numpy as np

from mott_track.model import derive_geometry

logger = logging.getLogger(__name__)

_BOUND_TOLERANCE = 1e-9


@dataclasses.dataclass(frozen=True)
class PhaseBoundResult(object):
    '''Grid minimum of the squared second order phase gradient against
    the lower bound *delta_squared*. *minima* maps each oscillator pair
    (k, l) to its own minimum.'''

    minimum: float
    delta_squared: float
    minima: Dict[Tuple[int, int], float]

    @property
    def passed(self):
        return self.minimum >= self.delta_squared - _BOUND_TOLERANCE * max(
            1.0, self.delta_squared
        )


def delta_bound(cfg, geom=None):
    '''Delta^2 = v0^2 tau_1^2 sin^2(theta0).'''
    geom = geom or derive_geometry(cfg)
    return (cfg.v0 * min(geom.tau) * math.sin(geom.theta0)) ** 2


def _sphere_directions(theta_lower, theta_upper, resolution):
    '''Directions on a (theta, phi) lattice, in the frame of the pole.'''
    theta = np.linspace(theta_lower, theta_upper, resolution)
    phi = np.linspace(0.0, 2.0 * math.pi, 2 * resolution, endpoint=False)
    sin_theta = np.sin(theta)
    return np.stack(
        [
            np.outer(sin_theta, np.cos(phi)),
            np.outer(sin_theta, np.sin(phi)),
            np.outer(np.cos(theta), np.ones_like(phi)),
        ],
        axis=-1,
    ).reshape(-1, 3)


def _distance_squared(v0, times, directions, target):
    '''v0^2 |s u - target|^2 on the (time, direction) lattice.'''
    offset = times[:, None, None] * directions[None, :, :] - target
    return v0 * v0 * np.sum(offset * offset, axis=-1)


def _ordered_minimum(v0, times, directions, inner_target, outer_target):
    '''Minimum over sigma <= s and the directions of
    v0^2 |sigma u - inner|^2 + v0^2 |s u - outer|^2.'''
    inner = np.minimum.accumulate(
        _distance_squared(v0, times, directions, inner_target), axis=0
    )
    outer = _distance_squared(v0, times, directions, outer_target)
    return float(np.min(inner + outer))


def second_order_phase_bound(
    cfg, t, geom=None, resolution=48, time_nodes=64
):
    '''Return the :class:`PhaseBoundResult` of the second order phase at
    time *t*.

    Distinct pairs (k, l) minimise over the whole sphere; the diagonal
    pairs (k, k) over the complement of the cone of k. A single
    oscillator only has the diagonal pair.
    '''
    geom = geom or derive_geometry(cfg)
    v0 = cfg.v0
    times = np.linspace(0.0, t, time_nodes)
    sphere = _sphere_directions(0.0, math.pi, resolution)
    complement = _sphere_directions(geom.theta0, math.pi, resolution)

    minima = {}
    labels = cfg.labels()
    for k in labels:
        outer_target = geom.tau_of(k) * geom.a_hat_of(k)
        for l in labels:
            inner_target = geom.tau_of(l) * geom.a_hat_of(l)
            if k == l:
                directions = complement @ geom.rotation_of(k)
            else:
                directions = sphere
            minima[(k, l)] = _ordered_minimum(
                v0, times, directions, inner_target, outer_target
            )

    result = PhaseBoundResult(
        minimum=min(minima.values()),
        delta_squared=delta_bound(cfg, geom),
        minima=minima,
    )
    logger.debug(
        'Second order phase bound: min {:.6e} against {:.6e}'.format(
            result.minimum, result.delta_squared
        )
    )
    return result


def complement_gradient_bound(cfg, j, t, geom=None, resolution=64):
    '''Grid minimum of |grad_xi Phi_j|^2 = |v0 s u - a_j|^2 over the
    complement of the cone of *j* and s in [0, t].'''
    geom = geom or derive_geometry(cfg)
    directions = _sphere_directions(
        geom.theta0, math.pi, resolution
    ) @ geom.rotation_of(j)
    times = np.linspace(0.0, t, resolution)
    return float(
        np.min(
            _distance_squared(
                cfg.v0, times, directions, geom.tau_of(j) * geom.a_hat_of(j)
            )
        )
    )
