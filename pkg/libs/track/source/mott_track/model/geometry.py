# :coding: utf-8
# :copyright: Copyright (c) 2024 ftrack
import math
import logging
import dataclasses
from typing import Tuple

import numpy as np
from scipy.spatial.transform import Rotation

from mott_constants import numerics as constants

from mott_track.exceptions import GeometryError, RotationError
from mott_track.model.config import all_pairs

logger = logging.getLogger(__name__)

_POLE = np.array([0.0, 0.0, 1.0])


@dataclasses.dataclass(frozen=True)
class Geometry(object):
    '''Classical data derived from a model configuration.

    *tau* flight times, *theta0* cone half angle, *rotations* the pole
    rotations R_j, *period_osc* and *transit* the oscillator period and the
    transit time of the particle across one oscillator.
    '''

    tau: Tuple[float, ...]
    theta0: float
    rotations: Tuple[np.ndarray, ...]
    period_osc: float
    transit: float
    a_hat: Tuple[np.ndarray, ...]
    distances: Tuple[float, ...]
    v0: float

    @property
    def count(self):
        return len(self.tau)

    def tau_of(self, j):
        return self.tau[j - 1]

    def rotation_of(self, j):
        return self.rotations[j - 1]

    def a_hat_of(self, j):
        return self.a_hat[j - 1]

    def position_of(self, j):
        return self.distances[j - 1] * self.a_hat[j - 1]

    def pair_angles(self):
        '''Return {(j, k): theta_jk} for the labels j < k.'''
        return {
            (i + 1, k + 1): _angle(self.a_hat[i], self.a_hat[k])
            for i, k in all_pairs(self.count)
        }

    def with_rotation(self, j, rotation):
        '''Return a copy with R_j replaced by *rotation*.'''
        rotations = list(self.rotations)
        rotations[j - 1] = np.asarray(rotation, dtype=float)
        return dataclasses.replace(self, rotations=tuple(rotations))


@dataclasses.dataclass(frozen=True)
class TimeScales(object):
    '''Characteristic times of one configuration and their ratios.'''

    period_osc: float
    transit: float
    tau: Tuple[float, ...]
    transit_over_period: float
    transit_over_tau: Tuple[float, ...]

    @property
    def adiabatic(self):
        '''True when the transit time and the oscillator period both lie
        below the shortest flight time.'''
        return max(self.transit, self.period_osc) < min(self.tau)


def _angle(first, second):
    return math.acos(float(np.clip(np.dot(first, second), -1.0, 1.0)))


def rotation_to_pole(a_hat):
    '''Return the rotation taking the unit vector *a_hat* to e3.

    The rotation turns about a_hat x e3 by the angle between the two, so it
    is the identity for e3; for -e3 it is the pi turn about e1.
    '''
    a_hat = np.asarray(a_hat, dtype=float)
    if a_hat.shape != (3,) or abs(np.linalg.norm(a_hat) - 1.0) > (
        constants.UNIT_TOLERANCE
    ):
        raise RotationError(
            'Rotation requested for a non unit vector {}'.format(a_hat)
        )
    if np.linalg.norm(a_hat + _POLE) <= constants.ANTIPODE_TOLERANCE:
        return np.diag([1.0, -1.0, -1.0])
    axis = np.cross(a_hat, _POLE)
    sine = np.linalg.norm(axis)
    if sine == 0.0:
        return np.eye(3)
    angle = math.atan2(sine, float(np.dot(a_hat, _POLE)))
    return Rotation.from_rotvec(angle * axis / sine).as_matrix()


def derive_geometry(cfg):
    '''Return the :class:`Geometry` of *cfg*.

    Raise :exc:`GeometryError` for a zero length oscillator position.
    '''
    positions = cfg.positions
    distances = np.linalg.norm(positions, axis=1)
    if positions.shape[0] == 0:
        raise GeometryError('no oscillator positions')
    if np.any(distances == 0.0):
        raise GeometryError('zero oscillator position')
    a_hat = tuple(positions / distances[:, None])

    pair_angles = [
        _angle(a_hat[i], a_hat[k]) for i, k in all_pairs(len(a_hat))
    ]
    theta0 = 0.5 * min(pair_angles + [math.pi])

    geometry = Geometry(
        tau=tuple(float(d / cfg.v0) for d in distances),
        theta0=theta0,
        rotations=tuple(rotation_to_pole(direction) for direction in a_hat),
        period_osc=2.0 * math.pi * cfg.epsilon,
        transit=cfg.epsilon / cfg.v0,
        a_hat=a_hat,
        distances=tuple(float(d) for d in distances),
        v0=cfg.v0,
    )
    logger.debug(
        'Geometry: tau={} theta0={:.6f}'.format(geometry.tau, theta0)
    )
    return geometry


def cone_contains(geom, j, u_hat):
    '''True when the unit vector *u_hat* lies in the upper cap C_j.'''
    w = geom.rotation_of(j) @ np.asarray(u_hat, dtype=float)
    return bool(
        w[0] * w[0] + w[1] * w[1] < math.sin(geom.theta0) ** 2 and w[2] > 0
    )


def time_scales(geom, eps=None):
    '''Return the :class:`TimeScales` of *geom*, optionally for another
    scale *eps* (flight times do not depend on it).'''
    if eps is None:
        period_osc, transit = geom.period_osc, geom.transit
    else:
        period_osc, transit = 2.0 * math.pi * eps, eps / geom.v0
    return TimeScales(
        period_osc=period_osc,
        transit=transit,
        tau=geom.tau,
        transit_over_period=transit / period_osc,
        transit_over_tau=tuple(transit / tau for tau in geom.tau),
    )
