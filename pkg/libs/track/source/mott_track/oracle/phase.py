# :coding: utf-8
# :copyright: Copyright (c) 2024 ftrack
import math
import dataclasses

import numpy as np

from mott_track.model import MultiIndex

# Central difference step for the critical point check. The reduced
# phase has no odd derivatives beyond the first at the critical point.
_GRADIENT_STEP = 1e-3


def phase_value(cfg, xi, s, u_hat, x, n, j):
    '''First order phase -xi.a_j + v0 u_hat.(x + s xi) + |n| s.'''
    xi = np.asarray(xi, dtype=float)
    u_hat = np.asarray(u_hat, dtype=float)
    x = np.asarray(x, dtype=float)
    s = np.asarray(s, dtype=float)
    position = x + s[..., None] * xi
    return (
        -np.sum(xi * cfg.position(j), axis=-1)
        + cfg.v0 * np.sum(u_hat * position, axis=-1)
        + MultiIndex.parse(n).degree * s
    )


def rotated_point(geom, j, x):
    '''x^j = R_j x.'''
    return geom.rotation_of(j) @ np.asarray(x, dtype=float)


def reduced_phase(geom, j, n, x, xi_rot, z):
    '''Phase in the frame of oscillator *j* with u_hat = (mu, nu,
    sqrt(1 - mu^2 - nu^2)); *z* = (mu, nu, s).'''
    degree = MultiIndex.parse(n).degree
    x_rot = rotated_point(geom, j, x)
    xi_rot = np.asarray(xi_rot, dtype=float)
    mu, nu, s = z
    height = math.sqrt(1.0 - mu * mu - nu * nu)
    return (
        -geom.distances[j - 1] * xi_rot[2]
        + geom.v0
        * (
            mu * (x_rot[0] + s * xi_rot[0])
            + nu * (x_rot[1] + s * xi_rot[1])
            + height * (x_rot[2] + s * xi_rot[2])
        )
        + degree * s
    )


def split_phase(geom, j, n, x, mu, nu, s):
    '''Return (A, B) with reduced_phase = A . xi_rot + B.'''
    degree = MultiIndex.parse(n).degree
    x_rot = rotated_point(geom, j, x)
    height = math.sqrt(1.0 - mu * mu - nu * nu)
    tau = geom.tau_of(j)
    linear = geom.v0 * np.array([mu * s, nu * s, height * s - tau])
    constant = (
        geom.v0 * (x_rot[0] * mu + x_rot[1] * nu + x_rot[2] * height)
        + degree * s
    )
    return linear, constant


def critical_point(x, n, j, geom):
    '''Return (xi_c, z_c), the unique critical point of the reduced phase
    in the frame of oscillator *j*.'''
    degree = MultiIndex.parse(n).degree
    x_rot = rotated_point(geom, j, x)
    tau = geom.tau_of(j)
    xi_c = np.array(
        [-x_rot[0] / tau, -x_rot[1] / tau, -degree / geom.v0]
    )
    z_c = np.array([0.0, 0.0, tau])
    return xi_c, z_c


def critical_gradient_norm(geom, j, n, x, step=_GRADIENT_STEP):
    '''Euclidean norm of the central difference gradient of the reduced
    phase at the critical point, in all six variables.'''
    xi_c, z_c = critical_point(x, n, j, geom)
    point = np.concatenate([xi_c, z_c])

    def value(p):
        return reduced_phase(geom, j, n, x, p[:3], p[3:])

    gradient = np.empty(6)
    for index in range(6):
        shift = np.zeros(6)
        shift[index] = step
        gradient[index] = (value(point + shift) - value(point - shift)) / (
            2.0 * step
        )
    return float(np.linalg.norm(gradient))


@dataclasses.dataclass(frozen=True)
class StretchedCoordinates(object):
    '''Linear change of variables (mu, nu, s) = L z around the critical
    point, with its Jacobian and the bounds of the stretched domain.'''

    eps: float
    v0: float
    tau: float
    t: float
    theta0: float

    @property
    def jacobian(self):
        return self.eps**3 / (self.v0**3 * self.tau**2)

    @property
    def radius(self):
        '''Bound on |(z1, z2)|.'''
        return self.v0 * self.tau * math.sin(self.theta0) / self.eps

    @property
    def axial_bounds(self):
        return (
            -self.v0 * self.tau / self.eps,
            self.v0 * (self.t - self.tau) / self.eps,
        )

    def forward(self, z):
        '''Return (mu, nu, s) for stretched points *z* (last axis).'''
        z = np.asarray(z, dtype=float)
        scale = self.eps / (self.v0 * self.tau)
        return np.stack(
            [
                scale * z[..., 0],
                scale * z[..., 1],
                self.tau + self.eps * z[..., 2] / self.v0,
            ],
            axis=-1,
        )

    def inverse(self, mu_nu_s):
        mu_nu_s = np.asarray(mu_nu_s, dtype=float)
        scale = self.v0 * self.tau / self.eps
        return np.stack(
            [
                scale * mu_nu_s[..., 0],
                scale * mu_nu_s[..., 1],
                self.v0 * (mu_nu_s[..., 2] - self.tau) / self.eps,
            ],
            axis=-1,
        )

    def contains(self, z):
        z = np.asarray(z, dtype=float)
        lower, upper = self.axial_bounds
        return (
            (z[..., 0] ** 2 + z[..., 1] ** 2 < self.radius**2)
            & (z[..., 2] > lower)
            & (z[..., 2] < upper)
        )


def stretch_coordinates(geom, j, eps, t):
    '''Return the :class:`StretchedCoordinates` of oscillator *j*.'''
    return StretchedCoordinates(
        eps=eps, v0=geom.v0, tau=geom.tau_of(j), t=t, theta0=geom.theta0
    )
