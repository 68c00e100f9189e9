# :coding: utf-8
# :copyright: Copyright (c) 2024 ftrack
import math

import numpy as np

from mott_track.model import (
    MultiIndex,
    derive_geometry,
    normalization_constant,
)
from mott_track.kernels import coupling_g
from mott_track.oracle.phase import critical_point, rotated_point
from mott_track.packet import make_packet, packet_eval


def _f(y):
    y = np.asarray(y, dtype=float)
    return math.pi**-0.75 * math.exp(-0.5 * float(np.dot(y, y)))


def leading_term(cfg, j, n, x, geom=None):
    '''Stationary phase value of the first order coefficient at the
    rescaled point *x*, built from the critical point of the reduced
    phase.'''
    n = MultiIndex.parse(n)
    geom = geom or derive_geometry(cfg)
    eps, v0 = cfg.epsilon, cfg.v0
    tau = geom.tau_of(j)
    rotation = geom.rotation_of(j)
    x = np.asarray(x, dtype=float)
    x_rot = rotated_point(geom, j, x)
    xi_c, z_c = critical_point(x, n, j, geom)
    s_c = z_c[2]

    # At (mu, nu) = 0 the angular Jacobian is one.
    amplitude = (
        np.exp(
            1j * float(np.dot(xi_c, x_rot))
            + 0.5j * s_c * float(np.dot(xi_c, xi_c))
        )
        * coupling_g(n, rotation.T @ xi_c, cfg.potential_width)
        * _f(x_rot + s_c * xi_c)
    )
    return (
        -1j
        * normalization_constant(eps, v0)
        * math.sqrt(eps)
        / (v0**3 * tau * tau)
        * np.exp(1j * (v0 * float(x_rot[2]) + n.degree * tau) / eps)
        * (2.0 * math.pi) ** 3
        * amplitude
    )


def leading_consistency(cfg, j, n, x, geom=None):
    '''Relative difference between :func:`leading_term` and
    eps^2 P(eps x) evaluated from the packet descriptor.'''
    geom = geom or derive_geometry(cfg)
    eps = cfg.epsilon
    stationary = complex(leading_term(cfg, j, n, x, geom))
    desc = make_packet(cfg, j, n, geom)
    packet = eps * eps * complex(
        packet_eval(desc, eps * np.asarray(x, dtype=float))
    )
    scale = max(abs(packet), abs(stationary), np.finfo(float).tiny)
    return abs(stationary - packet) / scale
