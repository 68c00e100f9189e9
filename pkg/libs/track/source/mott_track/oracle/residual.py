# :coding: utf-8
# :copyright: Copyright (c) 2024 ftrack
import math
import logging
import dataclasses
from typing import Tuple

import numpy as np

from mott_constants import numerics as constants
from mott_utils.reduce import pairwise_sum
from mott_utils.threading import OrderedPool

from mott_track.model import MultiIndex, derive_geometry, multi_indices
from mott_track.packet import make_packet, packet_eval, packet_norm
from mott_track.quadrature import gauss_legendre
from mott_track.oracle.coefficient import first_order_coefficients

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class TubeGrid(object):
    '''Weighted points, in rescaled coordinates, of a cylinder around the
    track of one oscillator.'''

    points: np.ndarray
    weights: np.ndarray
    radius: float
    window: Tuple[float, float]

    def __len__(self):
        return self.weights.shape[0]


@dataclasses.dataclass(frozen=True)
class ResidualResult(object):
    '''Discrete proxy *rho* of the first order remainder and *reference*,
    the same proxy of the leading term. *coverage* is the fraction of
    the leading term mass that falls on the grid.'''

    eps: float
    rho: float
    reference: float
    coverage: float
    flagged: bool

    @property
    def relative(self):
        return self.rho / self.reference


@dataclasses.dataclass(frozen=True)
class RatioResult(object):
    '''Proxy norm of the complement coefficients over that of the cone
    coefficients.'''

    eps: float
    ratio: float
    complement_norm: float
    cone_norm: float
    flagged: bool


def default_channels():
    return list(multi_indices(constants.DEFAULT_CHANNEL_DEGREE))


def tube_grid(
    geom,
    j,
    n_set,
    radius=constants.TUBE_RADIUS,
    counts=(
        constants.TUBE_RADIAL_NODES,
        constants.TUBE_ANGULAR_NODES,
        constants.TUBE_AXIAL_NODES,
    ),
    margin=constants.TUBE_MARGIN,
):
    '''Return the :class:`TubeGrid` about a_hat_j of *radius* whose
    window covers the longitudinal centres |n| tau_j / v0 of *n_set*
    with *margin* on both sides.

    *counts* gives the radial (Gauss-Legendre), angular (trapezoid) and
    axial (Gauss-Legendre) node counts.
    '''
    radial_count, angular_count, axial_count = counts
    tau = geom.tau_of(j)
    furthest = max(MultiIndex.parse(n).degree for n in n_set)
    window = (-margin, furthest * tau / geom.v0 + margin)

    r, r_weights = gauss_legendre(radial_count, 0.0, radius)
    phi = 2.0 * math.pi * np.arange(angular_count) / angular_count
    z, z_weights = gauss_legendre(axial_count, *window)

    axes = geom.rotation_of(j)[:2]
    a_hat = geom.a_hat_of(j)
    r_grid, phi_grid, z_grid = np.meshgrid(r, phi, z, indexing='ij')
    points = (
        (r_grid * np.cos(phi_grid))[..., None] * axes[0]
        + (r_grid * np.sin(phi_grid))[..., None] * axes[1]
        + z_grid[..., None] * a_hat
    ).reshape(-1, 3)
    weights = (
        (r * r_weights)[:, None, None]
        * np.full(angular_count, 2.0 * math.pi / angular_count)[
            None, :, None
        ]
        * z_weights[None, None, :]
    ).reshape(-1)
    return TubeGrid(
        points=points, weights=weights, radius=radius, window=window
    )


def _prepare(cfg, j, t, eps, n_set):
    scaled = cfg.with_epsilon(eps)
    geom = derive_geometry(scaled)
    if not t > geom.tau_of(j):
        raise ValueError(
            'Time {} must exceed the flight time {} of oscillator {}'.format(
                t, geom.tau_of(j), j
            )
        )
    n_set = [
        MultiIndex.parse(n)
        for n in (default_channels() if n_set is None else n_set)
    ]
    return scaled, geom, n_set


def _proxy(eps, weights, values):
    '''(eps^3 sum_x w_x sum_n |values|^2)^(1/2).'''
    mass = pairwise_sum(weights * np.sum(np.abs(values) ** 2, axis=1))
    return math.sqrt(eps**3 * float(mass))


def residual_norm(
    cfg, j, t, eps, x_grid=None, n_set=None, pool=None, quad=None
):
    '''Return the :class:`ResidualResult` comparing the first order
    coefficients of oscillator *j* at time *t* with eps^2 P(eps x) on
    *x_grid* (default :func:`tube_grid`).'''
    scaled, geom, n_set = _prepare(cfg, j, t, eps, n_set)
    grid = tube_grid(geom, j, n_set) if x_grid is None else x_grid
    pool = pool or OrderedPool(1)
    packets = [make_packet(scaled, j, n, geom) for n in n_set]

    def evaluate(point):
        results = first_order_coefficients(
            scaled,
            j,
            n_set,
            t,
            point,
            region=constants.REGION_CONE,
            quad=quad,
            geom=geom,
        )
        leading = [
            eps * eps * complex(packet_eval(desc, eps * point))
            for desc in packets
        ]
        return (
            [result.value for result in results],
            leading,
            any(result.flagged for result in results),
        )

    logger.info(
        'Residual for j={} eps={}: {} points x {} channels'.format(
            j, eps, len(grid), len(n_set)
        )
    )
    evaluated = pool.map(evaluate, list(grid.points))
    coefficients = np.array([item[0] for item in evaluated])
    leading = np.array([item[1] for item in evaluated])
    flagged = any(item[2] for item in evaluated)

    leading_mass = float(
        pairwise_sum(grid.weights * np.sum(np.abs(leading) ** 2, axis=1))
    )
    # ||eps^2 P(eps .)||^2 over all x is eps ||P||^2.
    total_mass = eps * sum(packet_norm(desc) ** 2 for desc in packets)
    result = ResidualResult(
        eps=eps,
        rho=_proxy(eps, grid.weights, coefficients - leading),
        reference=_proxy(eps, grid.weights, leading),
        coverage=leading_mass / total_mass,
        flagged=flagged,
    )
    logger.info(
        'Residual for j={} eps={}: rho={:.6e} reference={:.6e} '
        'coverage={:.6f}'.format(
            j, eps, result.rho, result.reference, result.coverage
        )
    )
    return result


def nonstationary_ratio(
    cfg,
    j,
    t,
    eps,
    x_grid=None,
    n_set=None,
    pool=None,
    quad=None,
    rotation=None,
):
    '''Return the :class:`RatioResult` of the complement coefficients
    against the cone coefficients of oscillator *j* on *x_grid*.

    *rotation* replaces the pole rotation R_j in both integrals.
    '''
    scaled, geom, n_set = _prepare(cfg, j, t, eps, n_set)
    grid = tube_grid(geom, j, n_set) if x_grid is None else x_grid
    pool = pool or OrderedPool(1)

    def evaluate(point):
        values = []
        flagged = False
        for region in (constants.REGION_COMPLEMENT, constants.REGION_CONE):
            results = first_order_coefficients(
                scaled,
                j,
                n_set,
                t,
                point,
                region=region,
                quad=quad,
                rotation=rotation,
                geom=geom,
            )
            values.append([result.value for result in results])
            flagged = flagged or any(result.flagged for result in results)
        return values, flagged

    evaluated = pool.map(evaluate, list(grid.points))
    complement = np.array([item[0][0] for item in evaluated])
    cone = np.array([item[0][1] for item in evaluated])
    complement_norm = _proxy(eps, grid.weights, complement)
    cone_norm = _proxy(eps, grid.weights, cone)
    result = RatioResult(
        eps=eps,
        ratio=complement_norm / cone_norm,
        complement_norm=complement_norm,
        cone_norm=cone_norm,
        flagged=any(item[1] for item in evaluated),
    )
    logger.info(
        'Non stationary ratio for j={} eps={}: {:.6e}'.format(
            j, eps, result.ratio
        )
    )
    return result
