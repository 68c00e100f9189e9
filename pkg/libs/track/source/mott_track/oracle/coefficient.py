# :coding: utf-8
# :copyright: Copyright (c) 2024 ftrack
import math
import logging
import dataclasses

import numpy as np

from mott_constants import numerics as constants
from mott_utils.reduce import pairwise_sum

from mott_track.model import (
    MultiIndex,
    derive_geometry,
    normalization_constant,
)
from mott_track.kernels.transforms import (
    minus_i_power,
    pair_ft_coefficient,
)
from mott_track.quadrature import gauss_legendre, region_rule
from mott_track.oracle.gaussian import (
    axis_integrals,
    axis_integrals_quadrature,
)

logger = logging.getLogger(__name__)

# Time nodes handled per vectorised block.
_CLOSED_FORM_BLOCK = 16
_QUADRATURE_BLOCK = 1


@dataclasses.dataclass(frozen=True)
class CoeffResult(object):
    '''First order coefficient of one channel at one point.

    *value* is computed with the doubled node counts, *est_error* is its
    distance to the value at the base counts.
    '''

    n: MultiIndex
    value: complex
    est_error: float
    region: str
    flagged: bool


def _identity(value):
    return value


def _prefactor(cfg, x):
    '''-i N_eps / eps^(5/2) times the constants of V~ and f.'''
    eps, width = cfg.epsilon, cfg.potential_width
    potential = (2.0 * math.pi) ** -3 * (
        2.0 * math.pi * width * width
    ) ** 1.5
    return (
        -1j
        * normalization_constant(eps, cfg.v0)
        * eps**-2.5
        * potential
        * math.pi**-0.75
        * math.exp(-0.5 * float(np.dot(x, x)))
    )


def _block_sums(cfg, channels, a_j, x, s, s_weights, rule, quad, conj):
    '''Per channel weighted sums over one block of time nodes.'''
    eps, v0 = cfg.epsilon, cfg.v0
    decay = 0.5 * cfg.potential_width**2 + 0.25
    u = rule.directions
    alpha = (decay + 0.5 * s * s - 0.5j * s)[:, None, None]
    beta = (1j - s[:, None, None]) * x + 1j * (
        v0 * s[:, None, None] * u[None, :, :] - a_j
    ) / eps
    alpha, beta = conj(alpha), conj(beta)

    m_max = max(max(n) for n in channels)
    if quad.xi_mode == constants.XI_CLOSED_FORM:
        table = axis_integrals(m_max, alpha, beta)
    else:
        table = axis_integrals_quadrature(
            m_max, alpha, beta, quad.xi_nodes, quad.xi_cutoff
        )

    weights = s_weights[:, None] * rule.weights[None, :]
    carrier = v0 * (u @ x)[None, :]
    sums = []
    for n in channels:
        product = table[n.n1, ..., 0] * table[n.n2, ..., 1] * table[
            n.n3, ..., 2
        ]
        phase = conj(np.exp(1j * (carrier + n.degree * s[:, None]) / eps))
        sums.append(pairwise_sum((weights * phase * product).ravel()))
    return np.array(sums)


def _evaluate(cfg, geom, j, channels, t, x, region, quad, rotation, conj):
    if t <= 0:
        return np.zeros(len(channels), dtype=complex)
    s_all, s_weights_all = gauss_legendre(quad.s_nodes, 0.0, t)
    rule = region_rule(region, geom.theta0, quad.munu_nodes).rotated(
        geom.rotation_of(j) if rotation is None else rotation
    )
    a_j = cfg.position(j)
    block = (
        _CLOSED_FORM_BLOCK
        if quad.xi_mode == constants.XI_CLOSED_FORM
        else _QUADRATURE_BLOCK
    )
    blocks = [
        _block_sums(
            cfg,
            channels,
            a_j,
            x,
            s_all[start : start + block],
            s_weights_all[start : start + block],
            rule,
            quad,
            conj,
        )
        for start in range(0, quad.s_nodes, block)
    ]
    totals = pairwise_sum(np.array(blocks))
    constants_per_channel = np.array(
        [
            conj(minus_i_power(n.degree))
            * pair_ft_coefficient(n.n1)
            * pair_ft_coefficient(n.n2)
            * pair_ft_coefficient(n.n3)
            for n in channels
        ]
    )
    return conj(_prefactor(cfg, x)) * constants_per_channel * totals


def first_order_coefficients(
    cfg,
    j,
    channels,
    t,
    x,
    region=constants.REGION_CONE,
    quad=None,
    rotation=None,
    geom=None,
    conjugate=False,
):
    '''Return a :class:`CoeffResult` per multi index of *channels* for
    oscillator *j* at time *t* and rescaled point *x*.

    The xi integral factorises over lab axes into
    :func:`~mott_track.oracle.gaussian.axis_integrals`; the time and
    angular integrals use Gauss-Legendre and the angular rule of *region*.
    All channels share the outer grid. The error estimate compares the
    node counts of *quad* (default ``cfg.quad``) and their double.

    *rotation* replaces the pole rotation R_j. With *conjugate* every
    phase is conjugated, which yields the conjugate coefficient.
    '''
    channels = [MultiIndex.parse(n) for n in channels]
    quad = quad or cfg.quad
    geom = geom or derive_geometry(cfg)
    cfg.index(j)
    if region not in constants.REGIONS:
        raise ValueError(
            'Unknown region {!r}, expected one of {}'.format(
                region, constants.REGIONS
            )
        )
    x = np.asarray(x, dtype=float)
    conj = np.conj if conjugate else _identity

    coarse = _evaluate(
        cfg, geom, j, channels, t, x, region, quad, rotation, conj
    )
    fine = _evaluate(
        cfg, geom, j, channels, t, x, region, quad.doubled(), rotation, conj
    )
    results = []
    for n, value, reference in zip(channels, fine, coarse):
        error = float(abs(value - reference))
        flagged = error > quad.target_tol
        if flagged:
            logger.warning(
                'Coefficient j={} n={} at x={} not converged: est_error '
                '{:.3e} > {:.3e}'.format(
                    j, n, x.tolist(), error, quad.target_tol
                )
            )
        results.append(
            CoeffResult(
                n=n,
                value=complex(value),
                est_error=error,
                region=region,
                flagged=flagged,
            )
        )
    return results


def first_order_coeff(
    cfg,
    j,
    n,
    t,
    x,
    region=constants.REGION_CONE,
    quad=None,
    conjugate=False,
    rotation=None,
    geom=None,
):
    '''Single channel form of :func:`first_order_coefficients`.'''
    return first_order_coefficients(
        cfg,
        j,
        [n],
        t,
        x,
        region=region,
        quad=quad,
        rotation=rotation,
        geom=geom,
        conjugate=conjugate,
    )[0]
