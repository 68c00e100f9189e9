# :coding: utf-8
# :copyright: Copyright (c) 2024 ftrack
import math

import numpy as np

from mott_track.model.config import MultiIndex, multi_indices
from mott_track.quadrature.rules import gauss_legendre
from mott_track.kernels.zeta import zeta2

# Powers of -i, exact.
_MINUS_I_POWERS = (1.0 + 0.0j, -1.0j, -1.0 + 0.0j, 1.0j)


def minus_i_power(n):
    return _MINUS_I_POWERS[n % 4]


def pair_ft_coefficient(n):
    '''Return 2^(-n/2) / sqrt(n!), the modulus factor of the pair
    transform of order *n*.'''
    return math.exp(-0.5 * n * math.log(2.0) - 0.5 * math.lgamma(n + 1))


def pair_ft_1d(n, xi):
    '''Fourier transform of phi_n phi_0 with kernel exp(-i xi x) and no
    prefactor: 2^(-n/2) (n!)^(-1/2) (-i)^n xi^n exp(-xi^2 / 4).'''
    if n < 0:
        raise ValueError('Pair order must be non negative, got {}'.format(n))
    xi = np.asarray(xi, dtype=float)
    return (
        pair_ft_coefficient(n)
        * minus_i_power(n)
        * xi**n
        * np.exp(-0.25 * xi * xi)
    )


def potential(y, width):
    '''Gaussian interaction V(y) = exp(-|y|^2 / (2 w^2)).'''
    y = np.asarray(y, dtype=float)
    return np.exp(-0.5 * np.sum(y * y, axis=-1) / width**2)


def potential_ft(xi, width):
    '''Fourier transform of :func:`potential`, carrying (2 pi)^-3 with
    kernel exp(-i xi y).'''
    if not width > 0:
        raise ValueError('Potential width must be positive')
    xi = np.asarray(xi, dtype=float)
    return (
        (2.0 * math.pi) ** -3
        * (2.0 * math.pi * width * width) ** 1.5
        * np.exp(-0.5 * width * width * np.sum(xi * xi, axis=-1))
    )


def potential_ft_roundtrip(y, width, nodes=96, cutoff=10.0):
    '''Return V(*y*) rebuilt from :func:`potential_ft` by per axis
    quadrature of the inverse transform (kernel exp(+i xi y), no
    prefactor).'''
    y = np.asarray(y, dtype=float)
    xi, weights = gauss_legendre(nodes, -cutoff / width, cutoff / width)
    axis_factor = (2.0 * math.pi) ** -1 * math.sqrt(
        2.0 * math.pi * width * width
    )
    result = 1.0 + 0.0j
    for component in y:
        result *= axis_factor * np.sum(
            weights
            * np.exp(-0.5 * width * width * xi * xi)
            * np.exp(1j * xi * component)
        )
    return result


def coupling_g(n, xi, width):
    '''Pair coupling g_{n,0}(xi) = (phi_n phi_0)~(xi) V~(xi).'''
    n = MultiIndex.parse(n)
    xi = np.asarray(xi, dtype=float)
    result = potential_ft(xi, width).astype(complex)
    for axis, order in enumerate(n):
        result = result * pair_ft_1d(order, xi[..., axis])
    return result


def coupling_g_gradient(n, xi, width):
    '''Gradient of :func:`coupling_g` in *xi*, stacked on the last axis.'''
    n = MultiIndex.parse(n)
    xi = np.asarray(xi, dtype=float)
    decay = 0.5 * width * width + 0.25
    constant = (
        (2.0 * math.pi) ** -3
        * (2.0 * math.pi * width * width) ** 1.5
        * np.prod([pair_ft_coefficient(order) for order in n])
        * minus_i_power(n.degree)
    )
    factors, derivatives = [], []
    for axis, order in enumerate(n):
        component = xi[..., axis]
        gauss = np.exp(-decay * component * component)
        factors.append(component**order * gauss)
        leading = order * component ** (order - 1) if order else 0.0
        derivatives.append(
            (leading - 2.0 * decay * component ** (order + 1)) * gauss
        )
    gradient = [
        constant
        * derivatives[axis]
        * factors[(axis + 1) % 3]
        * factors[(axis + 2) % 3]
        for axis in range(3)
    ]
    return np.stack(gradient, axis=-1)


def _index_table(n_max):
    return np.array([tuple(n) for n in multi_indices(n_max)], dtype=int)


def _channel_terms(xi, xi2, n_max):
    '''Return the multi index table and, per channel, the product over
    axes of the pair transform at xi times its conjugate at xi2.'''
    xi = np.asarray(xi, dtype=float)
    xi2 = np.asarray(xi2, dtype=float)
    table = _index_table(n_max)
    orders = np.arange(n_max + 1)
    per_axis = np.array(
        [
            [
                pair_ft_1d(k, xi[axis]) * np.conj(pair_ft_1d(k, xi2[axis]))
                for k in orders
            ]
            for axis in range(3)
        ]
    )
    terms = (
        per_axis[0, table[:, 0]]
        * per_axis[1, table[:, 1]]
        * per_axis[2, table[:, 2]]
    )
    return table, terms


def pair_sum(xi, xi2, n_max, width):
    '''Return (lhs, rhs) of the channel completeness identity at t = 0.

    lhs is the truncated sum over |n| <= *n_max* of
    g_{n,0}(xi) conj(g_{n,0}(xi2)); rhs is
    V~(xi) conj(V~(xi2)) exp(-|xi - xi2|^2 / 4).
    '''
    if n_max < 0:
        raise ValueError('n_max must be non negative, got {}'.format(n_max))
    xi = np.asarray(xi, dtype=float)
    xi2 = np.asarray(xi2, dtype=float)
    potentials = potential_ft(xi, width) * potential_ft(xi2, width)
    _, terms = _channel_terms(xi, xi2, n_max)
    lhs = potentials * np.sum(terms)
    rhs = potentials * math.exp(-0.25 * float(np.sum((xi - xi2) ** 2)))
    return complex(lhs), complex(rhs)


def pair_sum_evolved(theta, xi, xi2, n_max, width):
    '''Return (lhs, rhs) of the channel sum weighted by the oscillator
    phase exp(-i |n| theta).

    rhs is V~(xi) conj(V~(xi2)) exp(3 i theta / 2) zeta_theta(xi, xi2);
    at theta = 0 the identity is :func:`pair_sum`.
    '''
    xi = np.asarray(xi, dtype=float)
    xi2 = np.asarray(xi2, dtype=float)
    potentials = potential_ft(xi, width) * potential_ft(xi2, width)
    table, terms = _channel_terms(xi, xi2, n_max)
    phases = np.exp(-1j * theta * table.sum(axis=1))
    lhs = potentials * np.sum(phases * terms)
    rhs = potentials * np.exp(1.5j * theta) * zeta2(theta, xi, xi2)
    return complex(lhs), complex(rhs)
