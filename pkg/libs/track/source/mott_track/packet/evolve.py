# :coding: utf-8
# :copyright: Copyright (c) 2024 ftrack
import math
import logging
import dataclasses

import numpy as np
from scipy import fft

from mott_constants import numerics as constants

from mott_track.exceptions import GridEscapeError
from mott_track.packet.evaluate import (
    chirped_profile,
    split_coordinates,
    longitudinal_factor,
    packet_eval,
)
from mott_track.packet.norms import (
    packet_moments,
    longitudinal_position_moments,
)

logger = logging.getLogger(__name__)

_MIN_POINTS = 64
_MAX_POINTS = 2048
# Grid half width and band limit in standard deviations.
_SPREAD = 10.0


@dataclasses.dataclass(frozen=True)
class TransverseGrid(object):
    '''Transverse profile A_t sampled on a periodic square grid.

    *points* are the node coordinates along each frame axis, *values*
    the profile on the grid (first index along the first transverse
    axis) and *coefficients* its two dimensional FFT.
    '''

    t: float
    points: np.ndarray
    values: np.ndarray
    coefficients: np.ndarray
    escape_fraction: float

    @property
    def size(self):
        return self.points.shape[0]

    @property
    def spacing(self):
        return float(self.points[1] - self.points[0])

    def mass(self):
        '''Integral of |A_t|^2 over the plane.'''
        return float(np.sum(np.abs(self.values) ** 2) * self.spacing**2)

    def mean(self):
        '''Mean of the frame coordinates under |A_t|^2.'''
        intensity = np.abs(self.values) ** 2
        total = np.sum(intensity)
        return np.array(
            [
                np.sum(intensity.sum(axis=1) * self.points) / total,
                np.sum(intensity.sum(axis=0) * self.points) / total,
            ]
        )

    def interpolate(self, q):
        '''Trigonometric interpolant at frame points *q* (last axis 2).'''
        q = np.asarray(q, dtype=float)
        flat = q.reshape(-1, 2) - self.points[0]
        wave = 2.0 * math.pi * fft.fftfreq(self.size, d=self.spacing)
        first = np.exp(1j * flat[:, 0, None] * wave)
        second = np.exp(1j * flat[:, 1, None] * wave)
        values = np.einsum(
            'ia,ab,ib->i', first, self.coefficients, second
        ) / (self.size * self.size)
        return values.reshape(q.shape[:-1])


def _grid_size(half_width, band):
    required = 2.0 * half_width * band / math.pi
    size = _MIN_POINTS
    while size < required and size < _MAX_POINTS:
        size *= 2
    if size < required:
        logger.warning(
            'Transverse grid capped at {} points, {:.0f} wanted'.format(
                size, required
            )
        )
    return size


def _escape_fraction(values):
    intensity = np.abs(values) ** 2
    ring = values.shape[0] // 16
    inner = intensity[ring:-ring, ring:-ring].sum()
    total = intensity.sum()
    return float((total - inner) / total)


def evolve_transverse_grid(desc, t):
    '''Return the :class:`TransverseGrid` of the profile evolved freely
    for the time *t* (symbol exp(-i t |k|^2 / 2) in the stretched
    variables).

    Raise :exc:`GridEscapeError` when more than 1e-10 of the mass lies in
    the boundary ring.
    '''
    if t < 0:
        raise ValueError(
            'Evolution time must be non negative, got {}'.format(t)
        )
    moments = packet_moments(desc)
    eps = desc.eps
    mean_y = np.abs(moments.mean_pos[:2]) / eps
    mean_k = np.abs(moments.mean_mom[:2]) / eps
    sigma_y = float(np.max(moments.std_pos[:2])) / eps
    sigma_k = float(np.max(moments.std_mom[:2])) / eps

    half_width = float(np.max(mean_y + t * mean_k)) + _SPREAD * (
        sigma_y + t * sigma_k
    )
    band = float(np.max(mean_k)) + _SPREAD * sigma_k
    size = _grid_size(half_width, band)
    points = -half_width + (2.0 * half_width / size) * np.arange(size)
    axes = desc.transverse_axes
    y = points[:, None, None] * axes[0] + points[None, :, None] * axes[1]

    coefficients = fft.fft2(chirped_profile(desc, y))
    wave = 2.0 * math.pi * fft.fftfreq(size, d=points[1] - points[0])
    symbol = np.exp(-0.5j * t * (wave[:, None] ** 2 + wave[None, :] ** 2))
    coefficients = coefficients * symbol
    values = fft.ifft2(coefficients)

    fraction = _escape_fraction(values)
    logger.debug(
        'Transverse grid for j={} n={} t={}: {} points, half width {:.3f}, '
        'ring mass {:.3e}'.format(
            desc.j, desc.n, t, size, half_width, fraction
        )
    )
    if fraction > constants.ESCAPE_TOLERANCE:
        raise GridEscapeError(fraction)
    return TransverseGrid(
        t=float(t),
        points=points,
        values=values,
        coefficients=coefficients,
        escape_fraction=fraction,
    )


def packet_evolve(desc, t, R, grid=None):
    '''Value at *R* of the packet evolved freely for the time *t*.

    The longitudinal factor is exact; the transverse factor comes from the
    spectral grid, which may be passed in as *grid* to evaluate many
    points.
    '''
    if t < 0:
        raise ValueError(
            'Evolution time must be non negative, got {}'.format(t)
        )
    if t == 0:
        return packet_eval(desc, R)
    grid = grid or evolve_transverse_grid(desc, t)
    along, across = split_coordinates(desc, R)
    q = (across @ desc.transverse_axes.T) / desc.eps
    return (
        desc.amplitude
        * desc.eps**-1.5
        * grid.interpolate(q)
        * longitudinal_factor(desc, along, t)
    )


def evolved_center(desc, t):
    '''Lab position of the centre of |P_t|^2, by quadrature of the evolved
    longitudinal factor along a_hat and of the evolved grid across it.'''
    along, _ = longitudinal_position_moments(desc, t)
    grid = evolve_transverse_grid(desc, t)
    across = desc.eps * grid.mean()
    return along * desc.a_hat + across @ desc.transverse_axes
