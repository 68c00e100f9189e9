# :coding: utf-8
# :copyright: Copyright (c) 2024 ftrack
import dataclasses

import numpy as np
from scipy import fft

from mott_constants import numerics as constants

from mott_track.exceptions import SupportEscapeError


@dataclasses.dataclass(frozen=True)
class ShiftResult(object):
    '''Both sides of the conjugated shift identity on *grid*.'''

    grid: np.ndarray
    closed_form: np.ndarray
    spectral: np.ndarray

    @property
    def sup_error(self):
        return float(np.max(np.abs(self.closed_form - self.spectral)))


def _check_support(values, what):
    edge = max(1, values.shape[0] // 32)
    scale = np.max(np.abs(values))
    boundary = max(
        np.max(np.abs(values[:edge])), np.max(np.abs(values[-edge:]))
    )
    if scale > 0 and boundary > constants.SUPPORT_TOLERANCE * scale:
        raise SupportEscapeError(
            '{} reaches the grid boundary ({:.3e} of its peak)'.format(
                what, boundary / scale
            )
        )


def conjugated_shift(profile, grid, s, xi, eps):
    '''Evaluate e^{ish} e^{i xi R / eps} e^{-ish} g for the free generator
    h = -(eps^2 / 2) d^2/dR^2 both ways.

    The closed form is e^{i s xi^2 / 2} e^{i xi R / eps} g(R + eps s xi);
    the spectral side propagates the samples of *profile* on the uniform
    periodic *grid* by Fourier symbol multiplication. Raise
    :exc:`SupportEscapeError` when a profile does not vanish at the grid
    boundary.
    '''
    grid = np.asarray(grid, dtype=float)
    samples = np.asarray(profile(grid), dtype=complex)
    _check_support(samples, 'profile')

    shifted = np.asarray(profile(grid + eps * s * xi), dtype=complex)
    _check_support(shifted, 'shifted profile')
    closed_form = (
        np.exp(0.5j * s * xi * xi) * np.exp(1j * xi * grid / eps) * shifted
    )

    step = grid[1] - grid[0]
    k = 2.0 * np.pi * fft.fftfreq(grid.shape[0], d=step)
    symbol = np.exp(-0.5j * s * eps * eps * k * k)
    state = fft.ifft(fft.fft(samples) * symbol)
    state = state * np.exp(1j * xi * grid / eps)
    spectral = fft.ifft(fft.fft(state) * np.conj(symbol))
    _check_support(spectral, 'propagated profile')

    return ShiftResult(grid, closed_form, spectral)
