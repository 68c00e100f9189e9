# :coding: utf-8
# :copyright: Copyright (c) 2024 ftrack
from typing import NamedTuple

import numpy as np

from mott_track.exceptions import SlopeFitError

MIN_POINTS = 3


class SlopeFit(NamedTuple):
    '''Least squares line through (log x, log y).'''

    slope: float
    intercept: float
    r_squared: float


def fit_slope(points):
    '''Return the :class:`SlopeFit` of *points*, pairs (x, y) with x and
    y positive.

    Raise :exc:`SlopeFitError` for fewer than three points or a non
    positive coordinate.
    '''
    points = np.asarray(list(points), dtype=float).reshape(-1, 2)
    if points.shape[0] < MIN_POINTS:
        raise SlopeFitError(
            'Slope fit needs at least {} points, got {}'.format(
                MIN_POINTS, points.shape[0]
            )
        )
    if np.any(points <= 0) or not np.all(np.isfinite(points)):
        raise SlopeFitError(
            'Slope fit needs positive finite values, got {}'.format(
                points.tolist()
            )
        )
    log_x, log_y = np.log(points[:, 0]), np.log(points[:, 1])
    slope, intercept = np.polyfit(log_x, log_y, 1)
    residual = log_y - (slope * log_x + intercept)
    total = np.sum((log_y - np.mean(log_y)) ** 2)
    r_squared = 1.0 if total == 0 else 1.0 - np.sum(residual**2) / total
    r_squared = min(max(r_squared, 0.0), 1.0)
    return SlopeFit(float(slope), float(intercept), float(r_squared))
