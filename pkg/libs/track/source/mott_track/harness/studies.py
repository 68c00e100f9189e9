# :coding: utf-8
# :copyright: Copyright (c) 2024 ftrack
import logging
import dataclasses
from typing import List

import pandas as pd

from mott_constants import cli as cli_constants
from mott_constants import numerics as constants
from mott_utils.decorators import log_duration
from mott_utils.threading import OrderedPool

from mott_track.oracle import (
    ResidualResult,
    RatioResult,
    residual_norm,
    nonstationary_ratio,
)
from mott_track.harness.slope import fit_slope

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class ScalingStudy(object):
    '''Residual proxy against eps, largest scale first.

    *fitted_slope_abs* is the log-log slope of rho, *fitted_slope_rel* that
    of rho / reference and *reference_slope* that of the leading term.
    *r_squared* belongs to the absolute fit.
    '''

    eps_list: List[float]
    residuals: List[ResidualResult]
    fitted_slope_abs: float
    fitted_slope_rel: float
    r_squared: float
    reference_slope: float

    @property
    def flagged(self):
        return any(result.flagged for result in self.residuals)

    def to_frame(self):
        return pd.DataFrame(
            [
                [
                    result.eps,
                    result.rho,
                    result.reference,
                    result.coverage,
                    result.flagged,
                ]
                for result in self.residuals
            ],
            columns=cli_constants.SCALING_COLUMNS,
        )


@dataclasses.dataclass(frozen=True)
class NonstationaryStudy(object):
    '''Complement over cone ratio against eps, largest scale first.'''

    eps_list: List[float]
    ratios: List[RatioResult]
    fitted_slope: float
    r_squared: float

    @property
    def flagged(self):
        return any(result.flagged for result in self.ratios)

    def to_frame(self):
        return pd.DataFrame(
            [
                [result.eps, result.ratio, result.flagged]
                for result in self.ratios
            ],
            columns=cli_constants.NONSTAT_COLUMNS,
        )


def normalise_eps_list(eps_list=None):
    '''Return *eps_list* (default :data:`DEFAULT_EPS_LIST`) sorted
    decreasing.

    Raise :exc:`ValueError` for fewer than three distinct scales or a scale
    below :data:`MIN_STUDY_EPSILON`.
    '''
    if eps_list is None:
        eps_list = constants.DEFAULT_EPS_LIST
    eps_list = sorted({float(eps) for eps in eps_list}, reverse=True)
    if len(eps_list) < 3:
        raise ValueError(
            'A study needs at least 3 distinct scales, got {}'.format(
                eps_list
            )
        )
    if eps_list[-1] < constants.MIN_STUDY_EPSILON:
        raise ValueError(
            'Scale {} below the smallest supported {}'.format(
                eps_list[-1], constants.MIN_STUDY_EPSILON
            )
        )
    return eps_list


@log_duration
def run_scaling_study(cfg, eps_list=None, j=1, t=None, pool=None, **kwargs):
    '''Measure :func:`~mott_track.oracle.residual_norm` of oscillator *j*
    at time *t* (default ``cfg.t_final``) over *eps_list*.

    The list is order normalised, so a shuffled input gives the same
    study. Extra *kwargs* go to the residual (``x_grid``, ``n_set``,
    ``quad``).
    '''
    eps_list = normalise_eps_list(eps_list)
    t = cfg.t_final if t is None else t
    pool = pool or OrderedPool(1)

    residuals = []
    for eps in eps_list:
        logger.info('Scaling study: eps={}'.format(eps))
        residuals.append(residual_norm(cfg, j, t, eps, pool=pool, **kwargs))

    absolute = fit_slope((result.eps, result.rho) for result in residuals)
    relative = fit_slope(
        (result.eps, result.relative) for result in residuals
    )
    reference = fit_slope(
        (result.eps, result.reference) for result in residuals
    )
    study = ScalingStudy(
        eps_list=eps_list,
        residuals=residuals,
        fitted_slope_abs=absolute.slope,
        fitted_slope_rel=relative.slope,
        r_squared=absolute.r_squared,
        reference_slope=reference.slope,
    )
    if study.flagged:
        logger.warning('Scaling study holds flagged coefficients')
    logger.info(
        'Scaling study: slope_abs={:.6f} slope_rel={:.6f} r2={:.6f}'.format(
            study.fitted_slope_abs, study.fitted_slope_rel, study.r_squared
        )
    )
    return study


@log_duration
def run_nonstationary_study(
    cfg, eps_list=None, j=1, t=None, pool=None, **kwargs
):
    '''Measure :func:`~mott_track.oracle.nonstationary_ratio` of
    oscillator *j* over *eps_list* and fit its log-log slope.'''
    eps_list = normalise_eps_list(eps_list)
    t = cfg.t_final if t is None else t
    pool = pool or OrderedPool(1)

    ratios = []
    for eps in eps_list:
        logger.info('Non stationary study: eps={}'.format(eps))
        ratios.append(
            nonstationary_ratio(cfg, j, t, eps, pool=pool, **kwargs)
        )

    fit = fit_slope((result.eps, result.ratio) for result in ratios)
    study = NonstationaryStudy(
        eps_list=eps_list,
        ratios=ratios,
        fitted_slope=fit.slope,
        r_squared=fit.r_squared,
    )
    if study.flagged:
        logger.warning('Non stationary study holds flagged coefficients')
    logger.info(
        'Non stationary study: slope={:.6f} r2={:.6f}'.format(
            study.fitted_slope, study.r_squared
        )
    )
    return study
