# :coding: utf-8
# :copyright: Copyright (c) 2024 ftrack
import logging
import collections

import numpy as np
import pandas as pd

from mott_constants import cli as constants
from mott_utils.threading import OrderedPool

from mott_track.exceptions import ValidationError
from mott_track.config import load_run_config, run_config_channels
from mott_track.model import (
    MultiIndex,
    derive_geometry,
    time_scales,
    validate_config,
)
from mott_track.packet import (
    make_packet,
    packet_eval,
    packet_evolve,
    track_report,
)
from mott_track.oracle import first_order_coeff, leading_term, tube_grid
from mott_track.harness import (
    run_identity_suite,
    run_scaling_study,
    run_nonstationary_study,
)
from mott_track.cli.output import write_table, write_summary

logger = logging.getLogger(__name__)

Context = collections.namedtuple(
    'Context', ['run_config', 'cfg', 'geom', 'pool']
)


def load_context(namespace):
    '''Load and validate the configuration named by *namespace*.

    Raise :exc:`ValidationError` naming the violated rules.
    '''
    run_config = load_run_config(namespace.config)
    cfg = run_config.to_model_config(target_tol=namespace.tol)
    report = validate_config(cfg)
    if not report.passed:
        raise ValidationError(str(report), rules=report.rules)
    geom = derive_geometry(cfg)
    return Context(run_config, cfg, geom, OrderedPool(namespace.threads))


def _out(namespace, context):
    return namespace.out or context.run_config.output.path


def cmd_validate(namespace, stream=None):
    '''Print the flight times and the time scale summary.'''
    context = load_context(namespace)
    cfg, geom = context.cfg, context.geom
    scales = time_scales(geom)
    frame = pd.DataFrame(
        {
            'j': cfg.labels(),
            'a_x': cfg.positions[:, 0],
            'a_y': cfg.positions[:, 1],
            'a_z': cfg.positions[:, 2],
            'tau': list(geom.tau),
            'transit_over_tau': list(scales.transit_over_tau),
        }
    )
    write_table(frame, _out(namespace, context), stream)
    write_summary(
        collections.OrderedDict(
            [
                ('theta0', geom.theta0),
                ('period_osc', scales.period_osc),
                ('transit', scales.transit),
                ('transit_over_period', scales.transit_over_period),
                ('adiabatic', int(scales.adiabatic)),
            ]
        ),
        stream,
    )
    return constants.SUCCESS_EXIT_CODE


def cmd_tracks(namespace, stream=None):
    '''Write the track table, heaviest channel first.'''
    context = load_context(namespace)
    report = track_report(context.cfg, context.geom, context.pool)
    write_table(
        report[constants.TRACK_COLUMNS], _out(namespace, context), stream
    )
    return constants.SUCCESS_EXIT_CODE


def cmd_packet(namespace, stream=None):
    '''Write the packet value, or that of its free evolution.'''
    context = load_context(namespace)
    n = MultiIndex.parse(namespace.n)
    desc = make_packet(context.cfg, namespace.j, n, context.geom)
    R = np.asarray(namespace.R, dtype=float)
    if namespace.time:
        value = packet_evolve(desc, namespace.time, R)
    else:
        value = packet_eval(desc, R)
    frame = pd.DataFrame(
        [[namespace.j, n.n1, n.n2, n.n3, *R, namespace.time, complex(value)]],
        columns=['j', 'n1', 'n2', 'n3', 'x', 'y', 'z', 'time', 'value'],
    )
    write_table(frame, _out(namespace, context), stream)
    return constants.SUCCESS_EXIT_CODE


def cmd_oracle(namespace, stream=None):
    '''Write the first order coefficient with its error estimate and the
    leading term at the same point.'''
    context = load_context(namespace)
    cfg = context.cfg
    n = MultiIndex.parse(namespace.n)
    x = np.asarray(namespace.x, dtype=float)
    t = cfg.t_final if namespace.t is None else namespace.t
    result = first_order_coeff(
        cfg, namespace.j, n, t, x, region=namespace.region, geom=context.geom
    )
    leading = leading_term(cfg, namespace.j, n, x, context.geom)
    frame = pd.DataFrame(
        [
            [
                namespace.j,
                n.n1,
                n.n2,
                n.n3,
                *x,
                t,
                result.region,
                result.value,
                result.est_error,
                result.flagged,
                complex(leading),
            ]
        ],
        columns=[
            'j',
            'n1',
            'n2',
            'n3',
            'x',
            'y',
            'z',
            't',
            'region',
            'value',
            'est_error',
            'flagged',
            'leading',
        ],
    )
    write_table(frame, _out(namespace, context), stream)
    return constants.SUCCESS_EXIT_CODE


def cmd_identities(namespace, stream=None):
    '''Write the identity suite; exit status reflects the suite.'''
    context = load_context(namespace)
    report = run_identity_suite(context.cfg, context.geom)
    write_table(report.to_frame(), _out(namespace, context), stream)
    if report.passed:
        return constants.SUCCESS_EXIT_CODE
    logger.error(
        'Identity suite failed: {}'.format(
            ', '.join(row.name for row in report.rows if not row.passed)
        )
    )
    return constants.NUMERICAL_FAILURE_EXIT_CODE


def _study_options(context):
    run_config, cfg, geom = context.run_config, context.cfg, context.geom
    study = run_config.study
    n_set = run_config_channels(run_config, cfg)
    grid = study.x_grid
    return dict(
        eps_list=run_config.eps_list,
        j=study.j,
        t=study.t,
        pool=context.pool,
        n_set=n_set,
        x_grid=tube_grid(
            geom,
            study.j,
            n_set,
            radius=grid.radius,
            counts=grid.counts,
            margin=grid.margin,
        ),
    )


def cmd_scaling(namespace, stream=None):
    '''Write the residual table and the fitted absolute slope.'''
    context = load_context(namespace)
    study = run_scaling_study(context.cfg, **_study_options(context))
    write_table(study.to_frame(), _out(namespace, context), stream)
    write_summary(
        collections.OrderedDict(
            [
                ('slope_abs', study.fitted_slope_abs),
                ('r2', study.r_squared),
            ]
        ),
        stream,
    )
    return constants.SUCCESS_EXIT_CODE


def cmd_nonstat(namespace, stream=None):
    '''Write the complement over cone ratios and their fitted slope.'''
    context = load_context(namespace)
    study = run_nonstationary_study(context.cfg, **_study_options(context))
    write_table(study.to_frame(), _out(namespace, context), stream)
    write_summary(
        collections.OrderedDict(
            [('slope', study.fitted_slope), ('r2', study.r_squared)]
        ),
        stream,
    )
    return constants.SUCCESS_EXIT_CODE


#: Sub command name to handler.
COMMANDS = {
    'validate': cmd_validate,
    'tracks': cmd_tracks,
    'packet': cmd_packet,
    'oracle': cmd_oracle,
    'identities': cmd_identities,
    'scaling': cmd_scaling,
    'nonstat': cmd_nonstat,
}
