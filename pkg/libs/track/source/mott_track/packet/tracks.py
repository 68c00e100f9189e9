# :coding: utf-8
# :copyright: Copyright (c) 2024 ftrack
import logging

import pandas as pd

from mott_constants import cli as cli_constants
from mott_utils.threading import OrderedPool

from mott_track.model import derive_geometry
from mott_track.packet.descriptor import make_packet
from mott_track.packet.norms import packet_norm

logger = logging.getLogger(__name__)

#: Extra column of the track report marking the n = 0 rows.
ELASTIC_COLUMN = 'elastic'


def channel_weight(desc):
    '''Leading order, unnormalised weight eps^4 ||P||^2 of the channel of
    *desc*.'''
    return desc.eps**4 * packet_norm(desc) ** 2


def _row(cfg, geom, j, n):
    desc = make_packet(cfg, j, n, geom)
    direction = desc.a_hat
    return {
        'j': j,
        'n1': n.n1,
        'n2': n.n2,
        'n3': n.n3,
        'abs_n': n.degree,
        'dir_x': float(direction[0]),
        'dir_y': float(direction[1]),
        'dir_z': float(direction[2]),
        'momentum': desc.momentum,
        'z_shift': desc.z_shift,
        'weight': channel_weight(desc),
        ELASTIC_COLUMN: n.is_ground,
    }


def track_report(cfg, geom=None, pool=None):
    '''Return the track table of *cfg* as a :class:`pandas.DataFrame`.

    One row per oscillator j and multi index |n| <= n_max, each with only
    oscillator j excited. Rows are sorted by weight, largest first, ties
    kept in (j, n) order. The ``elastic`` column marks the n = 0 rows,
    which deform the surviving spherical wave instead of exciting an
    oscillator.
    '''
    geom = geom or derive_geometry(cfg)
    pool = pool or OrderedPool(1)
    channels = [(j, n) for j in cfg.labels() for n in cfg.channels()]
    logger.info(
        'Computing {} channel weights on {} threads'.format(
            len(channels), pool.threads
        )
    )
    rows = pool.starmap(lambda j, n: _row(cfg, geom, j, n), channels)
    report = pd.DataFrame(
        rows, columns=cli_constants.TRACK_COLUMNS + [ELASTIC_COLUMN]
    )
    return report.sort_values(
        'weight', ascending=False, kind='mergesort'
    ).reset_index(drop=True)


def history_split(report):
    '''Return the (elastic, inelastic) parts of a track *report*.'''
    elastic = report[ELASTIC_COLUMN]
    return (
        report[elastic].reset_index(drop=True),
        report[~elastic].reset_index(drop=True),
    )
