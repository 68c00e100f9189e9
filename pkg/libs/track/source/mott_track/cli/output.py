# :coding: utf-8
# :copyright: Copyright (c) 2024 ftrack
import sys
import logging

import numpy as np
import pandas as pd

from mott_constants import cli as constants

logger = logging.getLogger(__name__)

REAL_SUFFIX = '_re'
IMAG_SUFFIX = '_im'


def float_format(digits):
    return '%.{}g'.format(digits)


def format_value(value, digits=constants.CONSOLE_DIGITS):
    '''Format *value* for the console, complex values as a re/im pair.'''
    if isinstance(value, (complex, np.complexfloating)):
        return '{} {}'.format(
            format_value(value.real, digits),
            format_value(value.imag, digits),
        )
    if isinstance(value, (float, np.floating)):
        return float_format(digits) % value
    return str(value)


def split_complex(frame):
    '''Return *frame* with each complex column replaced by its real and
    imaginary columns, in place of the original.'''
    columns = {}
    for name in frame.columns:
        column = frame[name]
        if np.iscomplexobj(column.to_numpy()):
            values = column.to_numpy(dtype=complex)
            columns[name + REAL_SUFFIX] = values.real
            columns[name + IMAG_SUFFIX] = values.imag
        else:
            columns[name] = column
    return pd.DataFrame(columns, index=frame.index)


def write_table(frame, out=None, stream=None):
    '''Write *frame* as RFC-4180 CSV with LF line endings.

    To the file *out* with :data:`FILE_DIGITS` significant digits, else to
    *stream* (default standard output) with :data:`CONSOLE_DIGITS`.
    '''
    frame = split_complex(frame)
    if out is not None:
        logger.info('Writing {} rows to {}'.format(len(frame), out))
        with open(out, 'w', encoding='utf-8', newline='') as file:
            frame.to_csv(
                file,
                index=False,
                float_format=float_format(constants.FILE_DIGITS),
                lineterminator='\n',
            )
        return
    frame.to_csv(
        stream or sys.stdout,
        index=False,
        float_format=float_format(constants.CONSOLE_DIGITS),
        lineterminator='\n',
    )


def write_summary(values, stream=None):
    '''Print the ``key=value`` line of *values*, in order.'''
    stream = stream or sys.stdout
    stream.write(
        ' '.join(
            '{}={}'.format(key, format_value(value))
            for key, value in values.items()
        )
        + '\n'
    )
