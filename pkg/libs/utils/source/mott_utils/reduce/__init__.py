# :coding: utf-8
# :copyright: Copyright (c) 2024 ftrack

import numpy as np


def pairwise_sum(values):
    '''Sum *values* along the first axis with a fixed pairwise tree.

    The association order depends on the length only, so the result is
    bitwise reproducible whatever produced the values.
    '''
    values = np.asarray(values)
    if values.shape[0] == 0:
        return np.zeros(values.shape[1:], dtype=values.dtype)
    while values.shape[0] > 1:
        count = values.shape[0]
        paired = values[: count - count % 2 : 2] + values[1 : count : 2]
        if count % 2:
            paired = np.concatenate([paired, values[-1:]], axis=0)
        values = paired
    return values[0]
