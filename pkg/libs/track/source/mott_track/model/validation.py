# :coding: utf-8
# :copyright: Copyright (c) 2024 ftrack
import logging
import dataclasses
from typing import Tuple

import numpy as np

from mott_constants import numerics as constants

from mott_track.model.config import all_pairs

logger = logging.getLogger(__name__)

EPSILON_RANGE = 'epsilon_range'
V0_POSITIVE = 'v0_positive'
OSCILLATORS_PRESENT = 'oscillators_present'
POTENTIAL_WIDTH_POSITIVE = 'potential_width_positive'
ZERO_POSITION = 'zero_position'
ASSUMPTION_B_ORDERING = 'assumption_b_ordering'
ASSUMPTION_B_ALIGNMENT = 'assumption_b_alignment'
T_FINAL_AFTER_LAST_FLIGHT = 't_final_after_last_flight'
N_MAX_NON_NEGATIVE = 'n_max_non_negative'

RULE_NAMES = [
    EPSILON_RANGE,
    V0_POSITIVE,
    OSCILLATORS_PRESENT,
    POTENTIAL_WIDTH_POSITIVE,
    ZERO_POSITION,
    ASSUMPTION_B_ORDERING,
    ASSUMPTION_B_ALIGNMENT,
    T_FINAL_AFTER_LAST_FLIGHT,
    N_MAX_NON_NEGATIVE,
]


@dataclasses.dataclass(frozen=True)
class ValidationReport(object):
    '''Outcome of :func:`validate_config`: the violated rule names and one
    message per violation.'''

    violations: Tuple[Tuple[str, str], ...] = ()

    @property
    def passed(self):
        return not self.violations

    @property
    def rules(self):
        return [rule for rule, _ in self.violations]

    @property
    def messages(self):
        return [message for _, message in self.violations]

    def __bool__(self):
        return self.passed

    def __str__(self):
        if self.passed:
            return 'configuration valid'
        return '; '.join(
            '{}: {}'.format(rule, message)
            for rule, message in self.violations
        )


def validate_config(cfg):
    '''Check every model rule on *cfg* and report the violations.

    Never raises for a rule violation.
    '''
    violations = []

    def fail(rule, message):
        violations.append((rule, message))

    if not 0.0 < cfg.epsilon < 1.0:
        fail(EPSILON_RANGE, 'epsilon={} outside (0, 1)'.format(cfg.epsilon))
    if not cfg.v0 > 0.0:
        fail(V0_POSITIVE, 'v0={} must be positive'.format(cfg.v0))
    if not cfg.potential_width > 0.0:
        fail(
            POTENTIAL_WIDTH_POSITIVE,
            'potential_width={} must be positive'.format(
                cfg.potential_width
            ),
        )
    if cfg.n_max < 0:
        fail(N_MAX_NON_NEGATIVE, 'n_max={} is negative'.format(cfg.n_max))

    positions = cfg.positions
    if positions.shape[0] == 0:
        fail(OSCILLATORS_PRESENT, 'at least one oscillator is required')
        return _report(violations)

    distances = np.linalg.norm(positions, axis=1)
    zero = [j + 1 for j in np.flatnonzero(distances == 0.0)]
    if zero:
        fail(
            ZERO_POSITION,
            'zero oscillator position for oscillator(s) {}'.format(zero),
        )
        return _report(violations)

    margin = constants.ASSUMPTION_MARGIN
    for j in range(1, len(distances)):
        if distances[j] <= distances[j - 1] * (1.0 + margin):
            fail(
                ASSUMPTION_B_ORDERING,
                'assumption (B) violated: |a_{}|={} is not strictly '
                'larger than |a_{}|={}'.format(
                    j + 1, distances[j], j, distances[j - 1]
                ),
            )
    for i, k in all_pairs(len(distances)):
        product = distances[i] * distances[k]
        if float(np.dot(positions[i], positions[k])) >= product * (
            1.0 - margin
        ):
            fail(
                ASSUMPTION_B_ALIGNMENT,
                'assumption (B) violated: a_{} and a_{} point the same '
                'way'.format(i + 1, k + 1),
            )

    if cfg.v0 > 0.0:
        last_flight = float(distances.max()) / cfg.v0
        if not cfg.t_final > last_flight:
            fail(
                T_FINAL_AFTER_LAST_FLIGHT,
                't_final={} not after the last flight time {}'.format(
                    cfg.t_final, last_flight
                ),
            )

    return _report(violations)


def _report(violations):
    report = ValidationReport(tuple(violations))
    if not report.passed:
        logger.debug('Validation failed: {}'.format(report))
    return report
