# :coding: utf-8
# :copyright: Copyright (c) 2024 ftrack

from mott_track.oracle.phase import (
    phase_value,
    rotated_point,
    reduced_phase,
    split_phase,
    critical_point,
    critical_gradient_norm,
    StretchedCoordinates,
    stretch_coordinates,
)
from mott_track.oracle.gaussian import (
    axis_integral,
    axis_integrals,
    axis_integrals_quadrature,
)
from mott_track.oracle.coefficient import (
    CoeffResult,
    first_order_coefficients,
    first_order_coeff,
)
from mott_track.oracle.consistency import leading_term, leading_consistency
from mott_track.oracle.residual import (
    TubeGrid,
    ResidualResult,
    RatioResult,
    default_channels,
    tube_grid,
    residual_norm,
    nonstationary_ratio,
)
from mott_track.oracle.bounds import (
    PhaseBoundResult,
    delta_bound,
    second_order_phase_bound,
    complement_gradient_bound,
)
