# :coding: utf-8
# :copyright: Copyright (c) 2024 ftrack

from mott_track.kernels.hermite import (
    hermite_1d,
    hermite_functions,
    eigenfunction_3d,
)
from mott_track.kernels.transforms import (
    pair_ft_1d,
    pair_ft_coefficient,
    potential_ft,
    potential_ft_roundtrip,
    potential,
    coupling_g,
    coupling_g_gradient,
    pair_sum,
    pair_sum_evolved,
)
from mott_track.kernels.mehler import mehler_kernel, mehler_eigensum
from mott_track.kernels.zeta import zeta2, zeta_axis, zeta2_quadrature
from mott_track.kernels.shift import ShiftResult, conjugated_shift
