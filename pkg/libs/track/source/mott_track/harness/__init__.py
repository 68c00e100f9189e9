# :coding: utf-8
# :copyright: Copyright (c) 2024 ftrack

from mott_track.harness.slope import SlopeFit, fit_slope
from mott_track.harness.suite import (
    SuiteRow,
    SuiteReport,
    run_identity_suite,
)
from mott_track.harness.studies import (
    ScalingStudy,
    NonstationaryStudy,
    normalise_eps_list,
    run_scaling_study,
    run_nonstationary_study,
)
