# :coding: utf-8
# :copyright: Copyright (c) 2024 ftrack

from mott_track.quadrature.spec import QuadSpec
from mott_track.quadrature.rules import (
    AngularRule,
    gauss_legendre,
    angular_rule,
    region_rule,
)
