# :coding: utf-8
# :copyright: Copyright (c) 2024 ftrack

from mott_track.model.config import ModelConfig, MultiIndex, multi_indices
from mott_track.model.geometry import (
    Geometry,
    TimeScales,
    derive_geometry,
    rotation_to_pole,
    cone_contains,
    time_scales,
)
from mott_track.model.validation import (
    ValidationReport,
    validate_config,
    RULE_NAMES,
)
from mott_track.model.physics import (
    energy_level,
    normalization_constant,
    envelope,
)
from mott_track.model.spherical_wave import (
    spherical_wave,
    spherical_wave_portion,
    spherical_wave_norm,
)
