# :coding: utf-8
# :copyright: Copyright (c) 2024 ftrack

from mott_track.exceptions import config
from mott_track.exceptions import numerics

from mott_track.exceptions.config import (
    ConfigError,
    ConfigParseError,
    UnknownKeyError,
    ValidationError,
    GeometryError,
    RotationError,
    OrthogonalityError,
)
from mott_track.exceptions.numerics import (
    NumericalError,
    CausticTimeError,
    OscillatoryDominanceError,
    SupportEscapeError,
    GridEscapeError,
    QuadratureError,
    SlopeFitError,
)
