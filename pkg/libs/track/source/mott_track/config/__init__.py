# :coding: utf-8
# :copyright: Copyright (c) 2024 ftrack

from mott_track.config.run_config import (
    SCHEMA,
    GridOptions,
    StudyOptions,
    OutputOptions,
    RunConfig,
    parse_run_config,
    load_run_config,
    run_config_channels,
)
