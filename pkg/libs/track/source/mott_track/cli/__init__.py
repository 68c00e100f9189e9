# :coding: utf-8
# :copyright: Copyright (c) 2024 ftrack

from mott_track.cli.parser import build_parser
from mott_track.cli.output import (
    format_value,
    split_complex,
    write_table,
    write_summary,
)
from mott_track.cli.commands import (
    COMMANDS,
    load_context,
    cmd_validate,
    cmd_tracks,
    cmd_packet,
    cmd_oracle,
    cmd_identities,
    cmd_scaling,
    cmd_nonstat,
)
