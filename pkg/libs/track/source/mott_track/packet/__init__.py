# :coding: utf-8
# :copyright: Copyright (c) 2024 ftrack

from mott_track.packet.descriptor import (
    PacketDescriptor,
    EnergyBalance,
    make_packet,
    energy_balance,
    transverse_frame,
)
from mott_track.packet.evaluate import (
    profile_argument,
    transverse_profile,
    transverse_transform,
    longitudinal_factor,
    longitudinal_transform,
    chirped_profile,
    packet_eval,
    packet_ft,
)
from mott_track.packet.norms import (
    MomentReport,
    transverse_mass,
    packet_norm,
    packet_moments,
    longitudinal_position_moments,
    longitudinal_momentum_moments,
)
from mott_track.packet.evolve import (
    TransverseGrid,
    evolve_transverse_grid,
    packet_evolve,
    evolved_center,
)
from mott_track.packet.tracks import (
    ELASTIC_COLUMN,
    channel_weight,
    track_report,
    history_split,
)
