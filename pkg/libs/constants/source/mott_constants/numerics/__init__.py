# :coding: utf-8
# :copyright: Copyright (c) 2024 ftrack

#: Relative margin of the assumption (B) checks.
ASSUMPTION_MARGIN = 1e-9
#: Tolerance on unit vectors handed to the rotation and cone helpers.
UNIT_TOLERANCE = 1e-12
#: Distance to -e3 under which the pole rotation switches to a pi turn.
ANTIPODE_TOLERANCE = 1e-9
#: Tolerance on y . a_hat for transverse arguments.
ORTHOGONALITY_TOLERANCE = 1e-10
#: Smallest |sin t| accepted by the Mehler kernel.
CAUSTIC_TOLERANCE = 1e-6
#: Floor on Re(alpha) in the Gaussian moment recurrence.
ALPHA_FLOOR = 0.05
#: Relative magnitude below which a profile counts as vanished.
SUPPORT_TOLERANCE = 1e-12
#: Share of the mass tolerated in the boundary ring of a spectral grid.
ESCAPE_TOLERANCE = 1e-10

#: Default node counts of the first order quadrature.
DEFAULT_S_NODES = 64
DEFAULT_MUNU_NODES = 32
DEFAULT_XI_NODES = 96
DEFAULT_TARGET_TOL = 1e-6
#: Smallest node count accepted by a quadrature spec.
MIN_NODES = 4

#: Angular quadrature modes of the inner xi integral.
XI_CLOSED_FORM = 'closed-form'
XI_QUADRATURE = 'quadrature'
XI_MODES = [XI_CLOSED_FORM, XI_QUADRATURE]

#: Integration regions of the first order coefficient.
REGION_CONE = 'cone'
REGION_SPHERE = 'sphere'
REGION_COMPLEMENT = 'complement'
REGIONS = [REGION_CONE, REGION_SPHERE, REGION_COMPLEMENT]

#: Residual tube defaults, rescaled coordinates.
TUBE_RADIUS = 6.0
TUBE_MARGIN = 5.0
TUBE_RADIAL_NODES = 4
TUBE_ANGULAR_NODES = 6
TUBE_AXIAL_NODES = 8

#: Default excitation degree of the residual channel set.
DEFAULT_CHANNEL_DEGREE = 2

#: Default scale list of the scaling studies.
DEFAULT_EPS_LIST = [0.4, 0.3, 0.2, 0.15, 0.1]
#: Smallest scale accepted by the studies.
MIN_STUDY_EPSILON = 0.1
