# :coding: utf-8
# :copyright: Copyright (c) 2024 ftrack

#: Check measured inside its tolerance.
PASS_STATUS = 'PASS'
#: Check measured inside its tolerance but the quadrature flagged an
#: error estimate above the target tolerance.
WARN_STATUS = 'WARN'
#: Check outside its tolerance.
FAIL_STATUS = 'FAIL'

#: Mapping of the check status. Counts as passed or not.
status_bool_mapping = {
    PASS_STATUS: True,
    WARN_STATUS: True,
    FAIL_STATUS: False,
}
