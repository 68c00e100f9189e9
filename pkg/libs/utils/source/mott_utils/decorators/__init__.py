# :coding: utf-8
# :copyright: Copyright (c) 2024 ftrack

from mott_utils.decorators.timing import log_duration
