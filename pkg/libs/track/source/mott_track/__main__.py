# :coding: utf-8
# :copyright: Copyright (c) 2024 ftrack

import sys
import logging

from mott_constants import cli as constants

from mott_track.configure_logging import configure_logging
from mott_track.exceptions import ConfigError, NumericalError
from mott_track.cli import COMMANDS, build_parser

logger = logging.getLogger('mott_track')


def run(arguments=None, stream=None):
    '''Run the sub command of *arguments* and return its exit code.

    Configuration errors map to 2, numerical failures to 1 and IO errors
    to 3; each is logged on standard error.
    '''
    namespace = build_parser().parse_args(arguments)
    try:
        return COMMANDS[namespace.command](namespace, stream)
    except ConfigError as error:
        logger.error('Configuration error: {}'.format(error))
        return constants.CONFIG_ERROR_EXIT_CODE
    except NumericalError as error:
        logger.error('Numerical failure: {}'.format(error))
        return constants.NUMERICAL_FAILURE_EXIT_CODE
    except ValueError as error:
        # Arguments outside the domain of an operation.
        logger.error('Invalid input: {}'.format(error))
        return constants.CONFIG_ERROR_EXIT_CODE
    except OSError as error:
        logger.error('IO error: {}'.format(error))
        return constants.IO_ERROR_EXIT_CODE


def main(arguments=None):
    '''Main entry point.'''
    configure_logging('mott_track')
    sys.exit(run(arguments))


if __name__ == '__main__':
    main()
