# :coding: utf-8
# :copyright: Copyright (c) 2024 ftrack

#: Command finished.
SUCCESS_EXIT_CODE = 0
#: Internal numerical failure (caustic time, grid escape, ...).
NUMERICAL_FAILURE_EXIT_CODE = 1
#: Configuration could not be parsed or violates a model rule.
CONFIG_ERROR_EXIT_CODE = 2
#: Input or output file could not be read or written.
IO_ERROR_EXIT_CODE = 3

#: Sub commands in the order they are listed by --help.
SUBCOMMANDS = [
    'validate',
    'tracks',
    'packet',
    'oracle',
    'identities',
    'scaling',
    'nonstat',
]

#: Environment variable holding the diagnostic verbosity.
LOG_ENVIRONMENT_VARIABLE = 'MOTT_LOG'

#: Mapping of MOTT_LOG values to logging level names.
LOG_LEVEL_MAPPING = {
    'error': 'ERROR',
    'warn': 'WARNING',
    'info': 'INFO',
    'debug': 'DEBUG',
}

#: Default diagnostic verbosity.
DEFAULT_LOG_LEVEL = 'warn'

#: Significant digits of floats written to files.
FILE_DIGITS = 17
#: Significant digits of floats printed on the console.
CONSOLE_DIGITS = 15

#: Column set of the track report.
TRACK_COLUMNS = [
    'j',
    'n1',
    'n2',
    'n3',
    'abs_n',
    'dir_x',
    'dir_y',
    'dir_z',
    'momentum',
    'z_shift',
    'weight',
]

#: Column set of the scaling study table.
SCALING_COLUMNS = ['epsilon', 'rho', 'reference', 'coverage', 'flagged']

#: Column set of the non stationary study table.
NONSTAT_COLUMNS = ['epsilon', 'ratio', 'flagged']

#: Column set of the identity suite table.
SUITE_COLUMNS = ['name', 'measured', 'expected', 'tolerance', 'status']
