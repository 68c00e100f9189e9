# :coding: utf-8
# :copyright: Copyright (c) 2024 ftrack
import argparse

from mott_constants import cli as cli_constants
from mott_constants import numerics as numerics_constants


def _common(parser):
    parser.add_argument(
        '--config',
        required=True,
        help='JSON run configuration.',
    )
    parser.add_argument(
        '--out',
        default=None,
        help='CSV destination, standard output when omitted.',
    )
    parser.add_argument(
        '--threads',
        type=int,
        default=None,
        help='Worker threads, default the hardware parallelism. Changes '
        'wall time only.',
    )
    parser.add_argument(
        '--tol',
        type=float,
        default=None,
        help='Override the quadrature target tolerance.',
    )


def _channel(parser):
    parser.add_argument('--j', type=int, default=1, help='Oscillator label.')
    parser.add_argument(
        '--n',
        type=int,
        nargs=3,
        default=[0, 0, 0],
        metavar=('N1', 'N2', 'N3'),
        help='Excitation multi index.',
    )


def build_parser():
    '''Return the argument parser of the ``mott-track`` command.'''
    parser = argparse.ArgumentParser(
        prog='mott-track',
        description='Semiclassical tracks of a spherical wave among '
        'harmonic oscillators.',
    )
    subparsers = parser.add_subparsers(dest='command', required=True)

    helps = {
        'validate': 'Check a configuration and print its time scales.',
        'tracks': 'Channel weights, directions and momenta.',
        'packet': 'Value of one emergent wave packet.',
        'oracle': 'First order coefficient by quadrature.',
        'identities': 'Run the identity suite.',
        'scaling': 'Residual against epsilon with its log-log slope.',
        'nonstat': 'Non stationary suppression against epsilon.',
    }
    subcommands = {}
    for name in cli_constants.SUBCOMMANDS:
        subcommands[name] = subparsers.add_parser(name, help=helps[name])
        _common(subcommands[name])

    _channel(subcommands['packet'])
    subcommands['packet'].add_argument(
        '--R',
        type=float,
        nargs=3,
        required=True,
        metavar=('X', 'Y', 'Z'),
        help='Lab point.',
    )
    subcommands['packet'].add_argument(
        '--time',
        type=float,
        default=0.0,
        help='Free evolution time.',
    )

    _channel(subcommands['oracle'])
    subcommands['oracle'].add_argument(
        '--x',
        type=float,
        nargs=3,
        required=True,
        metavar=('X', 'Y', 'Z'),
        help='Rescaled point.',
    )
    subcommands['oracle'].add_argument(
        '--t',
        type=float,
        default=None,
        help='Time, default the configured t_final.',
    )
    subcommands['oracle'].add_argument(
        '--region',
        choices=numerics_constants.REGIONS,
        default=numerics_constants.REGION_CONE,
    )
    return parser
