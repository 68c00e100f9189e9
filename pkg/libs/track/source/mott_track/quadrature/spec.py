# :coding: utf-8
# :copyright: Copyright (c) 2024 ftrack
import math
import dataclasses

from mott_constants import numerics as constants


@dataclasses.dataclass(frozen=True)
class QuadSpec(object):
    '''Node counts and tolerance of the first order coefficient quadrature.

    *s_nodes* Gauss-Legendre nodes on [0, t], *munu_nodes* nodes per
    angular dimension, *xi_mode* closed form or per axis quadrature of the
    inner xi integral with *xi_nodes* nodes on [-xi_cutoff, xi_cutoff].
    '''

    s_nodes: int = constants.DEFAULT_S_NODES
    munu_nodes: int = constants.DEFAULT_MUNU_NODES
    xi_mode: str = constants.XI_CLOSED_FORM
    xi_nodes: int = constants.DEFAULT_XI_NODES
    xi_cutoff: float = 10.0
    target_tol: float = constants.DEFAULT_TARGET_TOL

    def __post_init__(self):
        for name in ('s_nodes', 'munu_nodes', 'xi_nodes'):
            if getattr(self, name) < constants.MIN_NODES:
                raise ValueError(
                    '{} must be at least {}, got {}'.format(
                        name, constants.MIN_NODES, getattr(self, name)
                    )
                )
        if self.xi_mode not in constants.XI_MODES:
            raise ValueError(
                'xi_mode must be one of {}, got {!r}'.format(
                    constants.XI_MODES, self.xi_mode
                )
            )
        if not self.target_tol > 0:
            raise ValueError('target_tol must be positive')

    def minimum_cutoff(self, n_max):
        '''Return the Gaussian tail cutoff for degree *n_max*.'''
        return math.sqrt(4.0 * (n_max + math.log(1.0 / self.target_tol)))

    def check(self, n_max):
        '''Return the list of invariant violations for degree *n_max*.'''
        problems = []
        if (
            self.xi_mode == constants.XI_QUADRATURE
            and self.xi_cutoff < self.minimum_cutoff(n_max)
        ):
            problems.append(
                'xi_cutoff {} below {:.3f}'.format(
                    self.xi_cutoff, self.minimum_cutoff(n_max)
                )
            )
        return problems

    def doubled(self):
        '''Return the spec with every node count doubled.'''
        return dataclasses.replace(
            self,
            s_nodes=2 * self.s_nodes,
            munu_nodes=2 * self.munu_nodes,
            xi_nodes=2 * self.xi_nodes,
        )

    def with_tolerance(self, target_tol):
        return dataclasses.replace(self, target_tol=target_tol)
