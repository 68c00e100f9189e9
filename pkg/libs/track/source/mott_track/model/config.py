# :coding: utf-8
# :copyright: Copyright (c) 2024 ftrack
import dataclasses
import itertools
from typing import Tuple

import numpy as np

from mott_track.quadrature.spec import QuadSpec


@dataclasses.dataclass(frozen=True, order=True)
class MultiIndex(object):
    '''Excitation label (n1, n2, n3) of one three dimensional oscillator.'''

    n1: int
    n2: int
    n3: int

    def __post_init__(self):
        for value in self:
            if int(value) != value or value < 0:
                raise ValueError(
                    'Multi index entries must be non negative integers, '
                    'got {}'.format(tuple(self))
                )

    def __iter__(self):
        return iter((self.n1, self.n2, self.n3))

    @property
    def degree(self):
        '''|n| = n1 + n2 + n3.'''
        return self.n1 + self.n2 + self.n3

    @property
    def is_ground(self):
        return self.degree == 0

    @classmethod
    def parse(cls, value):
        '''Return a multi index from a MultiIndex or a triple.'''
        if isinstance(value, cls):
            return value
        n1, n2, n3 = value
        return cls(int(n1), int(n2), int(n3))

    def as_array(self):
        return np.array(tuple(self), dtype=int)

    def __str__(self):
        return '({},{},{})'.format(*self)


def multi_indices(n_max):
    '''Yield every multi index with |n| <= *n_max* once, by degree and
    then with n1 decreasing, n2 decreasing.'''
    if n_max < 0:
        raise ValueError('n_max must be non negative, got {}'.format(n_max))
    for degree in range(n_max + 1):
        for n1 in range(degree, -1, -1):
            for n2 in range(degree - n1, -1, -1):
                yield MultiIndex(n1, n2, degree - n1 - n2)


@dataclasses.dataclass(frozen=True)
class ModelConfig(object):
    '''Physical and numerical parameters of one experiment, rescaled
    units. *oscillators* holds the positions a_j ordered by distance.'''

    epsilon: float
    v0: float
    oscillators: Tuple[Tuple[float, float, float], ...]
    potential_width: float = 1.0
    t_final: float = 1.0
    n_max: int = 2
    quad: QuadSpec = dataclasses.field(default_factory=QuadSpec)

    def __post_init__(self):
        # Freeze the positions so the config stays hashable.
        object.__setattr__(
            self,
            'oscillators',
            tuple(
                tuple(float(c) for c in position)
                for position in self.oscillators
            ),
        )

    @property
    def count(self):
        '''Number N of oscillators.'''
        return len(self.oscillators)

    @property
    def positions(self):
        '''Oscillator positions as an (N, 3) array.'''
        return np.array(self.oscillators, dtype=float).reshape(-1, 3)

    def position(self, j):
        '''Position a_j of oscillator *j* (1 based).'''
        return self.positions[self.index(j)]

    def index(self, j):
        '''Return the 0 based row of oscillator label *j*.'''
        if not 1 <= j <= self.count:
            raise IndexError(
                'Oscillator label {} outside 1..{}'.format(j, self.count)
            )
        return j - 1

    def labels(self):
        return list(range(1, self.count + 1))

    def with_epsilon(self, epsilon):
        return dataclasses.replace(self, epsilon=epsilon)

    def with_quad(self, quad):
        return dataclasses.replace(self, quad=quad)

    def channels(self, n_max=None):
        '''Return all multi indices with |n| <= *n_max* (default the
        configured truncation).'''
        return list(
            multi_indices(self.n_max if n_max is None else n_max)
        )


def all_pairs(count):
    '''Return the index pairs (i, k), i < k, of *count* items.'''
    return list(itertools.combinations(range(count), 2))
