# :coding: utf-8
# :copyright: Copyright (c) 2024 ftrack
import math
import cmath
import dataclasses

import numpy as np

from mott_track.model import (
    MultiIndex,
    derive_geometry,
    normalization_constant,
)


@dataclasses.dataclass(frozen=True)
class PacketDescriptor(object):
    '''Parameters of the emergent wave packet of channel (*j*, *n*).

    *amplitude* is C, *z_shift* the longitudinal offset Z, *momentum* the
    carrier momentum V along *a_hat*; *rotation* is the pole rotation of
    oscillator *j*, whose first two rows span the transverse plane.
    '''

    j: int
    n: MultiIndex
    eps: float
    v0: float
    tau: float
    a_hat: np.ndarray
    amplitude: complex
    z_shift: float
    momentum: float
    width: float
    rotation: np.ndarray

    @property
    def degree(self):
        return self.n.degree

    @property
    def transverse_axes(self):
        '''The two transverse unit vectors, as rows.'''
        return self.rotation[:2]

    @property
    def frame(self):
        '''Rows: first transverse axis, second transverse axis, a_hat.'''
        return np.vstack([self.rotation[:2], self.a_hat])


@dataclasses.dataclass(frozen=True)
class EnergyBalance(object):
    '''Kinetic energy lost by the particle against the energy gained by
    the oscillator in one channel.'''

    kinetic_loss: float
    oscillator_gain: float

    @property
    def remainder(self):
        '''Second order mismatch, -eps^2 |n|^2 / (2 v0^2).'''
        return self.kinetic_loss - self.oscillator_gain


def make_packet(cfg, j, n, geom=None):
    '''Return the :class:`PacketDescriptor` of oscillator *j* (1 based) and
    excitation *n* for *cfg*.'''
    n = MultiIndex.parse(n)
    geom = geom or derive_geometry(cfg)
    cfg.index(j)
    eps, v0 = cfg.epsilon, cfg.v0
    tau = geom.tau_of(j)
    degree = n.degree
    modulus = (
        8.0
        * math.pi**2.25
        * normalization_constant(eps, v0)
        / (v0**3 * tau * tau)
    )
    phase = degree * tau / eps + degree * degree * tau / (2.0 * v0 * v0)
    return PacketDescriptor(
        j=j,
        n=n,
        eps=eps,
        v0=v0,
        tau=tau,
        a_hat=np.asarray(geom.a_hat_of(j), dtype=float),
        amplitude=-1j * modulus * cmath.exp(1j * phase),
        z_shift=eps * degree * tau / v0,
        momentum=v0 - eps * degree / v0 if degree else v0,
        width=cfg.potential_width,
        rotation=np.asarray(geom.rotation_of(j), dtype=float),
    )


def energy_balance(desc):
    '''Return the :class:`EnergyBalance` of *desc*.'''
    return EnergyBalance(
        kinetic_loss=0.5 * desc.v0**2 - 0.5 * desc.momentum**2,
        oscillator_gain=desc.eps * desc.degree,
    )


def transverse_frame(desc):
    '''The two transverse unit vectors of *desc* as rows.'''
    return desc.transverse_axes
