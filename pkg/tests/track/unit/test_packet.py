import math

import numpy as np
import pandas as pd
import pytest


@pytest.fixture
def ground_packet(single_config):
    '''Return the elastic packet of the oscillator on the pole.'''
    from mott_track.packet import make_packet

    return make_packet(single_config, 1, (0, 0, 0))


@pytest.fixture
def tilted_packet(tilted_config):
    '''Return an excited packet along a tilted direction.'''
    from mott_track.packet import make_packet

    return make_packet(tilted_config, 1, (1, 0, 1))


def _gaussian_exponent(desc):
    '''Complex exponent a of the elastic profile C exp(-a |y|^2).'''
    decay = 0.5 * desc.width**2 + 0.25
    return decay / desc.tau**2 + 0.5j / desc.tau


@pytest.mark.parametrize('n', [(0, 0, 0), (1, 0, 0), (0, 2, 1)])
def test__make_packet__parameters(single_config, n) -> None:
    '''Test momentum, shift and amplitude modulus of a channel.'''
    from mott_track.model import normalization_constant
    from mott_track.packet import make_packet

    desc = make_packet(single_config, 1, n)
    degree = sum(n)
    eps = single_config.epsilon
    assert desc.momentum == pytest.approx(1.0 - eps * degree)
    assert desc.z_shift == pytest.approx(eps * degree * 2.0)
    assert abs(desc.amplitude) == pytest.approx(
        8.0 * math.pi**2.25 * normalization_constant(eps, 1.0) / 4.0
    )


def test__make_packet__elastic_momentum_exact(single_config) -> None:
    '''Test the n = 0 packet carries exactly v0.'''
    from mott_track.packet import make_packet

    desc = make_packet(single_config.with_epsilon(0.137), 1, (0, 0, 0))
    assert desc.momentum == single_config.v0
    assert desc.z_shift == 0.0


def test__make_packet__label_checked(single_config) -> None:
    '''Test an unknown oscillator label is refused.'''
    from mott_track.packet import make_packet

    with pytest.raises(IndexError):
        make_packet(single_config, 2, (0, 0, 0))


@pytest.mark.parametrize('n', [(0, 0, 1), (2, 1, 0)])
def test__energy_balance__remainder(single_config, n) -> None:
    '''Test the kinetic loss matches eps |n| up to eps^2 |n|^2 / 2.'''
    from mott_track.packet import energy_balance, make_packet

    desc = make_packet(single_config, 1, n)
    balance = energy_balance(desc)
    degree = sum(n)
    assert balance.oscillator_gain == pytest.approx(0.2 * degree)
    assert balance.remainder == pytest.approx(-0.5 * (0.2 * degree) ** 2)


def test__transverse_frame__orthonormal(tilted_packet) -> None:
    '''Test the transverse axes are orthonormal and orthogonal to a_hat.'''
    from mott_track.packet import transverse_frame

    axes = transverse_frame(tilted_packet)
    np.testing.assert_allclose(axes @ axes.T, np.eye(2), atol=1e-12)
    np.testing.assert_allclose(axes @ tilted_packet.a_hat, 0.0, atol=1e-12)


def test__transverse_profile__orthogonality(tilted_packet) -> None:
    '''Test arguments with a component along a_hat are refused.'''
    from mott_track.exceptions import OrthogonalityError
    from mott_track.packet import transverse_profile

    with pytest.raises(OrthogonalityError):
        transverse_profile(tilted_packet, 0.1 * tilted_packet.a_hat)
    y = 0.3 * tilted_packet.transverse_axes[0]
    assert np.isfinite(transverse_profile(tilted_packet, y))


def test__transverse_profile__elastic_gaussian(ground_packet) -> None:
    '''Test the elastic profile is a chirped Gaussian.'''
    from mott_track.kernels import coupling_g
    from mott_track.packet import transverse_profile

    y = np.array([0.7, -1.2, 0.0])
    a = _gaussian_exponent(ground_packet)
    expected = coupling_g((0, 0, 0), np.zeros(3), 1.0) * np.exp(
        -a * float(y @ y)
    )
    assert transverse_profile(ground_packet, y) == pytest.approx(expected)


def test__packet_eval__longitudinal_peak(single_config) -> None:
    '''Test |P| along a_hat peaks at the shift Z.'''
    from mott_track.packet import make_packet, packet_eval

    desc = make_packet(single_config, 1, (0, 0, 2))
    along = desc.z_shift + desc.eps * np.linspace(-2.0, 2.0, 41)
    values = np.abs(packet_eval(desc, along[:, None] * desc.a_hat))
    assert np.argmax(values) == 20
    assert values[0] == pytest.approx(values[-1])


def test__longitudinal_transform__numeric(tilted_packet) -> None:
    '''Test the longitudinal transform against quadrature.'''
    from mott_track.packet import longitudinal_factor, longitudinal_transform
    from mott_track.quadrature import gauss_legendre

    eps = tilted_packet.eps
    r, w = gauss_legendre(
        400, tilted_packet.z_shift - 12 * eps, tilted_packet.z_shift + 12 * eps
    )
    k = tilted_packet.momentum / eps**2 + 1.0
    numeric = np.sum(
        w * np.exp(-1j * k * r) * longitudinal_factor(tilted_packet, r)
    ) / math.sqrt(2.0 * math.pi)
    assert longitudinal_transform(tilted_packet, k) == pytest.approx(
        numeric, rel=1e-10
    )


def test__transverse_transform__elastic_closed_form(ground_packet) -> None:
    '''Test the 2D transform of the chirped Gaussian.'''
    from mott_track.kernels import coupling_g
    from mott_track.packet import transverse_transform

    k = np.array([[0.3, -0.2], [0.0, 0.0], [1.0, 0.5]])
    a = _gaussian_exponent(ground_packet)
    expected = (
        coupling_g((0, 0, 0), np.zeros(3), 1.0)
        / (2.0 * a)
        * np.exp(-np.sum(k * k, axis=-1) / (4.0 * a))
    )
    np.testing.assert_allclose(
        transverse_transform(ground_packet, k), expected, rtol=1e-8
    )


def test__packet_ft__peaks_at_carrier(ground_packet) -> None:
    '''Test |P^| along a_hat peaks at the carrier wave number V / eps^2.'''
    from mott_track.packet import packet_ft

    eps = ground_packet.eps
    carrier = ground_packet.momentum / eps**2
    k = carrier + np.linspace(-2.0, 2.0, 21) / eps
    values = np.abs(packet_ft(ground_packet, k[:, None] * ground_packet.a_hat))
    assert np.argmax(values) == 10
    assert values[0] == pytest.approx(values[-1])


def test__transverse_mass__numeric(tilted_packet) -> None:
    '''Test the transverse mass against a plain 2D quadrature.'''
    from mott_track.packet import chirped_profile, transverse_mass
    from mott_track.quadrature import gauss_legendre

    points, weights = gauss_legendre(120, -12.0, 12.0)
    axes = tilted_packet.transverse_axes
    y = points[:, None, None] * axes[0] + points[None, :, None] * axes[1]
    numeric = np.sum(
        np.outer(weights, weights)
        * np.abs(chirped_profile(tilted_packet, y)) ** 2
    )
    assert transverse_mass(tilted_packet) == pytest.approx(numeric, rel=1e-9)


@pytest.mark.parametrize('n', [(0, 0, 0), (0, 1, 1), (2, 0, 0)])
def test__packet_norm__epsilon_independent(single_config, n) -> None:
    '''Test ||P|| / N_eps does not depend on eps.'''
    from mott_track.model import normalization_constant
    from mott_track.packet import make_packet, packet_norm

    ratios = []
    for eps in (0.4, 0.2, 0.1):
        desc = make_packet(single_config.with_epsilon(eps), 1, n)
        ratios.append(packet_norm(desc) / normalization_constant(eps, 1.0))
    assert ratios[1] == pytest.approx(ratios[0], rel=1e-12)
    assert ratios[2] == pytest.approx(ratios[0], rel=1e-12)


def test__packet_norm__quadrature_error(tilted_packet, mocker) -> None:
    '''Test disagreeing transverse rules raise.'''
    from mott_track.exceptions import QuadratureError
    from mott_track.packet import packet_norm

    mocker.patch('mott_track.packet.norms._RULE_AGREEMENT', -1.0)
    with pytest.raises(QuadratureError) as error:
        packet_norm(tilted_packet)
    assert error.value.estimate is not None


def test__packet_moments__longitudinal(tilted_packet) -> None:
    '''Test longitudinal means and widths of the minimal packet.'''
    from mott_track.packet import packet_moments

    report = packet_moments(tilted_packet)
    eps = tilted_packet.eps
    assert report.mean_mom[2] == pytest.approx(
        tilted_packet.momentum, abs=1e-8
    )
    assert report.mean_pos[2] == pytest.approx(
        tilted_packet.z_shift, abs=1e-8
    )
    assert report.std_pos[2] == pytest.approx(eps / math.sqrt(2), abs=1e-8)
    assert report.std_mom[2] == pytest.approx(eps / math.sqrt(2), abs=1e-8)
    assert report.longitudinal_uncertainty == pytest.approx(0.5 * eps**2)


def test__packet_moments__measures_longitudinal_factor(
    tilted_packet, mocker
) -> None:
    '''Test the longitudinal position moments follow a displaced factor.'''
    from mott_track.packet import evaluate, packet_moments

    original = evaluate.longitudinal_factor
    shift = 0.3 * tilted_packet.eps
    mocker.patch.object(
        evaluate,
        'longitudinal_factor',
        lambda desc, r, t=0.0: original(desc, np.asarray(r) - shift, t),
    )
    report = packet_moments(tilted_packet)
    assert report.mean_pos[2] == pytest.approx(
        tilted_packet.z_shift + shift, abs=1e-8
    )
    assert report.std_pos[2] == pytest.approx(
        tilted_packet.eps / math.sqrt(2), abs=1e-8
    )


def test__packet_moments__measures_longitudinal_transform(
    tilted_packet, mocker
) -> None:
    '''Test the longitudinal momentum moments follow a displaced
    transform.'''
    from mott_track.packet import evaluate, packet_moments

    original = evaluate.longitudinal_transform
    eps = tilted_packet.eps
    offset = 0.3 / eps
    mocker.patch.object(
        evaluate,
        'longitudinal_transform',
        lambda desc, k: original(desc, np.asarray(k) - offset),
    )
    report = packet_moments(tilted_packet)
    assert report.mean_mom[2] == pytest.approx(
        tilted_packet.momentum + 0.3 * eps, abs=1e-8
    )
    assert report.std_mom[2] == pytest.approx(eps / math.sqrt(2), abs=1e-8)


def test__packet_moments__mean_momentum_follows_chirp(tilted_packet) -> None:
    '''Test the transverse mean momentum is -<y> / tau scaled.'''
    from mott_track.packet import packet_moments

    report = packet_moments(tilted_packet)
    np.testing.assert_allclose(
        report.mean_mom[:2],
        -report.mean_pos[:2] / tilted_packet.tau,
        atol=1e-14,
    )
    np.testing.assert_allclose(
        report.lab_mean_mom() @ tilted_packet.a_hat,
        tilted_packet.momentum,
        atol=1e-8,
    )


def test__packet_moments__linear_in_epsilon(tilted_config) -> None:
    '''Test all six standard deviations scale linearly in eps.'''
    from mott_track.harness import fit_slope
    from mott_track.packet import make_packet, packet_moments

    scales = (0.4, 0.2, 0.1)
    widths = []
    for eps in scales:
        desc = make_packet(tilted_config.with_epsilon(eps), 1, (1, 0, 1))
        report = packet_moments(desc)
        widths.append(np.concatenate([report.std_pos, report.std_mom]))
    for column in np.array(widths).T:
        fit = fit_slope(zip(scales, column))
        assert fit.slope == pytest.approx(1.0, abs=0.02)


def test__packet_evolve__time_zero(tilted_packet) -> None:
    '''Test evolution for no time returns the packet itself.'''
    from mott_track.packet import packet_eval, packet_evolve

    R = np.array([0.05, -0.02, 0.4])
    assert packet_evolve(tilted_packet, 0.0, R) == packet_eval(
        tilted_packet, R
    )
    with pytest.raises(ValueError):
        packet_evolve(tilted_packet, -1.0, R)


def test__evolve_transverse_grid__elastic_closed_form(ground_packet) -> None:
    '''Test the spectral evolution of the chirped Gaussian.'''
    from mott_track.kernels import coupling_g
    from mott_track.packet import evolve_transverse_grid

    t = 1.0
    grid = evolve_transverse_grid(ground_packet, t)
    a = _gaussian_exponent(ground_packet)
    spread = 1.0 + 2j * a * t
    q = np.array([[0.0, 0.0], [0.8, -0.3], [-1.5, 2.0]])
    expected = (
        coupling_g((0, 0, 0), np.zeros(3), 1.0)
        / spread
        * np.exp(-a * np.sum(q * q, axis=-1) / spread)
    )
    np.testing.assert_allclose(grid.interpolate(q), expected, rtol=1e-8)
    assert grid.escape_fraction < 1e-10


def test__evolve_transverse_grid__conserves_mass(tilted_packet) -> None:
    '''Test the evolved grid keeps the transverse mass and moves the mean
    with the mean momentum.'''
    from mott_track.packet import (
        evolve_transverse_grid,
        packet_moments,
        transverse_mass,
    )

    t = 1.5
    grid = evolve_transverse_grid(tilted_packet, t)
    assert grid.mass() == pytest.approx(
        transverse_mass(tilted_packet), rel=1e-8
    )
    report = packet_moments(tilted_packet)
    eps = tilted_packet.eps
    np.testing.assert_allclose(
        grid.mean(),
        (report.mean_pos[:2] + t * report.mean_mom[:2]) / eps,
        atol=1e-6,
    )


def test__evolve_transverse_grid__escape(tilted_packet, mocker) -> None:
    '''Test mass in the boundary ring raises.'''
    from mott_constants import numerics
    from mott_track.exceptions import GridEscapeError
    from mott_track.packet import evolve_transverse_grid

    mocker.patch.object(numerics, 'ESCAPE_TOLERANCE', -1.0)
    with pytest.raises(GridEscapeError):
        evolve_transverse_grid(tilted_packet, 0.5)


def test__evolved_center__moves_with_momentum(tilted_packet) -> None:
    '''Test the longitudinal centre moves at the packet momentum.'''
    from mott_track.packet import evolved_center

    t = 0.8
    center = evolved_center(tilted_packet, t)
    assert center @ tilted_packet.a_hat == pytest.approx(
        tilted_packet.z_shift + tilted_packet.momentum * t
    )


def test__evolved_center__measures_evolved_factor(
    tilted_packet, mocker
) -> None:
    '''Test the longitudinal centre is read off the evolved density.'''
    from mott_track.packet import evaluate, evolved_center

    original = evaluate.longitudinal_factor
    shift = 0.3 * tilted_packet.eps
    mocker.patch.object(
        evaluate,
        'longitudinal_factor',
        lambda desc, r, t=0.0: original(desc, np.asarray(r) - shift, t),
    )
    t = 0.8
    center = evolved_center(tilted_packet, t)
    assert center @ tilted_packet.a_hat == pytest.approx(
        tilted_packet.z_shift + tilted_packet.momentum * t + shift,
        abs=1e-6,
    )


def test__longitudinal_position_moments__spreading(tilted_packet) -> None:
    '''Test the longitudinal width grows as sqrt(1 + t^2).'''
    from mott_track.packet import longitudinal_position_moments

    t = 1.5
    mean, std = longitudinal_position_moments(tilted_packet, t)
    assert mean == pytest.approx(
        tilted_packet.z_shift + tilted_packet.momentum * t, abs=1e-8
    )
    assert std == pytest.approx(
        tilted_packet.eps * math.sqrt((1.0 + t * t) / 2.0), abs=1e-8
    )


def test__channel_weight__scaling(single_config) -> None:
    '''Test the weight is eps^4 ||P||^2.'''
    from mott_track.packet import channel_weight, make_packet, packet_norm

    desc = make_packet(single_config, 1, (0, 1, 0))
    assert channel_weight(desc) == pytest.approx(
        0.2**4 * packet_norm(desc) ** 2
    )


@pytest.fixture
def tracks(pair_config):
    '''Return the track table of the pair configuration.'''
    from mott_track.packet import track_report

    return track_report(pair_config)


def test__track_report__rows_and_order(pair_config, tracks) -> None:
    '''Test one row per channel, heaviest first.'''
    from mott_constants import cli

    assert len(tracks) == 2 * 10
    assert list(tracks.columns[: len(cli.TRACK_COLUMNS)]) == (
        cli.TRACK_COLUMNS
    )
    weights = tracks['weight'].to_numpy()
    assert np.all(weights[:-1] >= weights[1:])


def test__track_report__elastic_rows(tracks) -> None:
    '''Test the n = 0 rows carry v0 exactly and no shift.'''
    from mott_track.packet import ELASTIC_COLUMN, history_split

    elastic, inelastic = history_split(tracks)
    assert len(elastic) == 2
    assert (elastic['momentum'] == 1.0).all()
    assert (elastic['z_shift'] == 0.0).all()
    assert elastic[ELASTIC_COLUMN].all()
    assert (inelastic['abs_n'] > 0).all()


def test__track_report__thread_independent(pair_config, tracks) -> None:
    '''Test the table does not depend on the number of workers.'''
    from mott_utils.threading import OrderedPool
    from mott_track.packet import track_report

    threaded = track_report(pair_config, pool=OrderedPool(4))
    pd.testing.assert_frame_equal(threaded, tracks, check_exact=True)


def test__channel_weight__quartic_in_epsilon(single_config) -> None:
    '''Test the weight of a fixed channel scales as eps^4.'''
    from mott_track.harness import fit_slope
    from mott_track.packet import channel_weight, make_packet

    scales = (0.4, 0.2, 0.1)
    weights = [
        channel_weight(
            make_packet(single_config.with_epsilon(eps), 1, (0, 1, 1))
        )
        for eps in scales
    ]
    assert fit_slope(zip(scales, weights)).slope == pytest.approx(
        4.0, abs=0.05
    )
