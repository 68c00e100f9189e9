import math

import numpy as np
import pytest


@pytest.fixture
def small_quad():
    '''Return a coarse quadrature spec that keeps oracle calls fast.'''
    from mott_track.quadrature import QuadSpec

    return QuadSpec(s_nodes=8, munu_nodes=6)


@pytest.mark.parametrize(
    'alpha, beta',
    [
        (1.0, 0.0),
        (0.75 + 0.72 - 0.6j, -0.36 + 2.0j),
        (2.0 - 0.5j, 0.3 - 1.5j),
    ],
    ids=['real', 'oscillating', 'tilted'],
)
def test__axis_integrals__quadrature(alpha, beta) -> None:
    '''Test the recurrence against Gauss-Legendre quadrature.'''
    from mott_track.oracle import axis_integrals, axis_integrals_quadrature

    closed = axis_integrals(6, alpha, beta)
    numeric = axis_integrals_quadrature(6, alpha, beta, 240, 14.0)
    np.testing.assert_allclose(closed, numeric, rtol=1e-10, atol=1e-14)


def test__axis_integral__closed_forms() -> None:
    '''Test the zeroth and second moments at zero beta.'''
    from mott_track.oracle import axis_integral

    alpha = 0.8 - 0.3j
    assert axis_integral(0, alpha, 0.0) == pytest.approx(
        np.sqrt(np.pi / alpha)
    )
    assert axis_integral(1, alpha, 0.0) == 0
    assert axis_integral(2, alpha, 0.0) == pytest.approx(
        np.sqrt(np.pi) / (2.0 * alpha**1.5)
    )


def test__axis_integral__negative_order() -> None:
    '''Test a negative moment order is refused.'''
    from mott_track.oracle import axis_integral

    with pytest.raises(ValueError):
        axis_integral(-1, 1.0, 0.0)


def test__axis_integrals__oscillatory_dominance() -> None:
    '''Test weak damping raises.'''
    from mott_track.exceptions import OscillatoryDominanceError
    from mott_track.oracle import axis_integrals

    with pytest.raises(OscillatoryDominanceError):
        axis_integrals(2, np.array([1.0, 0.01 + 1.0j]), 0.0)


def test__critical_gradient_norm__vanishes(pair_config) -> None:
    '''Test the reduced phase is stationary at the critical point.'''
    from mott_track.model import derive_geometry
    from mott_track.oracle import critical_gradient_norm

    geom = derive_geometry(pair_config)
    rng = np.random.default_rng(3)
    for index, x in enumerate(rng.uniform(-3.0, 3.0, size=(8, 3))):
        j = 1 + index % 2
        n = [(0, 0, 0), (1, 0, 1), (0, 2, 0)][index % 3]
        assert critical_gradient_norm(geom, j, n, x) < 1e-8


@pytest.mark.parametrize('n', [(0, 0, 0), (1, 0, 0), (0, 1, 1)])
def test__leading_consistency__packet(tilted_config, n) -> None:
    '''Test the stationary phase value equals eps^2 P(eps x).'''
    from mott_track.model import derive_geometry
    from mott_track.oracle import leading_consistency

    geom = derive_geometry(tilted_config)
    axes = geom.rotation_of(1)
    for x in (
        np.zeros(3),
        0.8 * axes[0] - 0.4 * axes[1] + 2.0 * geom.a_hat_of(1),
        -1.5 * axes[1] + 4.0 * geom.a_hat_of(1),
    ):
        assert leading_consistency(tilted_config, 1, n, x, geom) < 1e-10


def test__first_order_coeff__before_start(pair_config, small_quad) -> None:
    '''Test the coefficient vanishes at time zero.'''
    from mott_track.oracle import first_order_coeff

    result = first_order_coeff(
        pair_config,
        1,
        (0, 0, 1),
        0.0,
        np.array([0.1, 0.0, 0.5]),
        quad=small_quad,
    )
    assert result.value == 0
    assert result.est_error == 0
    assert not result.flagged


def test__first_order_coeff__conjugate(pair_config, small_quad) -> None:
    '''Test conjugating every phase gives the conjugate coefficient.'''
    from mott_track.oracle import first_order_coeff

    x = np.array([0.2, -0.1, 0.6])
    plain = first_order_coeff(
        pair_config, 1, (1, 0, 0), 3.0, x, quad=small_quad
    )
    conjugated = first_order_coeff(
        pair_config, 1, (1, 0, 0), 3.0, x, quad=small_quad, conjugate=True
    )
    assert conjugated.value == pytest.approx(
        np.conj(plain.value), rel=1e-12
    )


def test__first_order_coeff__xi_quadrature(pair_config, small_quad) -> None:
    '''Test the per axis quadrature agrees with the closed form.'''
    import dataclasses

    from mott_constants import numerics
    from mott_track.oracle import first_order_coefficients

    x = np.array([0.0, 0.0, 0.5])
    channels = [(0, 0, 0), (0, 0, 1)]
    closed = first_order_coefficients(
        pair_config, 1, channels, 3.0, x, quad=small_quad
    )
    numeric = first_order_coefficients(
        pair_config,
        1,
        channels,
        3.0,
        x,
        quad=dataclasses.replace(
            small_quad, xi_mode=numerics.XI_QUADRATURE, xi_nodes=200
        ),
    )
    np.testing.assert_allclose(
        [result.value for result in numeric],
        [result.value for result in closed],
        rtol=1e-8,
    )


def test__first_order_coefficients__per_channel(
    pair_config, small_quad
) -> None:
    '''Test the shared grid gives the single channel values.'''
    from mott_track.model import MultiIndex
    from mott_track.oracle import first_order_coeff, first_order_coefficients

    x = np.array([0.3, 0.3, 0.4])
    channels = [(0, 0, 0), (0, 1, 0), (2, 0, 0)]
    results = first_order_coefficients(
        pair_config, 2, channels, 3.0, x, quad=small_quad
    )
    assert [result.n for result in results] == [
        MultiIndex.parse(n) for n in channels
    ]
    for n, result in zip(channels, results):
        single = first_order_coeff(pair_config, 2, n, 3.0, x, quad=small_quad)
        assert single.value == pytest.approx(result.value, rel=1e-12)


def test__first_order_coeff__flags_unconverged(
    pair_config, small_quad, caplog
) -> None:
    '''Test a coarse grid against a tiny target is flagged and logged.'''
    import dataclasses

    from mott_track.oracle import first_order_coeff

    quad = dataclasses.replace(small_quad, target_tol=1e-300)
    result = first_order_coeff(
        pair_config, 1, (0, 0, 0), 3.0, np.array([0.0, 0.0, 0.5]), quad=quad
    )
    assert result.flagged
    assert result.est_error > 0
    assert 'not converged' in caplog.text


def test__first_order_coeff__unknown_region(pair_config) -> None:
    '''Test an unknown region name is refused.'''
    from mott_track.oracle import first_order_coeff

    with pytest.raises(ValueError):
        first_order_coeff(
            pair_config, 1, (0, 0, 0), 3.0, np.zeros(3), region='torus'
        )


def test__delta_bound__pair(pair_config) -> None:
    '''Test Delta^2 uses the shortest flight time.'''
    from mott_track.oracle import delta_bound

    assert delta_bound(pair_config) == pytest.approx(2.0)


def test__second_order_phase_bound__pair(pair_config) -> None:
    '''Test the time ordered minimum stays above Delta^2.'''
    from mott_track.oracle import second_order_phase_bound

    result = second_order_phase_bound(pair_config, 3.0)
    assert result.passed
    assert set(result.minima) == {(1, 1), (1, 2), (2, 1), (2, 2)}
    assert result.minimum == min(result.minima.values())


def test__second_order_phase_bound__single(single_config) -> None:
    '''Test a single oscillator only has its diagonal pair.'''
    from mott_track.oracle import second_order_phase_bound

    result = second_order_phase_bound(single_config, 3.0, resolution=16)
    assert list(result.minima) == [(1, 1)]


def test__complement_gradient_bound__pair(pair_config) -> None:
    '''Test the complement gradient stays above Delta^2.'''
    from mott_track.oracle import complement_gradient_bound, delta_bound

    for j in (1, 2):
        assert complement_gradient_bound(pair_config, j, 3.0) >= (
            delta_bound(pair_config)
        )


def test__tube_grid__volume(pair_config) -> None:
    '''Test the weights integrate the cylinder volume.'''
    from mott_track.model import derive_geometry
    from mott_track.oracle import tube_grid

    geom = derive_geometry(pair_config)
    grid = tube_grid(
        geom,
        1,
        [(0, 0, 0), (0, 1, 1)],
        radius=3.0,
        counts=(3, 5, 4),
        margin=2.0,
    )
    assert len(grid) == 3 * 5 * 4
    assert grid.window == pytest.approx((-2.0, 2.0 * 2.0 + 2.0))
    length = grid.window[1] - grid.window[0]
    assert np.sum(grid.weights) == pytest.approx(math.pi * 9.0 * length)
    radial = grid.points - np.outer(
        grid.points @ geom.a_hat_of(1), geom.a_hat_of(1)
    )
    assert np.all(np.linalg.norm(radial, axis=1) < 3.0)


def test__stretched_coordinates__inverse(pair_config) -> None:
    '''Test the stretch and its inverse, Jacobian and domain.'''
    from mott_track.model import derive_geometry
    from mott_track.oracle import stretch_coordinates

    geom = derive_geometry(pair_config)
    coordinates = stretch_coordinates(geom, 1, 0.2, 3.0)
    z = np.array([[0.5, -1.0, 2.0], [3.0, 0.0, -4.0]])
    np.testing.assert_allclose(
        coordinates.inverse(coordinates.forward(z)), z, atol=1e-12
    )
    assert coordinates.forward(np.zeros(3))[2] == pytest.approx(2.0)
    assert coordinates.jacobian == pytest.approx(0.2**3 / 4.0)
    assert coordinates.contains(np.zeros(3))
    assert not coordinates.contains(np.array([0.0, 0.0, -11.0]))


def test__residual_norm__early_time(pair_config) -> None:
    '''Test times inside the flight time are refused.'''
    from mott_track.oracle import residual_norm

    with pytest.raises(ValueError):
        residual_norm(pair_config, 1, 1.5, 0.2)


@pytest.fixture
def small_grid(pair_config):
    '''Return a tube grid of a handful of points.'''
    from mott_track.model import derive_geometry
    from mott_track.oracle import tube_grid

    return tube_grid(
        derive_geometry(pair_config),
        1,
        [(0, 0, 0)],
        radius=1.0,
        counts=(1, 2, 2),
        margin=1.0,
    )


def test__residual_norm__fields(pair_config, small_grid, small_quad) -> None:
    '''Test the residual proxy and its reference are filled in and do not
    depend on the worker count.'''
    from mott_utils.threading import OrderedPool
    from mott_track.oracle import residual_norm

    options = dict(x_grid=small_grid, n_set=[(0, 0, 0)], quad=small_quad)
    single = residual_norm(pair_config, 1, 3.0, 0.2, **options)
    threaded = residual_norm(
        pair_config, 1, 3.0, 0.2, pool=OrderedPool(2), **options
    )
    assert single == threaded
    assert single.eps == 0.2
    assert single.rho >= 0
    assert single.reference > 0
    assert 0 < single.coverage < 1
    assert single.relative == pytest.approx(single.rho / single.reference)


def test__nonstationary_ratio__fields(
    pair_config, small_grid, small_quad
) -> None:
    '''Test the ratio is the quotient of its two norms.'''
    from mott_track.oracle import nonstationary_ratio

    result = nonstationary_ratio(
        pair_config,
        1,
        3.0,
        0.2,
        x_grid=small_grid,
        n_set=[(0, 0, 0)],
        quad=small_quad,
    )
    assert result.cone_norm > 0
    assert result.ratio == pytest.approx(
        result.complement_norm / result.cone_norm
    )
