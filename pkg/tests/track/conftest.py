import json

import pytest


@pytest.fixture
def single_config():
    '''Return one oscillator on the pole, the main scaling setup.'''
    from mott_track.model import ModelConfig

    return ModelConfig(
        epsilon=0.2,
        v0=1.0,
        oscillators=((0.0, 0.0, 2.0),),
        potential_width=1.0,
        t_final=3.0,
        n_max=2,
    )


@pytest.fixture
def pair_config():
    '''Return two oscillators at right angles, cone half angle pi / 4.'''
    from mott_track.model import ModelConfig

    return ModelConfig(
        epsilon=0.2,
        v0=1.0,
        oscillators=((0.0, 0.0, 2.0), (2.5, 0.0, 0.0)),
        potential_width=1.0,
        t_final=3.0,
        n_max=2,
    )


@pytest.fixture
def tilted_config():
    '''Return one oscillator off every axis, so frames are not trivial.'''
    from mott_track.model import ModelConfig

    return ModelConfig(
        epsilon=0.25,
        v0=1.3,
        oscillators=((1.0, -0.5, 1.5),),
        potential_width=0.8,
        t_final=3.0,
        n_max=2,
    )


@pytest.fixture
def run_config_content():
    '''Return the JSON content of a small valid run configuration.'''
    return {
        'model': {
            'epsilon': 0.2,
            'v0': 1.0,
            'oscillators': [[0.0, 0.0, 2.0], [2.5, 0.0, 0.0]],
            'potential_width': 1.0,
            't_final': 3.0,
            'n_max': 1,
        },
        'quadrature': {'s_nodes': 16, 'munu_nodes': 8},
    }


@pytest.fixture
def run_config_path(tmp_path, run_config_content):
    '''Write :func:`run_config_content` and return its path.'''
    path = tmp_path / 'run.json'
    path.write_text(json.dumps(run_config_content, indent=4))
    return str(path)
