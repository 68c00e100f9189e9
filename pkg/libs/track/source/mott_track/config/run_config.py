# :coding: utf-8
# :copyright: Copyright (c) 2024 ftrack
import re
import json
import logging
import dataclasses
from typing import Any, Dict, List, Optional, Tuple

from mott_constants import numerics as constants
from mott_utils.json import read_json_file

from mott_track.exceptions import (
    ConfigError,
    ConfigParseError,
    UnknownKeyError,
)
from mott_track.model import ModelConfig, MultiIndex
from mott_track.quadrature import QuadSpec

logger = logging.getLogger(__name__)

#: Accepted keys per section, a nested dict marks a sub section.
SCHEMA = {
    'model': {
        'epsilon': None,
        'eps_list': None,
        'v0': None,
        'oscillators': None,
        'potential_width': None,
        't_final': None,
        'n_max': None,
    },
    'quadrature': {
        's_nodes': None,
        'munu_nodes': None,
        'xi_mode': None,
        'xi_nodes': None,
        'xi_cutoff': None,
        'target_tol': None,
    },
    'study': {
        'j': None,
        't': None,
        'n_set': None,
        'x_grid': {
            'radius': None,
            'radial_nodes': None,
            'angular_nodes': None,
            'axial_nodes': None,
            'margin': None,
        },
    },
    'output': {'path': None, 'format': None},
}

REQUIRED_MODEL_KEYS = ['v0', 'oscillators']
OUTPUT_FORMATS = ['csv']


@dataclasses.dataclass(frozen=True)
class GridOptions(object):
    '''Tube grid of the residual studies.'''

    radius: float = constants.TUBE_RADIUS
    radial_nodes: int = constants.TUBE_RADIAL_NODES
    angular_nodes: int = constants.TUBE_ANGULAR_NODES
    axial_nodes: int = constants.TUBE_AXIAL_NODES
    margin: float = constants.TUBE_MARGIN

    @property
    def counts(self):
        return (self.radial_nodes, self.angular_nodes, self.axial_nodes)


@dataclasses.dataclass(frozen=True)
class StudyOptions(object):
    j: int = 1
    t: Optional[float] = None
    n_set: Optional[Tuple[MultiIndex, ...]] = None
    x_grid: GridOptions = dataclasses.field(default_factory=GridOptions)


@dataclasses.dataclass(frozen=True)
class OutputOptions(object):
    path: Optional[str] = None
    format: str = 'csv'


@dataclasses.dataclass(frozen=True)
class RunConfig(object):
    '''File form of one run: the model, its quadrature, the study options
    and the output destination. *source* holds the file path.'''

    model: Dict[str, Any]
    quad: QuadSpec
    study: StudyOptions
    output: OutputOptions
    source: Optional[str] = None

    @property
    def eps_list(self):
        '''Study scales, the configured list or the defaults.'''
        if self.model.get('eps_list') is not None:
            return [float(eps) for eps in self.model['eps_list']]
        return list(constants.DEFAULT_EPS_LIST)

    def to_model_config(self, target_tol=None):
        '''Return the :class:`ModelConfig`, optionally with *target_tol*
        overriding the quadrature tolerance.'''
        model = self.model
        epsilon = model.get('epsilon')
        if epsilon is None:
            epsilon = max(self.eps_list)
        quad = self.quad
        if target_tol is not None:
            quad = quad.with_tolerance(target_tol)
        return ModelConfig(
            epsilon=float(epsilon),
            v0=float(model['v0']),
            oscillators=tuple(
                tuple(position) for position in model['oscillators']
            ),
            potential_width=float(model.get('potential_width', 1.0)),
            t_final=float(model.get('t_final', 1.0)),
            n_max=int(model.get('n_max', 2)),
            quad=quad,
        )


def _key_line(text, key):
    '''Return the first line of *text* declaring *key*, or None.'''
    match = re.search(r'"{}"\s*:'.format(re.escape(key)), text)
    if match is None:
        return None
    return text.count('\n', 0, match.start()) + 1


def _check_keys(content, schema, text, path=()):
    '''Recursively reject keys of *content* missing from *schema*.'''
    if not isinstance(content, dict):
        raise ConfigError(
            'section "{}" must be an object'.format('.'.join(path)),
            line=_key_line(text, path[-1]) if path else None,
            key='.'.join(path) or None,
        )
    for key, value in content.items():
        if key not in schema:
            raise UnknownKeyError(
                '.'.join(path + (key,)), line=_key_line(text, key)
            )
        if isinstance(schema[key], dict) and value is not None:
            _check_keys(value, schema[key], text, path + (key,))


def _require(section, key, text, path):
    if section.get(key) is None:
        raise ConfigError(
            'missing required key "{}"'.format('.'.join(path + (key,))),
            line=_key_line(text, path[-1]),
            key='.'.join(path + (key,)),
        )


def _build(content, text, source):
    _check_keys(content, SCHEMA, text)
    model = content.get('model')
    if model is None:
        raise ConfigError('missing required key "model"', key='model')
    for key in REQUIRED_MODEL_KEYS:
        _require(model, key, text, ('model',))
    if model.get('epsilon') is None and model.get('eps_list') is None:
        raise ConfigError(
            'missing required key "model.epsilon" (or "model.eps_list")',
            line=_key_line(text, 'model'),
            key='model.epsilon',
        )

    study = dict(content.get('study') or {})
    grid = GridOptions(**(study.pop('x_grid', None) or {}))
    if study.get('n_set') is not None:
        study['n_set'] = tuple(MultiIndex.parse(n) for n in study['n_set'])
    output = OutputOptions(**(content.get('output') or {}))
    if output.format not in OUTPUT_FORMATS:
        raise ConfigError(
            'output.format must be one of {}, got {!r}'.format(
                OUTPUT_FORMATS, output.format
            ),
            line=_key_line(text, 'format'),
            key='output.format',
        )
    return RunConfig(
        model=dict(model),
        quad=QuadSpec(**(content.get('quadrature') or {})),
        study=StudyOptions(x_grid=grid, **study),
        output=output,
        source=source,
    )


def parse_run_config(text, source=None):
    '''Return the :class:`RunConfig` of the JSON *text*.

    Raise :exc:`ConfigParseError` for invalid JSON, :exc:`UnknownKeyError`
    for a key nobody reads and :exc:`ConfigError` for missing or ill typed
    values, each with the line of the offending key when known.
    '''
    try:
        content = json.loads(text)
    except json.JSONDecodeError as error:
        raise ConfigParseError(
            error.msg, line=error.lineno, column=error.colno
        )
    return _checked_build(content, text, source)


def _checked_build(content, text, source):
    try:
        return _build(content, text, source)
    except (TypeError, ValueError) as error:
        raise ConfigError(str(error))


def load_run_config(path):
    '''Read and parse the configuration file at *path*.

    :exc:`OSError` propagates for a file that can not be read.
    '''
    logger.debug('Loading configuration {}'.format(path))
    try:
        content = read_json_file(path, strict=True)
    except json.JSONDecodeError as error:
        raise ConfigParseError(
            error.msg, line=error.lineno, column=error.colno
        )
    # Raw text, only for locating keys in diagnostics.
    with open(path, 'r', encoding='utf-8') as file:
        text = file.read()
    return _checked_build(content, text, str(path))


def run_config_channels(run_config, cfg) -> List[MultiIndex]:
    '''Channels of the studies: the configured set or all of |n| <= 2.'''
    if run_config.study.n_set is not None:
        return list(run_config.study.n_set)
    return cfg.channels(constants.DEFAULT_CHANNEL_DEGREE)
