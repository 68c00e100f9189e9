import pytest


@pytest.mark.parametrize(
    'name, passed',
    [('PASS_STATUS', True), ('WARN_STATUS', True), ('FAIL_STATUS', False)],
)
def test__status__bool_mapping(name, passed) -> None:
    '''Test warnings count as passed and failures do not.'''
    from mott_constants import status

    assert status.status_bool_mapping[getattr(status, name)] is passed


def test__cli__exit_codes_are_distinct() -> None:
    '''Test the exit code contract.'''
    from mott_constants import cli

    assert cli.SUCCESS_EXIT_CODE == 0
    assert cli.NUMERICAL_FAILURE_EXIT_CODE == 1
    assert cli.CONFIG_ERROR_EXIT_CODE == 2
    assert cli.IO_ERROR_EXIT_CODE == 3


def test__cli__track_columns() -> None:
    '''Test the track table header.'''
    from mott_constants import cli

    assert ','.join(cli.TRACK_COLUMNS) == (
        'j,n1,n2,n3,abs_n,dir_x,dir_y,dir_z,momentum,z_shift,weight'
    )


def test__cli__log_levels() -> None:
    '''Test MOTT_LOG values map to logging level names.'''
    import logging
    from mott_constants import cli

    for name in cli.LOG_LEVEL_MAPPING.values():
        assert isinstance(logging.getLevelName(name), int)
    assert cli.DEFAULT_LOG_LEVEL in cli.LOG_LEVEL_MAPPING


def test__numerics__default_eps_list() -> None:
    '''Test the default study scales are decreasing and supported.'''
    from mott_constants import numerics

    eps_list = numerics.DEFAULT_EPS_LIST
    assert eps_list == sorted(eps_list, reverse=True)
    assert min(eps_list) >= numerics.MIN_STUDY_EPSILON
    assert len(eps_list) >= 3
