# :coding: utf-8
# :copyright: Copyright (c) 2024 ftrack
import os
from importlib.metadata import PackageNotFoundError, version

import toml


def get_version(package_name, package_path):
    '''Return version string for *package_name* at *package_path*.

    The installed distribution wins; when running from sources the version
    is read from the pyproject.toml found in *package_path*.
    '''
    result = '0.0.0'
    distribution_name = package_name.replace('_', '-')
    try:
        result = version(distribution_name)
    except PackageNotFoundError:
        pass
    if result == '0.0.0':
        # Probably running from sources, fetch version from pyproject.toml
        path_toml = os.path.join(
            package_path,
            "pyproject.toml",
        )
        if os.path.exists(path_toml):
            result = toml.load(path_toml)["tool"]["poetry"]["version"]

    return result
