# :coding: utf-8
# :copyright: Copyright (c) 2024 ftrack

import os
import logging
import json

logger = logging.getLogger(__name__)


def read_json_file(file_path, strict=False):
    '''Read the given *file_path* json file.

    With *strict* unset a missing or broken file is logged and an empty
    dictionary returned. With *strict* set the :exc:`OSError` or
    :exc:`json.JSONDecodeError` (carrying line and column) propagates.
    '''
    content = None
    if strict:
        with open(file_path, 'r', encoding='utf-8') as file:
            return json.load(file)

    if os.path.exists(file_path):
        with open(file_path, 'r', encoding='utf-8') as file:
            try:
                content = json.load(file)
            except Exception:
                logger.exception(
                    f'Exception reading json file in {file_path}.'
                )
    else:
        logger.warning(f"file {file_path} doesn't exists")

    return content or dict()
