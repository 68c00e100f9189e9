# :coding: utf-8
# :copyright: Copyright (c) 2024 ftrack


class ConfigError(Exception):
    """
    Exception raised when a configuration can not be turned into a model.
    *line* and *key* locate the problem in the source file when known.
    """

    def __init__(self, message, line=None, key=None):
        if line is not None:
            message = 'line {}: {}'.format(line, message)
        super(ConfigError, self).__init__(message)
        self.line = line
        self.key = key


class ConfigParseError(ConfigError):
    """
    Exception raised when the configuration file is not valid JSON.
    """

    def __init__(self, message, line=None, column=None):
        if column is not None:
            message = '{} (column {})'.format(message, column)
        super(ConfigParseError, self).__init__(message, line=line)
        self.column = column


class UnknownKeyError(ConfigError):
    """
    Exception raised when the configuration holds a key nobody reads.
    """

    def __init__(self, key, line=None):
        super(UnknownKeyError, self).__init__(
            'unknown key "{}"'.format(key), line=line, key=key
        )


class ValidationError(ConfigError):
    """
    Exception raised when a parsed configuration violates model rules.
    *rules* lists the violated rule names.
    """

    def __init__(self, message, rules=None):
        super(ValidationError, self).__init__(message)
        self.rules = list(rules or [])


class GeometryError(ConfigError):
    """
    Exception raised when the oscillator positions admit no geometry.
    """

    def __init__(self, message):
        super(GeometryError, self).__init__(message)


class RotationError(ValueError):
    """
    Exception raised when a rotation is requested for a non unit vector.
    """

    def __init__(self, message):
        super(RotationError, self).__init__(message)


class OrthogonalityError(ValueError):
    """
    Exception raised when a transverse argument is not orthogonal to the
    packet direction.
    """

    def __init__(self, message):
        super(OrthogonalityError, self).__init__(message)
