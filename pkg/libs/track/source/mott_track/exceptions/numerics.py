# :coding: utf-8
# :copyright: Copyright (c) 2024 ftrack


class NumericalError(Exception):
    """
    Exception raised when a numerical evaluation can not be carried out.
    """

    def __init__(self, message):
        super(NumericalError, self).__init__(message)


class CausticTimeError(NumericalError):
    """
    Exception raised when the Mehler kernel is asked for a time too close
    to a multiple of pi.
    """

    def __init__(self, t):
        super(CausticTimeError, self).__init__(
            'caustic time: |sin t| too small at t={!r}'.format(t)
        )
        self.t = t


class OscillatoryDominanceError(NumericalError):
    """
    Exception raised when the Gaussian damping of an axis integral is too
    weak for the moment recurrence.
    """

    def __init__(self, alpha):
        super(OscillatoryDominanceError, self).__init__(
            'oscillatory dominance: Re(alpha)={!r} below floor'.format(
                float(alpha.real)
            )
        )
        self.alpha = alpha


class SupportEscapeError(NumericalError):
    """
    Exception raised when a sampled profile does not vanish at the
    boundary of its grid.
    """

    def __init__(self, message):
        super(SupportEscapeError, self).__init__(
            'support escape: {}'.format(message)
        )


class GridEscapeError(NumericalError):
    """
    Exception raised when an evolved state reaches the boundary ring of
    its spectral grid.
    """

    def __init__(self, fraction):
        super(GridEscapeError, self).__init__(
            'grid escape: {:.3e} of the mass in the boundary ring'.format(
                fraction
            )
        )
        self.fraction = fraction


class QuadratureError(NumericalError):
    """
    Exception raised when a quadrature does not converge. *estimate*
    holds the last error estimate.
    """

    def __init__(self, message, estimate=None):
        super(QuadratureError, self).__init__(message)
        self.estimate = estimate


class SlopeFitError(NumericalError):
    """
    Exception raised when a log-log fit gets unusable points.
    """

    def __init__(self, message):
        super(SlopeFitError, self).__init__(message)
