"""Exception hierarchy.

Every failure raised by the library derives from :class:`E2Error`, which is
itself a ``ValueError`` so callers that only care about bad input can catch
that.
"""


class E2Error(ValueError):
    pass


class SingularMatrix(E2Error):
    pass


class NegativeDeterminant(E2Error):
    pass


class NotUnimodular(E2Error):
    pass


class BadDimension(E2Error):
    pass


class ZeroSubspace(E2Error):
    pass


class IllConditioned(E2Error):
    pass


class ZeroAlgebra(E2Error):
    pass


class NotClosed(E2Error):
    """A generator list whose span is not closed under the bracket.

    ``pair`` holds the indices of the offending basis elements and
    ``residual`` the norm of the out-of-span part of their bracket.
    """

    def __init__(self, message, pair=None, residual=None):
        super().__init__(message)
        self.pair = pair
        self.residual = residual


class NotContained(E2Error):
    pass


class UnrecognizedSubalgebra(E2Error):
    pass


class NotInvariant(E2Error):
    pass


class DimensionOutOfScope(E2Error):
    pass


class BadParams(E2Error):
    pass
