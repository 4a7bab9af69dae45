"""Exception hierarchy.

Every error raised by the library derives from :class:`ScxError`.  The CLI maps
:class:`InputError` subclasses to exit code 2 and :class:`LimitError`
subclasses (capacity caps, infeasibility) to exit code 3.
"""


class ScxError(Exception):
    """Base class for all library errors."""


class InputError(ScxError, ValueError):
    """The caller supplied an object that violates an operation's precondition."""


class LimitError(ScxError):
    """A desk-scale capacity bound was exceeded."""


class VertexOutOfRange(InputError):
    pass


class EmptyFacetList(InputError):
    pass


class FaceNotInComplex(InputError):
    pass


class ParentMismatch(InputError):
    pass


class ComplexMismatch(InputError):
    pass


class NotPure(InputError):
    pass


class NotAMatroid(InputError):
    pass


class NotAPermutation(InputError):
    pass


class NotFullSimplex(InputError):
    pass


class SupportNotFacets(InputError):
    pass


class EmptyCarrierNotStrict(InputError):
    pass


class IndexOutOfRange(InputError):
    pass


class ShellingVerificationFailed(ScxError):
    """A candidate shelling order failed the codimension-one check."""

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class CapacityExceeded(LimitError):
    pass


class FacetCapExceeded(LimitError):
    pass
