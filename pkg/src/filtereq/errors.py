"""Exception types shared across the package."""


class FilterEqError(Exception):
    """Base class for all package-specific errors."""


class EmptyListError(FilterEqError):
    """An operation that needs a nonempty list got an empty one."""


class OutOfScopeError(FilterEqError):
    """A value or list fell outside a function's declared domain."""


class InvalidBlockError(FilterEqError):
    """A term block has a non-positive repeat count or a bad sign tag."""


class InvalidInclusionError(FilterEqError):
    """An inclusion is not a strictly increasing tuple into the target range."""


class NotAnNfeError(FilterEqError):
    """A function's outputs cannot be explained by relabelled input copies."""


class UniverseTooSmallError(FilterEqError):
    """The operation needs more distinct values than the input provides."""


class MissingSublistError(FilterEqError):
    """The sublist table lacks an entry the extrapolation needs."""


class InvalidExampleError(FilterEqError):
    """A behaviour example does not have the required shape."""
