"""Exception types shared across the toolkit."""


class GraphK0Error(Exception):
    """Base class for all errors raised by this package."""


class InvalidGraph(GraphK0Error):
    """A graph description is malformed (bad vertex count, edge out of range)."""


class InvalidParameter(GraphK0Error):
    """A numeric parameter is outside its documented domain."""


class ShapeError(GraphK0Error):
    """Matrix dimensions do not match the requested operation."""


class Unsupported(GraphK0Error):
    """The input is valid but outside the scope this toolkit handles."""


class NotApplicable(GraphK0Error):
    """A certificate was requested for a graph that fails its preconditions."""


class ResourceLimit(GraphK0Error):
    """An enumeration would exceed the configured budget."""


class OutOfRegion(GraphK0Error):
    """A vector lies outside the enumerated capped region."""


class GroupMismatch(GraphK0Error):
    """Group elements from different cokernel computations were mixed."""


class InternalError(GraphK0Error):
    """A self-check failed; indicates a bug, not a caller error."""
