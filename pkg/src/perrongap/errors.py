"""Exception types shared across the toolkit."""


class PerronGapError(Exception):
    """Base class for all toolkit errors."""


class InvalidEdge(PerronGapError):
    """An edge endpoint is out of range, a self-loop, or a duplicate in a file."""


class InvalidVertexSet(PerronGapError):
    """A vertex set contains duplicates or indices outside the graph."""


class NotConnected(PerronGapError):
    """An operation that requires a connected graph received a disconnected one."""


class InvalidParams(PerronGapError):
    """Construction or bound parameters violate the stated hypotheses."""


class NotAConstruction(PerronGapError):
    """A labeled graph does not carry the role structure an audit expects."""


class EmptySet(PerronGapError):
    """A nonempty vertex set was required."""


class NoConvergence(PerronGapError):
    """Iteration reached its cap before the residual met the tolerance."""


class NotIndependent(PerronGapError):
    """The supplied vertex set spans an edge, so the gap identities do not apply."""


class TooLarge(PerronGapError):
    """Input exceeds the configured cap of an exact combinatorial oracle."""


class NotApplicable(PerronGapError):
    """The bound's hypotheses (e.g. chromatic number at least 3) do not hold."""
