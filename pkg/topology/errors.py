class TopologyError(ValueError):
    """Base class for every error raised by the topology and services layers."""


class MalformedFaceError(TopologyError):
    pass


class NotAFaceError(TopologyError):
    pass


class NotAnEdgeError(NotAFaceError):
    pass


class DisjointnessError(TopologyError):
    pass


class NotASubcomplexError(TopologyError):
    pass


class PurityError(TopologyError):
    pass


class CsViolationError(TopologyError):
    pass


class IdentificationCollisionError(TopologyError):
    """Quotient did not halve the f-vector: two faces were identified that should not be."""


class OrientationError(TopologyError):
    pass


class CertificateError(TopologyError):
    pass


class ConstructionInvariantError(TopologyError):
    """A builder invariant failed. This always signals a bug in the builder."""


class ContractionUnsoundError(ConstructionInvariantError):
    pass


class HomologyCapError(TopologyError):
    pass


class ComplexFileError(TopologyError):
    pass
