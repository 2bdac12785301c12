"""Exception types shared across the package."""


class RingSpectraError(Exception):
    """Base class for all package-specific errors."""


class RingValidationError(RingSpectraError):
    """A table set failed one of the ring axioms.

    ``code`` is one of ``not-abelian-group``, ``mul-not-associative`` or
    ``not-distributive``; ``reason`` refines it and ``witness`` is a tuple of
    element indices exhibiting the violation.
    """

    def __init__(self, code: str, reason: str, witness: tuple, message: str):
        self.code = code
        self.reason = reason
        self.witness = witness
        super().__init__(message)


class CommutativeRingError(RingSpectraError):
    """A commutative ring was passed where a non-commutative one is required."""


class NonCommutativeRingError(RingSpectraError):
    """A non-commutative ring was passed where a commutative one is required."""


class NotCCRingError(RingSpectraError):
    """A ring outside the commutative-centralizer class where one is required."""


class SearchSpaceTooLargeError(RingSpectraError):
    """An enumeration request exceeds the supported search-space bound."""


class CharPolyCapError(RingSpectraError):
    """The exact characteristic-polynomial path was asked to exceed its cap."""


class UnsupportedTopologyError(RingSpectraError):
    """Genus was requested for a graph that is not a disjoint clique union."""

    def __init__(self, witness: tuple, message: str):
        self.witness = witness
        super().__init__(message)


class RingDocumentError(RingSpectraError):
    """A ring document could not be parsed."""
