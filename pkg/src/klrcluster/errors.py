"""Exception hierarchy. Every domain failure derives from :class:`ClusterError`."""


class ClusterError(ValueError):
    pass


class RankMismatchError(ClusterError):
    pass


class NotDominantError(ClusterError):
    pass


class NonDominantParameterError(ClusterError):
    """A parameter mutation produced a vector with a negative coordinate."""


class InexactDivisionError(ClusterError):
    """Raised when a Laurent division leaves a remainder.

    Under the Laurent phenomenon this never happens for exchange relations,
    so seeing it means the inputs were not a valid seed.
    """


class RankDeficientError(ClusterError):
    pass


class FPolynomialError(ClusterError):
    pass
