"""Exception types shared by the engines, the I/O layer and the CLI."""


class InvalidArgumentError(ValueError):
    """A caller passed an argument outside an operation's precondition."""


class DegenerateInputError(ValueError):
    """The input is well formed but admits no meaningful answer."""


class SingularMatrixError(ArithmeticError):
    """An unregularized least-squares system is rank deficient."""

    def __init__(self, rank: int, n_features: int):
        self.rank = rank
        self.n_features = n_features
        super().__init__(
            f"X^T X is singular: rank {rank} < {n_features} features; use lambda > 0"
        )


class OutOfBoundsError(ValueError):
    """A body lies outside the root square of the quadtree."""

    def __init__(self, body_id: int, position):
        self.body_id = body_id
        super().__init__(
            f"body {body_id} at ({position[0]!r}, {position[1]!r}) is outside the unit square"
        )


class UnsupportedFormatError(ValueError):
    """A file parsed but uses a layout this package does not read."""


class NoUsableInputError(ValueError):
    """A batch operation found nothing it could read."""
