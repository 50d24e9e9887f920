"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed or inconsistent input data (CLI exit code 2)."""


class PreconditionError(ValueError):
    """An operation was called on data that does not meet its hypotheses."""


class InconsistencyError(RuntimeError):
    """A result that theory guarantees failed to materialise."""


class NotStabilizedError(RuntimeError):
    """The quotient construction did not close within the degree bound."""

    def __init__(self, message, trajectory=(), max_degree=None, complete=None):
        super().__init__(message)
        self.trajectory = list(trajectory)
        self.max_degree = max_degree
        self.complete = complete
