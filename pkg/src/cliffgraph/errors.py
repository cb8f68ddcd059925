"""Exception hierarchy shared by all modules."""


class CliffGraphError(Exception):
    """Base class for every error raised by this package."""


class InputError(CliffGraphError, ValueError):
    """Malformed user input: bad cycle strings, bad selectors, unknown names."""


class SizeError(CliffGraphError):
    """A configured size bound (group order, subgroup count) was exceeded."""


class PreconditionError(CliffGraphError, ValueError):
    """An operation was called with arguments violating its precondition."""


class ConsistencyError(CliffGraphError, AssertionError):
    """An exact internal check failed. Always indicates a bug."""


class DecompositionError(ConsistencyError):
    """A class function did not decompose with non-negative integer multiplicities."""
