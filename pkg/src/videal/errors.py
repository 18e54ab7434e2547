"""Exception types shared across the package."""


class AmbientMismatchError(ValueError):
    """Operands live in polynomial rings with different variable counts."""


class UndefinedInvariantError(ValueError):
    """The requested invariant is undefined for this input (e.g. alpha of (0))."""


class UnsupportedInputError(ValueError):
    """The operation is only defined for a restricted input class (e.g. square-free)."""


class ResourceLimitError(RuntimeError):
    """A configured size cap was exceeded; the message names the cap."""


class InfeasibleError(RuntimeError):
    """The linear program has no feasible point."""


class UnboundedError(RuntimeError):
    """The linear objective is unbounded below on the feasible region."""
