"""Exception types shared across the solver modules."""


class ConvergenceError(RuntimeError):
    """An iterative procedure (Newton root search, eigensolver) failed to converge."""


class NodeCountError(RuntimeError):
    """Interior node count of a computed state disagrees with its energy rank.

    Signals an under-resolved grid; rerun with larger N.
    """


class BracketError(RuntimeError):
    """The shooting-method energy scan found no sign change in the matching function."""
