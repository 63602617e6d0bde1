"""Exception types shared across the package."""


class TreedegError(Exception):
    pass


class EmptyGraph(TreedegError, ValueError):
    pass


class Disconnected(TreedegError, ValueError):
    pass


class PreconditionViolated(TreedegError, ValueError):
    pass


class StarNotSupported(TreedegError, ValueError):
    pass


class DegenerateShape(TreedegError, ValueError):
    pass


class DeskScaleExceeded(TreedegError, ValueError):
    pass


class OutOfScopeError(TreedegError, ValueError):
    pass


class SamplingExhausted(TreedegError, RuntimeError):
    pass


class CapExceeded(TreedegError, RuntimeError):
    pass


class InternalContradiction(TreedegError, RuntimeError):
    """A search that is guaranteed to succeed came back empty.

    Raised only when the embedder exhausts its complete backtracking search on
    an in-scope, non-exceptional input. Never caught inside the package.
    """
