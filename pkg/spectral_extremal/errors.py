"""
Exceptions raised by spectral_extremal.

Every exception derives from SpectralExtremalError, which carries optional keyword
details that are appended to the message when printed.
"""


class SpectralExtremalError(RuntimeError):
    def __init__(self, message, **details):
        super().__init__(message)
        self.details = {k: v for k, v in details.items() if v is not None}

    def __str__(self):
        details = ", ".join(
            f"{key.replace('_', ' ').title()}: {value}"
            for key, value in self.details.items()
        )
        return f"{self.args[0]} ({details})" if details else self.args[0]


class GraphInputError(SpectralExtremalError, ValueError):
    """
    Invalid input: out-of-range vertex, self-loop, inadmissible move, zero test
    vector, malformed graph file, non-graphic degree sequence and the like.
    """


class DomainError(SpectralExtremalError):
    """
    The operation is undefined on the given graph, e.g. the diameter or the Perron
    vector of a disconnected graph.
    """


class CapabilityError(SpectralExtremalError):
    """
    The request is valid but beyond what this library supports, e.g. a canonical
    form for more than 12 vertices or an oracle run above its cap.
    """


class ConsistencyError(SpectralExtremalError):
    """
    An internal consistency check failed, e.g. the ports of a pattern and its
    replacement do not line up.
    """


class ConvergenceError(SpectralExtremalError):
    """
    The eigensolver did not reach the requested residual. The best estimate is kept
    in `best`.
    """

    def __init__(self, message, best=None, **details):
        super().__init__(message, **details)
        self.best = best
