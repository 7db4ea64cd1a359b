"""
Spectral radius, Perron vector and the eigenvalue-gap identities.

The Perron solver iterates on A + I from the all-ones vector; the shift keeps
bipartite graphs from oscillating between the two ends of the spectrum. Path-like
graphs have a spectral gap of order 1/n^2, so in "auto" mode the solver hands off
to inverse iteration with a sparse LU factorization of (Delta I - A), which is
positive definite for connected nonregular graphs.
"""

from typing import List, Optional, Sequence, Tuple, Union

from loguru import logger
import numpy as np
from pydantic import BaseModel
import scipy.sparse
import scipy.sparse.linalg

from . import config
from .errors import ConvergenceError, DomainError, GraphInputError
from .graph import Graph, is_connected

# inverse iteration converges at the rate (Delta - lambda_1) / (Delta - lambda_2),
# which is far below 1 on every graph family we build.
_INVERSE_MAX_ITERS = 500

_METHODS = ("auto", "power", "inverse")


class PerronData(object):
    """
    Spectral radius `lambda1`, unit Perron vector `x` (entrywise positive), the
    infinity norm `residual` of A x - lambda1 x and the number of iterations used.
    """

    __slots__ = ("lambda1", "x", "residual", "iterations", "method")

    def __init__(
        self,
        lambda1: float,
        x: np.ndarray,
        residual: float,
        iterations: int,
        method: str,
    ):
        self.lambda1 = float(lambda1)
        self.x = x
        self.residual = float(residual)
        self.iterations = iterations
        self.method = method

    @property
    def x_min(self) -> float:
        return float(self.x.min())

    @property
    def x_max(self) -> float:
        return float(self.x.max())

    def to_dict(self, with_vector: bool = False) -> dict:
        d = {
            "lambda1": self.lambda1,
            "residual": self.residual,
            "iterations": self.iterations,
            "method": self.method,
            "x_min": self.x_min,
            "x_max": self.x_max,
        }
        if with_vector:
            d["x"] = self.x.tolist()
        return d

    def __repr__(self) -> str:
        return (
            f"PerronData(lambda1={self.lambda1!r}, residual={self.residual:.3g},"
            f" iterations={self.iterations}, method={self.method})"
        )


def _residual(a: scipy.sparse.csr_matrix, x: np.ndarray) -> Tuple[float, float]:
    ax = a @ x
    lam = float(x @ ax)
    return lam, float(np.max(np.abs(ax - lam * x)))


def _power(
    a: scipy.sparse.csr_matrix,
    x: np.ndarray,
    tol: float,
    max_steps: int,
) -> Tuple[np.ndarray, float, float, int, bool]:
    """
    Power iteration on A + I. Returns (x, lambda, residual, steps, converged); stops
    early when the Rayleigh quotient changes by less than tol * 1e-2.
    """
    lam_prev = None
    lam, res = 0.0, np.inf
    for step in range(1, max_steps + 1):
        ax = a @ x
        lam = float(x @ ax)
        res = float(np.max(np.abs(ax - lam * x)))
        if res <= tol:
            return x, lam, res, step, True
        if lam_prev is not None and abs(lam - lam_prev) < tol * 1e-2:
            logger.trace(f"power iteration stagnated at step {step}, residual {res}")
            return x, lam, res, step, False
        lam_prev = lam
        y = ax + x
        x = y / np.linalg.norm(y)
    return x, lam, res, max_steps, False


def _inverse(
    a: scipy.sparse.csr_matrix,
    delta: int,
    x: np.ndarray,
    tol: float,
) -> Tuple[np.ndarray, float, float, int, bool]:
    n = a.shape[0]
    m = (delta * scipy.sparse.identity(n, format="csc")) - a.tocsc()
    lu = scipy.sparse.linalg.splu(m)
    lam, res = _residual(a, x)
    for step in range(1, _INVERSE_MAX_ITERS + 1):
        y = lu.solve(x)
        x = y / np.linalg.norm(y)
        if x.sum() < 0:
            x = -x
        lam, res = _residual(a, x)
        if res <= tol:
            return x, lam, res, step, True
    return x, lam, res, _INVERSE_MAX_ITERS, False


def perron(
    g: Graph,
    tol: Optional[float] = None,
    max_iters: Optional[int] = None,
    method: str = "auto",
    handoff_iters: Optional[int] = None,
) -> PerronData:
    """
    Computes the spectral radius and the unit Perron vector of a connected graph.

    :param tol: residual tolerance on ||A x - lambda x||_inf (default config.DEFAULT_TOL).
    :param max_iters: power iteration budget (default config.DEFAULT_MAX_ITERS).
    :param method: "power", "inverse" or "auto". "power" finishes with inverse
        iteration only if the estimate stagnates; "auto" also hands off once
        handoff_iters steps are spent.
    :raises DomainError: if g is disconnected.
    :raises ConvergenceError: if the residual is not reached; `best` carries the
        last estimate.
    """
    tol = config.DEFAULT_TOL if tol is None else tol
    max_iters = config.DEFAULT_MAX_ITERS if max_iters is None else max_iters
    if handoff_iters is None:
        handoff_iters = config.POWER_HANDOFF_ITERS
    if method not in _METHODS:
        raise GraphInputError("Unknown eigensolver method", method=method)
    if not tol > 0:
        raise GraphInputError("Tolerance must be positive", tol=tol)
    n = g.n
    if n < 1:
        raise GraphInputError("The Perron vector needs at least one vertex")
    if not is_connected(g):
        raise DomainError("The Perron vector is only defined for connected graphs")

    degrees = np.asarray(g.degrees())
    delta = int(degrees.max())
    a = g.to_sparse()
    if delta == degrees.min():
        x = np.full(n, 1.0 / np.sqrt(n))
        lam, res = _residual(a, x) if n > 1 else (0.0, 0.0)
        return PerronData(delta, x, res, 0, "regular")

    x = np.full(n, 1.0 / np.sqrt(n))
    steps = 0
    used = method
    if method in ("auto", "power"):
        budget = max_iters if method == "power" else min(max_iters, handoff_iters)
        x, lam, res, steps, ok = _power(a, x, tol, budget)
        if ok:
            return PerronData(lam, np.abs(x), res, steps, "power")
        if method == "power" and steps >= budget:
            raise ConvergenceError(
                "Power iteration did not reach the requested residual",
                best=PerronData(lam, np.abs(x), res, steps, "power"),
                residual=res,
                tol=tol,
            )
        used = "power+inverse"
    x, lam, res, inv_steps, ok = _inverse(a, delta, x, tol)
    steps += inv_steps
    best = PerronData(lam, np.abs(x), res, steps, used)
    if not ok:
        raise ConvergenceError(
            "Inverse iteration did not reach the requested residual",
            best=best,
            residual=res,
            tol=tol,
        )
    return best


def spectral_radius(g: Graph, tol: Optional[float] = None) -> float:
    return perron(g, tol=tol).lambda1


def spectral_radius_dense(g: Graph) -> float:
    """
    Reference value from a dense symmetric eigensolve.
    """
    if g.n == 0:
        return 0.0
    return float(np.linalg.eigvalsh(g.to_dense())[-1])


def compare_lambda(a: float, b: float, tol: Optional[float] = None) -> int:
    """
    -1, 0 or 1 as a is below, within tol of, or above b.
    """
    tol = config.DEFAULT_LAMBDA_TOL if tol is None else tol
    if abs(a - b) <= tol:
        return 0
    return -1 if a < b else 1


################################################################################
# Gap identities and the Rayleigh bound.
################################################################################


def _edge_arrays(g: Graph) -> Tuple[np.ndarray, np.ndarray]:
    edges = g.edges()
    if not edges:
        return np.zeros(0, dtype=np.int64), np.zeros(0, dtype=np.int64)
    e = np.asarray(edges, dtype=np.int64)
    return e[:, 0], e[:, 1]


def laplacian_form(g: Graph, y: np.ndarray) -> float:
    """
    y^T L y, i.e. the sum over edges uv of (y_u - y_v)^2.
    """
    us, vs = _edge_arrays(g)
    return float(np.sum((y[us] - y[vs]) ** 2))


def deficiency_form(g: Graph, y: np.ndarray, delta: int) -> float:
    """
    The sum over vertices of (Delta - d(v)) y_v^2.
    """
    d = np.asarray(g.degrees(), dtype=np.float64)
    return float(np.sum((delta - d) * y**2))


def gap_identities_residual(
    g: Graph, pd: PerronData, delta: int
) -> Tuple[float, float]:
    """
    Residuals of the two exact consequences of A x = lambda x:

      (Delta - lambda) ||x||^2 = sum_v (Delta - d(v)) x_v^2 + sum_uv (x_u - x_v)^2
      sum_v (Delta - d(v)) x_v = (Delta - lambda) sum_v x_v
    """
    x = pd.x
    gap = delta - pd.lambda1
    d = np.asarray(g.degrees(), dtype=np.float64)
    r_energy = abs(
        gap * float(x @ x) - deficiency_form(g, x, delta) - laplacian_form(g, x)
    )
    r_sum = abs(float(np.sum((delta - d) * x)) - gap * float(np.sum(x)))
    return r_energy, r_sum


def gap_from_perron(g: Graph, pd: PerronData, delta: Optional[int] = None) -> float:
    """
    Delta - lambda_1 through the energy identity. Unlike Delta - pd.lambda1 this
    has no cancellation when the gap is tiny.
    """
    delta = g.max_degree if delta is None else delta
    x = pd.x / np.linalg.norm(pd.x)
    return deficiency_form(g, x, delta) + laplacian_form(g, x)


class GapBoundInput(BaseModel):
    """
    A test vector y and the maximum degree Delta for the Rayleigh upper bound on
    Delta - lambda_1.
    """

    y: List[float]
    delta: int


def rayleigh_upper_gap(
    g: Graph, bound_input: Union[GapBoundInput, Sequence[float], np.ndarray], delta=None
) -> float:
    """
    (sum_v (Delta - d(v)) y_v^2 + y^T L y) / ||y||^2, an upper bound on Delta -
    lambda_1(g) for every nonzero y. Accepts a GapBoundInput or a bare vector
    plus delta.
    """
    if isinstance(bound_input, GapBoundInput):
        y, delta = bound_input.y, bound_input.delta
    else:
        y = bound_input
        if delta is None:
            delta = g.max_degree
    y = np.asarray(y, dtype=np.float64)
    if y.shape != (g.n,):
        raise GraphInputError("Test vector length must equal n", n=g.n, got=y.shape)
    norm2 = float(y @ y)
    if norm2 == 0.0:
        raise GraphInputError("The test vector must not be zero")
    return (deficiency_form(g, y, delta) + laplacian_form(g, y)) / norm2


class PerronExtremes(BaseModel):
    x_min: float
    x_max: float
    # n * x_min^2 <= 1 <= n * x_max^2 holds for every unit vector.
    bounds_hold: bool
    # x_min <= sqrt(n) (Delta - lambda_1), the sum identity plus Cauchy-Schwarz.
    x_min_gap_bound_holds: bool


def perron_extremes(g: Graph, pd: PerronData, delta: Optional[int] = None) -> PerronExtremes:
    delta = g.max_degree if delta is None else delta
    n = g.n
    gap = gap_from_perron(g, pd, delta)
    return PerronExtremes(
        x_min=pd.x_min,
        x_max=pd.x_max,
        bounds_hold=bool(n * pd.x_min**2 <= 1 + 1e-12 <= n * pd.x_max**2 + 2e-12),
        x_min_gap_bound_holds=bool(pd.x_min <= np.sqrt(n) * gap + 1e-12),
    )
