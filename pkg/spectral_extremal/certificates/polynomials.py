"""
The polynomials whose signs decide the Delta = 4 replacements, and the rational
functions compared in the Delta = 3 pendant argument.

Each of f, g, h vanishes at 4 and is positive on the interval of lambda where the
corresponding replacement is used. The certificate is numerical: sign changes at
the listed sample points plus a dense grid on the interval.
"""

from typing import Callable, Dict, List, Sequence, Tuple

from loguru import logger
import numpy as np
from numpy.polynomial import polynomial as P
from pydantic import BaseModel

from ..errors import ConsistencyError
from ..util import model_to_dict

_R2 = np.sqrt(2.0)
_R3 = np.sqrt(3.0)
_R6 = np.sqrt(6.0)

# Coefficients in increasing degree.
F_COEFFS = np.array(
    [
        -260 * _R2 - 80 * _R3 + 32 * _R6 + 451,
        21 * _R2 / 2 + 24 * _R3 - 6 * _R6 - 50,
        1181 * _R2 / 8 + 19 * _R3 - 21 * _R6 / 2 - 3683 / 16,
        455 / 8 + 9 * _R6 / 2 - 9 * _R3 - 34 * _R2,
        475 / 16 - 159 * _R2 / 8 + _R3 - _R6 / 2,
        (68 * _R2 - 103) / 8,
        (21 - 14 * _R2) / 16,
    ]
)

G_COEFFS = np.array(
    [
        -136 * _R2 - 64 * _R3 + 16 * _R6 + 321,
        111 * _R2 + 32 * _R3 - 14 * _R6 - 163,
        275 * _R2 / 4 + 12 * _R3 - 7 * _R6 / 2 - 2221 / 16,
        7 * _R6 / 2 - 8 * _R3 - 56 * _R2 + 661 / 8,
        _R3 - 9 * _R2 / 2 - _R6 / 2 + 173 / 16,
        (58 * _R2 - 89) / 8,
        (23 - 16 * _R2) / 16,
    ]
)

H_COEFFS = np.array(
    [
        72 - 36 * _R2,
        103 * _R2 - 182,
        (306 - 191 * _R2) / 2,
        32 * _R2 - 48,
        (10 - 7 * _R2) / 2,
    ]
)


def f_poly(lam):
    return P.polyval(lam, F_COEFFS)


def g_poly(lam):
    return P.polyval(lam, G_COEFFS)


def h_poly(lam):
    return P.polyval(lam, H_COEFFS)


def delta3_pair(lam) -> Dict[str, float]:
    """
    The coefficients of x_v^2 before (f3k, f1) and after (g3k, g1) the pendant
    move for maximum degree 3, as rational functions of lambda in (2.8, 3).
    """
    lam = float(lam)
    f3k = -(4 * lam**5 - 8 * lam**4 - 31 * lam**3 - 4 * lam**2 + 75 * lam + 78) / (
        4 * (lam + 1) * (lam - 2)
    )
    f1 = (lam**3 - 4 * lam**2 - 5 * lam + 6) / (
        (3 - lam) * (lam - 1) ** 2 * (lam - 2)
    )
    g3k = (lam + 2) * (2 * lam**3 - 2 * lam**2 - 3 * lam - 3) / (
        4 * (lam + 1) * (lam - 2)
    )
    g1 = -(2 * lam**5 - 7 * lam**4 + 13 * lam**3 - 23 * lam**2 + 13 * lam - 6) / (
        (lam - 3) ** 2 * (lam + 1) * (lam - 1) ** 2 * (lam - 2)
    )
    return {"f3k": f3k, "f1": f1, "g3k": g3k, "g1": g1}


class SignReport(BaseModel):
    name: str
    signs: List[Tuple[float, int]]
    expected: List[Tuple[float, int]]
    root: float
    value_at_root: float
    interval: Tuple[float, float]
    grid_min: float
    holds: bool

    def to_dict(self) -> dict:
        return model_to_dict(self)


def _sign(v: float) -> int:
    return int(np.sign(v))


def sign_report(
    name: str,
    fn: Callable,
    expected: Sequence[Tuple[float, int]],
    interval: Tuple[float, float],
    root: float = 4.0,
    points: int = 1000,
    root_tol: float = 1e-9,
) -> SignReport:
    """
    Checks the expected signs at sample points, |fn(root)| <= root_tol, and fn > 0
    on `points` equally spaced values of [interval[0], interval[1]).
    """
    lo, hi = interval
    if not lo < hi:
        raise ConsistencyError("Empty sign interval", name=name, interval=interval)
    signs = [(float(t), _sign(fn(t))) for t, _ in expected]
    grid = np.linspace(lo, hi, points, endpoint=False)
    grid_min = float(np.min(fn(grid)))
    at_root = float(fn(root))
    holds = (
        all(s == e for (_, s), (_, e) in zip(signs, expected))
        and abs(at_root) <= root_tol
        and grid_min > 0
    )
    if not holds:
        logger.warning(f"sign pattern of {name} does not hold")
    return SignReport(
        name=name,
        signs=signs,
        expected=[(float(t), int(e)) for t, e in expected],
        root=root,
        value_at_root=at_root,
        interval=(float(lo), float(hi)),
        grid_min=grid_min,
        holds=holds,
    )


class PairReport(BaseModel):
    interval: Tuple[float, float]
    points: int
    max_gap_3k: float
    max_gap_1: float
    holds: bool

    def to_dict(self) -> dict:
        return model_to_dict(self)


def delta3_pair_report(
    interval: Tuple[float, float] = (2.8, 3.0), points: int = 500
) -> PairReport:
    """
    g3k < f3k and g1 < f1 on the open interval, sampled coefficientwise.
    """
    lo, hi = interval
    grid = np.linspace(lo, hi, points + 2)[1:-1]
    gaps_3k = []
    gaps_1 = []
    for lam in grid:
        v = delta3_pair(lam)
        gaps_3k.append(v["g3k"] - v["f3k"])
        gaps_1.append(v["g1"] - v["f1"])
    max_3k = float(max(gaps_3k))
    max_1 = float(max(gaps_1))
    return PairReport(
        interval=(float(lo), float(hi)),
        points=points,
        max_gap_3k=max_3k,
        max_gap_1=max_1,
        holds=max_3k < 0 and max_1 < 0,
    )


def polynomial_suite() -> List[SignReport]:
    """
    The sign certificates of f on [3.5, 4), g on [3.7, 4) and h on [3, 4).
    """
    return [
        sign_report(
            "f",
            f_poly,
            [(0, 1), (2, -1), (3.5, 1), (5, -1), (7, 1)],
            (3.5, 4.0),
        ),
        sign_report(
            "g",
            g_poly,
            [(0, 1), (3, -1), (3.7, 1), (5, -1), (32, 1)],
            (3.7, 4.0),
        ),
        sign_report(
            "h",
            h_poly,
            [(0, 1), (2, -1), (3, 1), (5, -1), (50, 1)],
            (3.0, 4.0),
        ),
    ]
