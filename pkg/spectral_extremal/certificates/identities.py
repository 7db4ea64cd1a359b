"""
Numerical checks of the exact identities behind the replacements.

For a host with a pattern at a known position, the unit Perron vector x of the
host is turned into a test vector y on the replaced graph. The checks confirm
that y has the same energy sum_uv (y_u - y_v)^2 + sum_v (Delta - d(v)) y_v^2 as x,
that ||y||^2 matches its closed form, and that the edgewise squared identities
hold. Since the energy of x is Delta - lambda_1, ||y||^2 > 1 then forces a larger
spectral radius after the replacement.
"""

import math
from typing import Callable, Dict, List, Tuple

from loguru import logger
import numpy as np
from pydantic import BaseModel

from ..errors import GraphInputError
from ..graph import Graph
from ..spectral import deficiency_form, laplacian_form, perron
from .hosts import PatternHost, pattern_hosts
from .patterns import PatternSpec, pattern_by_name
from .polynomials import f_poly, g_poly, h_poly
from .surgery import apply_replacement

_R2 = math.sqrt(2.0)
_R6 = math.sqrt(6.0)

# Perron tolerance of the host; residuals are compared with this scale.
HOST_TOL = 1e-12

# Label classes whose Perron components agree on the hosts.
_CLASSES: Dict[str, Dict[str, Tuple[str, ...]]] = {
    "D2": {"v1": ("v1", "w1"), "v2": ("v2", "w2")},
    "M1": {"a": ("u1", "v1", "w1"), "b": ("v2", "w2"), "c": ("v3", "w3"), "d": ("v4", "w4")},
    "M2": {"a": ("u1", "v1", "w1"), "b": ("v2", "w2"), "c": ("v3", "w3"), "d": ("v4", "w4")},
    "M3": {"a": ("v1", "v2", "w1", "w2"), "b": ("v3", "w3"), "c": ("v4", "w4")},
    "M4": {"a": ("v1", "w1"), "b": ("u1",), "c": ("v2", "w2"), "d": ("v3", "w3")},
}


class IdentityReport(BaseModel):
    name: str
    variant: str
    lambda1: float
    hypothesis_met: bool
    residuals: Dict[str, float]
    max_residual: float
    norm_excess: float
    details: Dict[str, float] = {}


def _energy(g: Graph, y: np.ndarray, delta: int) -> float:
    return laplacian_form(g, y) + deficiency_form(g, y, delta)


def m4_local(lam: float, a: float, d: float) -> float:
    """
    The closed form of the Rayleigh bound on Delta - lambda_1 after the M4
    replacement, in terms of the old lambda_1 and the two port values.
    """
    s = a * a - d * d
    t = 4 - lam
    return t * ((lam - 2) ** 2 + 2 * s * t) / ((lam - 2) ** 2 + 4 * s)


class _Context(object):
    """
    The host, its Perron data and the replaced graph, with label lookups.
    """

    __slots__ = ("spec", "host", "g", "x", "lam", "new", "mapping")

    def __init__(self, host: PatternHost):
        self.spec: PatternSpec = pattern_by_name(host.pattern)
        self.host = host
        self.g = host.graph
        pd = perron(self.g, tol=HOST_TOL)
        self.x = pd.x / np.linalg.norm(pd.x)
        self.lam = pd.lambda1
        self.new = apply_replacement(self.g, host.embedding, self.spec)
        self.mapping = host.mapping

    def value(self, label: str) -> float:
        return float(self.x[self.mapping[self.spec.index(label)]])

    def test_vector(self, values: Dict[str, float]) -> np.ndarray:
        """
        x with the entries of the replacement vertices named in values overwritten.
        """
        y = self.x.copy()
        for label, v in values.items():
            y[self.mapping[self.spec.replacement_index(label)]] = v
        return y

    def classes(self) -> Tuple[Dict[str, float], float]:
        """
        Class representative values and the largest spread inside a class.
        """
        reps = {}
        spread = 0.0
        for name, labels in _CLASSES[self.spec.name].items():
            vals = [self.value(lab) for lab in labels]
            reps[name] = vals[0]
            spread = max(spread, max(vals) - min(vals))
        return reps, spread


def _m1(ctx: _Context):
    lam = ctx.lam
    v, _ = ctx.classes()
    a, b, c, d = v["a"], v["b"], v["c"], v["d"]
    s = (_R2 - 1) * a / 4
    y = s * (-(lam**3) + 5 * lam**2 + (_R2 + 1) ** 2 * lam - 4 * _R2 - 24)
    z = s * (-(lam**3) + (7 + 2 * _R2) * lam**2 - (3 + 4 * _R2) * lam - 32 - 12 * _R2)
    x = y - _R6 * a * (lam - 4) / 4
    vec = ctx.test_vector(
        {"u1": z, "v1": x, "w1": x, "v2": x, "w2": x, "v3": y, "w3": y, "v4": d, "w4": d}
    )
    residuals = {
        "relation_b": b - (lam - 2) * a / 2,
        "relation_c": c - (lam**2 - 2 * lam - 6) * a / 2,
        "relation_d": d - (lam**3 - 3 * lam**2 - 5 * lam + 8) * a / 4,
        "xy": (x - y) ** 2 - 1.5 * (a - b) ** 2,
        "yz": (y - z) ** 2 - (b - c) ** 2,
        "zd": (z - d) ** 2 - 2 * (c - d) ** 2,
    }
    return residuals, {"x": x, "y": y, "z": z}, f_poly(lam) * a * a, vec


def _m2(ctx: _Context):
    lam = ctx.lam
    v, _ = ctx.classes()
    a, b, c, d = v["a"], v["b"], v["c"], v["d"]
    cubic = (1 - _R2) * lam**3
    x = a / 4 * (cubic + (4 * _R2 - 3) * lam**2 + (4 * _R2 - _R6 - 5) * lam - 16 * _R2 + 4 * _R6 + 8)
    y = a / 4 * (cubic + (4 * _R2 - 3) * lam**2 + (4 * _R2 - 5) * lam - 16 * _R2 + 8)
    z = a / 4 * (cubic + (5 * _R2 - 3) * lam**2 + (_R2 - 5) * lam - 20 * _R2 + 8)
    vec = ctx.test_vector(
        {"u1": d, "v1": x, "w1": x, "v2": x, "w2": x, "v3": y, "w3": y, "v4": z, "w4": z}
    )
    residuals = {
        "relation_b": b - (lam - 2) * a / 2,
        "relation_c": c - (lam**2 - 2 * lam - 6) * a / 2,
        "relation_d": d - (lam**3 - 3 * lam**2 - 5 * lam + 8) * a / 4,
        "xy": (x - y) ** 2 - 1.5 * (a - b) ** 2,
        "yz": (y - z) ** 2 - (b - c) ** 2 / 2,
        "zd": (z - d) ** 2 - 2 * (c - d) ** 2,
    }
    return residuals, {"x": x, "y": y, "z": z}, g_poly(lam) * a * a, vec


def _m3(ctx: _Context):
    lam = ctx.lam
    v, _ = ctx.classes()
    a, b, c = v["a"], v["b"], v["c"]
    s = (_R2 - 1) / 2 * a
    x = s * (-(lam**2) + 5 * lam + 2 * _R2 - 2)
    y = s * (-(lam**2) + (2 * _R2 + 7) * lam - 10 - 6 * _R2)
    vec = ctx.test_vector(
        {"v1": x, "w1": x, "v2": x, "w2": x, "u1": y, "v3": y, "w3": y, "u2": c}
    )
    residuals = {
        "relation_b": b - (lam - 3) * a,
        "relation_c": c - (lam**2 - 3 * lam - 2) * a / 2,
        "xy": (x - y) ** 2 - (a - b) ** 2,
        "yc": (y - c) ** 2 - 2 * (b - c) ** 2,
    }
    return residuals, {"x": x, "y": y}, h_poly(lam) * a * a, vec


def _d2(ctx: _Context):
    xo, xu, xv = ctx.value("o"), ctx.value("u1"), ctx.value("v1")
    vec = ctx.test_vector({"u1": xo, "v1": xo + xv - xu})
    return {}, {"x_o": xo, "x_u1": xu, "x_v1": xv}, 2 * (xo - xu) * (xo + xv), vec


_BUILDERS: Dict[str, Callable] = {"D2": _d2, "M1": _m1, "M2": _m2, "M3": _m3}


def _m4(ctx: _Context) -> IdentityReport:
    lam = ctx.lam
    v, spread = ctx.classes()
    a, d = v["a"], v["d"]
    m = np.array([[lam - 1, -1.0], [-2.0, lam]])
    x, y = np.linalg.solve(m, np.array([2 * a, 2 * d]))
    vec = ctx.test_vector({"u1": y, "v2": x, "w2": x})
    norm2 = float(vec @ vec)
    bound = _energy(ctx.new, vec, 4) / norm2
    closed = m4_local(lam, a, d)
    residuals = {
        "x_closed_form": x - 2 * (lam * a + d) / (lam * lam - lam - 2),
        "y_closed_form": y - (4 * a + 2 * (lam - 1) * d) / (lam * lam - lam - 2),
        "norm": norm2 - (1 + 2 * x * x + y * y - v["b"] ** 2 - 2 * v["c"] ** 2),
        "bound": bound - closed,
    }
    return _report(ctx, residuals, spread, norm2 - 1, {"a": a, "d": d, "bound": bound})


def _report(
    ctx: _Context,
    residuals: Dict[str, float],
    spread: float,
    excess: float,
    details: Dict[str, float],
) -> IdentityReport:
    residuals = {k: abs(float(r)) for k, r in residuals.items()}
    worst = max(residuals.values()) if residuals else 0.0
    details = {k: float(val) for k, val in details.items()}
    details["class_spread"] = spread
    details["lambda_after"] = perron(ctx.new, tol=HOST_TOL).lambda1
    report = IdentityReport(
        name=ctx.spec.name,
        variant=ctx.host.variant,
        lambda1=ctx.lam,
        hypothesis_met=spread <= 1e-8,
        residuals=residuals,
        max_residual=worst,
        norm_excess=float(excess),
        details=details,
    )
    logger.debug(
        f"identities {report.name}/{report.variant}: max residual {worst:.3e},"
        f" norm excess {report.norm_excess:.3e}"
    )
    return report


def quadratic_form_identities(host: PatternHost) -> IdentityReport:
    """
    Evaluates the identities of host.pattern (D2, M1, M2, M3 or M4) at the Perron
    vector of the host.
    """
    if host.pattern not in _CLASSES:
        raise GraphInputError("No identities for pattern", name=host.pattern)
    ctx = _Context(host)
    if host.pattern == "M4":
        return _m4(ctx)
    residuals, details, norm_term, vec = _BUILDERS[host.pattern](ctx)
    _, spread = ctx.classes()
    delta = ctx.spec.delta
    norm2 = float(vec @ vec)
    residuals["energy"] = _energy(ctx.new, vec, delta) - _energy(ctx.g, ctx.x, delta)
    residuals["norm"] = norm2 - 1 - norm_term
    return _report(ctx, residuals, spread, norm2 - 1, details)


def identity_suite() -> List[IdentityReport]:
    """
    Every identity check on every host of its pattern.
    """
    reports = []
    for name in _CLASSES:
        for host in pattern_hosts(name):
            reports.append(quadratic_form_identities(host))
    return reports
