"""
Numerical reproduction of the asymptotics of Delta - lambda_1: scaled gap tables,
limit checks against the known constants, the path lower bound and the test
vector upper bound on the coalescence families, and the counterexample to the
sqrt(Delta - delta) / (n D) lower bound.
"""

import concurrent.futures
import math
import time
from typing import List, Optional, Sequence

from loguru import logger
import numpy as np
from pydantic import BaseModel

from . import config
from ._internal.logging import log as internal_log
from .constructions import (
    FamilySpec,
    extremal_graph,
    family_spec,
    gap_upper_closed_form,
    gap_upper_rayleigh,
    h_family,
)
from .constructions.families import DELTA3_MIN_N, DELTA4_MIN_N
from .errors import GraphInputError
from .graph import complete_minus_edge, diameter, path_graph
from .spectral import gap_from_perron, perron

# Residual tolerance for large orders; the gap itself is of order 1/n^2.
GAP_TOL = 1e-13


class GapRow(BaseModel):
    n: int
    k: Optional[int]
    delta: int
    delta_min: int
    construction: str
    lambda1: float
    gap: float
    scaled_gap: float
    normalized: float
    upper: Optional[float] = None


def _normalizer(delta: int) -> int:
    """
    Delta - 1 for odd Delta, Delta - 2 for even Delta >= 4, and 1 for paths.
    """
    if delta == 2:
        return 1
    return delta - 1 if delta % 2 == 1 else delta - 2


def _construction(delta: int, n: int):
    if delta == 2:
        return "path", path_graph(n)
    if (delta == 3 and n >= DELTA3_MIN_N) or (delta == 4 and n >= DELTA4_MIN_N):
        return f"extremal_delta{delta}", extremal_graph(delta, n)
    return "h_family", h_family(delta, n)


def gap_row(delta: int, n: int, tol: float = GAP_TOL) -> GapRow:
    """
    One row of the gap table. Paths serve Delta = 2, the extremal graphs Delta = 3
    and 4, and the coalescence family every other Delta. The upper bound is the
    test vector Rayleigh quotient on the coalescence family of the same order,
    which also bounds the extremal graph.
    """
    if delta < 2:
        raise GraphInputError("Gap tables need delta >= 2", delta=delta)
    start = time.perf_counter()
    name, g = _construction(delta, n)
    pd = perron(g, tol=tol)
    internal_log(
        f"gap_row delta={delta} n={n}: {pd.method} solve, {pd.iterations} iterations"
        f" in {time.perf_counter() - start:.3f}s"
    )
    gap = gap_from_perron(g, pd, delta)
    k = None
    upper = None
    if delta >= 3:
        spec = family_spec(delta, n)
        k = spec.k
        if spec.k >= 2:
            upper = gap_upper_rayleigh(spec)
    scaled = n * n * gap
    logger.debug(f"gap_row delta={delta} n={n} {name}: scaled gap {scaled!r}")
    return GapRow(
        n=n,
        k=k,
        delta=delta,
        delta_min=g.min_degree,
        construction=name,
        lambda1=pd.lambda1,
        gap=gap,
        scaled_gap=scaled,
        normalized=scaled / _normalizer(delta),
        upper=upper,
    )


def _gap_row_args(args) -> GapRow:
    return gap_row(*args)


def gap_table(
    delta: int, ns: Sequence[int], tol: float = GAP_TOL, threads: int = 1
) -> List[GapRow]:
    """
    Gap rows for every order in ns, in the given order.
    """
    tasks = [(delta, int(n), tol) for n in ns]
    if threads > 1 and len(tasks) > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=threads) as executor:
            return list(executor.map(_gap_row_args, tasks))
    return [_gap_row_args(t) for t in tasks]


################################################################################
# Limit checks.
################################################################################


def limit_target(delta: int):
    """
    The constant the normalized gap is compared with, and whether it is a limit
    ("limit") or only an upper bound on the limit superior ("limsup").

    Delta = 2 and 4 have limit pi^2 for the scaled gap, Delta = 3 has pi^2 / 2, so
    normalized they read pi^2, pi^2 / 4 and pi^2 / 2. Every other odd Delta has
    lim sup at most pi^2 / 4 after dividing by Delta - 1 and every other even Delta
    at most pi^2 / 2 after dividing by Delta - 2.
    """
    if delta == 2:
        return math.pi**2, "limit"
    target = math.pi**2 / 4 if delta % 2 == 1 else math.pi**2 / 2
    return target, ("limit" if delta in (3, 4) else "limsup")


class LimitReport(BaseModel):
    delta: int
    kind: str
    target: float
    band: float
    rows: List[GapRow]
    rel_errors: List[float]
    monotone: bool
    within_band: bool
    verdict: bool

    def csv_rows(self):
        for row, err in zip(self.rows, self.rel_errors):
            yield (
                row.delta,
                row.n,
                row.k if row.k is not None else "",
                row.lambda1,
                row.gap,
                row.scaled_gap,
                row.normalized,
                self.target,
                err,
            )


LIMIT_CSV_HEADER = (
    "delta",
    "n",
    "k",
    "lambda1",
    "gap",
    "scaled",
    "normalized",
    "target",
    "rel_err",
)


def limit_report(
    delta: int,
    ns: Sequence[int],
    cfg: Optional[config.Config] = None,
    threads: Optional[int] = None,
) -> LimitReport:
    """
    For a limit the verdict needs the last relative error inside the band and the
    errors decreasing along ns. For a lim sup bound it needs the last normalized
    gap at most target * (1 + band).
    """
    cfg = cfg or config.Config()
    threads = cfg.threads if threads is None else threads
    ns = [int(n) for n in ns]
    if len(ns) < 4:
        raise GraphInputError("limit_report needs at least four orders", ns=ns)
    if any(b <= a for a, b in zip(ns, ns[1:])):
        raise GraphInputError("Orders must be strictly increasing", ns=ns)
    target, kind = limit_target(delta)
    band = cfg.band("limit")
    rows = gap_table(delta, ns, threads=threads)
    errors = [abs(r.normalized - target) / target for r in rows]
    monotone = all(b < a for a, b in zip(errors, errors[1:]))
    if kind == "limit":
        within = errors[-1] <= band
        verdict = within and monotone
    else:
        within = rows[-1].normalized <= target * (1 + band)
        verdict = within
    logger.info(
        f"limit delta={delta}: last normalized {rows[-1].normalized!r} vs"
        f" {target!r} ({kind}), verdict {verdict}"
    )
    return LimitReport(
        delta=delta,
        kind=kind,
        target=target,
        band=band,
        rows=rows,
        rel_errors=errors,
        monotone=monotone,
        within_band=within,
        verdict=verdict,
    )


################################################################################
# Bounds on the coalescence family.
################################################################################


def path_lower_bound(spec: FamilySpec) -> float:
    """
    p (Delta - p) pi^2 / ((Delta + 1)^2 (2k + 1)^2), a lower bound on Delta -
    lambda_1 of the coalescence family up to an O(n^-3) term.
    """
    if spec.k < 2:
        raise GraphInputError("The path lower bound needs k >= 2", k=spec.k)
    delta, p, k = spec.delta, spec.p, spec.k
    return p * (delta - p) * math.pi**2 / ((delta + 1) ** 2 * (2 * k + 1) ** 2)


def lower_bound_slack(spec: FamilySpec) -> float:
    return (spec.delta + 1) ** 3 / spec.n**3


class SandwichReport(BaseModel):
    delta: int
    k: int
    n: int
    p: int
    lower: float
    slack: float
    measured: float
    upper: float
    ratio: float
    holds: bool


def sandwich(delta: int, k: int, p: Optional[int] = None) -> SandwichReport:
    """
    lower - slack <= Delta - lambda_1 <= upper on the coalescence family with
    n = k (Delta + 1) + 1, where lower is the path bound and upper the closed form
    of the test vector bound. ratio = upper / lower tends to 1.
    """
    spec = family_spec(delta, p=p, k=k)
    g = h_family(delta, spec.n, p=p)
    measured = gap_from_perron(g, perron(g, tol=GAP_TOL), delta)
    lower = path_lower_bound(spec)
    slack = lower_bound_slack(spec)
    upper = gap_upper_closed_form(spec)
    return SandwichReport(
        delta=delta,
        k=k,
        n=spec.n,
        p=spec.p,
        lower=lower,
        slack=slack,
        measured=measured,
        upper=upper,
        ratio=upper / lower,
        holds=lower - slack <= measured <= upper,
    )


################################################################################
# The complete graph minus an edge.
################################################################################


class KnMinusEdgeGap(BaseModel):
    n: int
    lambda1: float
    closed_form: float
    gap: float
    scaled: float


def kn_minus_edge_lambda(n: int) -> float:
    return (n - 3 + math.sqrt(n * n + 2 * n - 7)) / 2


def kn_minus_edge_gap(n: int) -> KnMinusEdgeGap:
    """
    K_n minus an edge has Delta = n - 1, and n^2 (Delta - lambda_1) / (Delta - 1)
    tends to 2.
    """
    if n < 4:
        raise GraphInputError("K_n minus an edge needs n >= 4", n=n)
    g = complete_minus_edge(n)
    pd = perron(g)
    gap = gap_from_perron(g, pd, n - 1)
    return KnMinusEdgeGap(
        n=n,
        lambda1=pd.lambda1,
        closed_form=kn_minus_edge_lambda(n),
        gap=gap,
        scaled=n * n * gap / (n - 2),
    )


################################################################################
# The counterexample.
################################################################################


class CounterexampleReport(BaseModel):
    delta: int
    delta_min: int
    k: int
    n: int
    diameter: int
    diameter_bound: int
    diameter_bound_holds: bool
    gap: float
    rhs: float
    lower_classical: float
    violated: bool


def cioaba_lower(delta: int, delta_min: int, n: int, diam: int) -> float:
    """
    (sqrt(Delta) - sqrt(delta))^2 / (n D Delta).
    """
    return (math.sqrt(delta) - math.sqrt(delta_min)) ** 2 / (n * diam * delta)


def cioaba_check(delta: int, k: int) -> CounterexampleReport:
    """
    Compares Delta - lambda_1 with sqrt(Delta - delta) / (n D) on the pendant
    variant of the coalescence family with n = k (Delta + 1) + 2, whose minimum
    degree is 1.
    """
    if delta < 3 or delta % 2 == 0:
        raise GraphInputError("The counterexample needs an odd delta >= 3", delta=delta)
    if k < 2:
        raise GraphInputError("The counterexample needs k >= 2", k=k)
    n = k * (delta + 1) + 2
    g = h_family(delta, n)
    delta_min = g.min_degree
    diam = diameter(g)
    gap = gap_from_perron(g, perron(g, tol=GAP_TOL), delta)
    rhs = math.sqrt(delta - delta_min) / (n * diam)
    bound = 3 * k + 2 * delta - 2
    report = CounterexampleReport(
        delta=delta,
        delta_min=delta_min,
        k=k,
        n=n,
        diameter=diam,
        diameter_bound=bound,
        diameter_bound_holds=diam <= bound,
        gap=gap,
        rhs=rhs,
        lower_classical=cioaba_lower(delta, delta_min, n, diam),
        violated=bool(gap < rhs),
    )
    logger.debug(f"cioaba_check delta={delta} k={k}: gap {gap!r} rhs {rhs!r}")
    return report


def find_counterexample(
    delta: int, ks: Sequence[int] = (200, 350, 500)
) -> Optional[CounterexampleReport]:
    """
    The report for the first k in ks that violates the bound, or None.
    """
    for k in ks:
        report = cioaba_check(delta, int(k))
        if report.violated:
            return report
    return None


def scaled_path_gap(n: int) -> float:
    """
    n^2 (2 - 2 cos(pi / (n + 1))), the exact scaled gap of the path.
    """
    return float(n * n * (2 - 2 * np.cos(np.pi / (n + 1))))
