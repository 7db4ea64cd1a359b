"""
The trigonometric test vector on the coalescence families and the upper bounds on
Delta - lambda_1 it yields.

With z_j = sin((2j - 1) pi / 4k) on the cut vertices, a_j on the p clique vertices
next to u_j and b_j on the other Delta - p, the Rayleigh quotient of the Laplacian
plus degree-deficiency form is an upper bound for Delta - lambda_1.
"""

from typing import List, Optional

import numpy as np
from pydantic import BaseModel

from ..errors import GraphInputError
from ..graph import Graph
from .families import FamilySpec, spine_block


class TestVector(BaseModel):
    __test__ = False

    z: List[float]
    a: List[float]
    b: List[float]
    f_value: float


def test_vector(spec: FamilySpec) -> TestVector:
    """
    z_j = sin((2j-1) pi / 4k) for j = 1..k and, for j = 1..k-1,
    a_j = ((p+1) z_j + (Delta-p) z_{j+1}) / (Delta+1),
    b_j = (p z_j + (Delta+1-p) z_{j+1}) / (Delta+1).
    """
    delta, k, p = spec.delta, spec.k, spec.p
    z = np.sin((2 * np.arange(1, k + 1) - 1) * np.pi / (4 * k))
    a = ((p + 1) * z[:-1] + (delta - p) * z[1:]) / (delta + 1)
    b = (p * z[:-1] + (delta + 1 - p) * z[1:]) / (delta + 1)
    return TestVector(z=z.tolist(), a=a.tolist(), b=b.tolist(), f_value=float(z[-1]))


test_vector.__test__ = False  # type: ignore[attr-defined]


def assemble_test_vector(spec: FamilySpec, g: Graph) -> np.ndarray:
    """
    The test vector on every vertex of h_family(spec.delta, spec.n): z on the cuts,
    a and b on the cliques, z_k on F and 0 on the pendant vertex.
    """
    if g.n != spec.n:
        raise GraphInputError("Graph order does not match the family", n=spec.n, got=g.n)
    tv = test_vector(spec)
    y = np.full(g.n, tv.f_value)
    y[: spec.k] = tv.z
    for i in range(1, spec.k):
        block = spine_block(spec, i)
        y[block[: spec.p]] = tv.a[i - 1]
        y[block[spec.p :]] = tv.b[i - 1]
    if spec.has_pendant:
        y[-1] = 0.0
    return y


def _numerator(spec: FamilySpec, tv: TestVector) -> float:
    delta, p = spec.delta, spec.p
    z = np.asarray(tv.z)
    diff_sq = float(np.sum(np.diff(z) ** 2))
    return (delta - p) * z[0] ** 2 + p * (delta - p) / (delta + 1) * diff_sq


def gap_upper_rayleigh(spec: FamilySpec, f_order: Optional[int] = None) -> float:
    """
    The exact Rayleigh quotient of the assembled test vector. Every vertex of F
    other than u_k carries z_k; the pendant of the even-n variant carries 0 and
    adds (z_1 - 0)^2 to the numerator while removing one unit of deficiency at u_1,
    so the numerator is the same in both variants.
    """
    f_order = spec.f_order if f_order is None else f_order
    tv = test_vector(spec)
    z, a, b = np.asarray(tv.z), np.asarray(tv.a), np.asarray(tv.b)
    denominator = (
        float(np.sum(z**2))
        + spec.p * float(np.sum(a**2))
        + (spec.delta - spec.p) * float(np.sum(b**2))
        + (f_order - 1) * tv.f_value**2
    )
    return _numerator(spec, tv) / denominator


def gap_upper_closed_form(spec: FamilySpec) -> float:
    """
    The simplified bound

      [(D-p)(D+1)^2 z_1^2 + p(D-p)(D+1) S1] / [c S2 + 2p(D-p)(D+2) S3]

    with c = D^3 - (2p-3) D^2 + (2p^2-4p+3) D + 4p^2 + 1, evaluated with the closed
    forms S1 = 2(k-1) sin^2(pi/4k), S2 = k/2 and S3 = (k-1)/2 cos(pi/2k). The
    simplification drops nonnegative denominator terms, so this is never below
    gap_upper_rayleigh.
    """
    delta, k, p = spec.delta, spec.k, spec.p
    if k < 2:
        raise GraphInputError("The closed form needs k >= 2", k=k)
    z1 = np.sin(np.pi / (4 * k))
    s1 = 2 * (k - 1) * np.sin(np.pi / (4 * k)) ** 2
    s2 = k / 2
    s3 = (k - 1) / 2 * np.cos(np.pi / (2 * k))
    c = (
        delta**3
        - (2 * p - 3) * delta**2
        + (2 * p * p - 4 * p + 3) * delta
        + 4 * p * p
        + 1
    )
    numerator = (delta - p) * (delta + 1) ** 2 * z1**2 + p * (delta - p) * (
        delta + 1
    ) * s1
    denominator = c * s2 + 2 * p * (delta - p) * (delta + 2) * s3
    return float(numerator / denominator)


class TrigSums(BaseModel):
    """
    Closed forms and direct summations of the sums the bound is built from.
    """

    k: int
    diff_sq: float
    diff_sq_direct: float
    sq: float
    sq_direct: float
    prod: float
    prod_direct: float
    cos_sum_direct: float

    def max_error(self) -> float:
        return max(
            abs(self.diff_sq - self.diff_sq_direct),
            abs(self.sq - self.sq_direct),
            abs(self.prod - self.prod_direct),
            abs(self.cos_sum_direct),
        )


def trig_sums(k: int) -> TrigSums:
    """
    sum_{j<k} (z_j - z_{j+1})^2 = 2(k-1) sin^2(pi/4k), sum_j z_j^2 = k/2,
    sum_{j<k} z_j z_{j+1} = (k-1)/2 cos(pi/2k) and sum_{j<k} cos(pi j/k) = 0.
    """
    if k < 1:
        raise GraphInputError("k must be positive", k=k)
    z = np.sin((2 * np.arange(1, k + 1) - 1) * np.pi / (4 * k))
    return TrigSums(
        k=k,
        diff_sq=2 * (k - 1) * np.sin(np.pi / (4 * k)) ** 2,
        diff_sq_direct=float(np.sum(np.diff(z) ** 2)),
        sq=k / 2,
        sq_direct=float(np.sum(z**2)),
        prod=(k - 1) / 2 * np.cos(np.pi / (2 * k)),
        prod_direct=float(np.sum(z[:-1] * z[1:])),
        cos_sum_direct=float(np.sum(np.cos(np.pi * np.arange(1, k) / k))),
    )
