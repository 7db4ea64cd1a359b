"""
Rotations, local switchings and a hill-climbing search built from them.

A rotation replaces the edge uv by uw; it raises the spectral radius whenever
x_w >= x_v for the Perron vector x. A local switching LS(s, t, v, u) replaces the
edges uv and st by sv and tu; it keeps every degree and does not lower the
spectral radius when (x_s - x_u)(x_v - x_t) >= 0.
"""

from typing import Iterator, List, Optional, Union

from loguru import logger
import numpy as np
from pydantic import BaseModel

from . import config
from .errors import GraphInputError
from .graph import Graph, degree_profile, is_connected
from .spectral import PerronData, perron, spectral_radius_dense

# candidate graphs up to this order are scored with a dense eigensolve.
_DENSE_SCORE_MAX_N = 200


class SwitchMove(BaseModel):
    s: int
    t: int
    v: int
    u: int


class RotationMove(BaseModel):
    u: int
    v: int
    w: int


Move = Union[SwitchMove, RotationMove]


def check_switch(g: Graph, m: SwitchMove) -> None:
    """
    Raises GraphInputError unless uv and st are edges, sv and tu are non-edges and
    the four vertices are distinct.
    """
    vertices = (m.s, m.t, m.v, m.u)
    if any(not 0 <= x < g.n for x in vertices):
        raise GraphInputError("Switch vertex out of range", move=vertices)
    if len(set(vertices)) != 4:
        raise GraphInputError("Switch vertices must be distinct", move=vertices)
    if not g.has_edge(m.u, m.v) or not g.has_edge(m.s, m.t):
        raise GraphInputError("uv and st must be edges", move=vertices)
    if g.has_edge(m.s, m.v) or g.has_edge(m.t, m.u):
        raise GraphInputError("sv and tu must not be edges", move=vertices)


def check_rotation(g: Graph, m: RotationMove) -> None:
    vertices = (m.u, m.v, m.w)
    if any(not 0 <= x < g.n for x in vertices):
        raise GraphInputError("Rotation vertex out of range", move=vertices)
    if len(set(vertices)) != 3:
        raise GraphInputError("Rotation vertices must be distinct", move=vertices)
    if not g.has_edge(m.u, m.v):
        raise GraphInputError("uv must be an edge", move=vertices)
    if g.has_edge(m.u, m.w):
        raise GraphInputError("uw must not be an edge", move=vertices)


def rotate(g: Graph, m: RotationMove) -> Graph:
    """
    G + uw - uv.
    """
    check_rotation(g, m)
    return g.remove_edges([(m.u, m.v)]).add_edges([(m.u, m.w)])


def local_switch(g: Graph, m: SwitchMove) -> Graph:
    """
    LS(s, t, v, u): removes uv and st, adds sv and tu. Connectivity is not
    preserved in general.
    """
    check_switch(g, m)
    return g.remove_edges([(m.u, m.v), (m.s, m.t)]).add_edges(
        [(m.s, m.v), (m.t, m.u)]
    )


def is_proper_switch(
    pd: PerronData, m: SwitchMove, tie_tol: Optional[float] = None
) -> bool:
    """
    True iff (x_s - x_u)(x_v - x_t) >= -tie_tol. Exact ties count as proper.
    """
    tie_tol = config.DEFAULT_TIE_TOL if tie_tol is None else tie_tol
    x = pd.x
    return bool((x[m.s] - x[m.u]) * (x[m.v] - x[m.t]) >= -tie_tol)


def is_proper_rotation(
    pd: PerronData, m: RotationMove, tie_tol: Optional[float] = None
) -> bool:
    tie_tol = config.DEFAULT_TIE_TOL if tie_tol is None else tie_tol
    return bool(pd.x[m.w] - pd.x[m.v] >= -tie_tol)


def valid_rotations(g: Graph) -> Iterator[RotationMove]:
    """
    All admissible rotations in lexicographic (u, v, w) order.
    """
    for u in range(g.n):
        nu = g.neighbor_set(u)
        for v in g.neighbors(u):
            for w in range(g.n):
                if w != u and w != v and w not in nu:
                    yield RotationMove(u=u, v=v, w=w)


def valid_switches(g: Graph) -> Iterator[SwitchMove]:
    """
    All admissible local switchings, each listed once, in lexicographic order of
    the removed edge pair.
    """
    edges = g.edges()
    for i, (a, b) in enumerate(edges):
        for u, v in ((a, b), (b, a)):
            for s, t in edges[i + 1 :]:
                if len({s, t, u, v}) < 4:
                    continue
                if g.has_edge(s, v) or g.has_edge(t, u):
                    continue
                yield SwitchMove(s=s, t=t, v=v, u=u)


def random_switch(
    g: Graph, rng: np.random.Generator, max_tries: int = 1000
) -> Optional[SwitchMove]:
    edges = g.edges()
    if len(edges) < 2:
        return None
    for _ in range(max_tries):
        i, j = rng.choice(len(edges), size=2, replace=False)
        u, v = edges[i]
        s, t = edges[j]
        if rng.random() < 0.5:
            u, v = v, u
        if rng.random() < 0.5:
            s, t = t, s
        if len({s, t, u, v}) < 4 or g.has_edge(s, v) or g.has_edge(t, u):
            continue
        return SwitchMove(s=int(s), t=int(t), v=int(v), u=int(u))
    return None


def random_rotation(
    g: Graph, rng: np.random.Generator, max_tries: int = 1000
) -> Optional[RotationMove]:
    edges = g.edges()
    if not edges or g.n < 3:
        return None
    for _ in range(max_tries):
        u, v = edges[int(rng.integers(len(edges)))]
        if rng.random() < 0.5:
            u, v = v, u
        w = int(rng.integers(g.n))
        if w in (u, v) or g.has_edge(u, w):
            continue
        return RotationMove(u=int(u), v=int(v), w=w)
    return None


################################################################################
# Hill climbing within the class of connected nonregular graphs of maximum
# degree Delta.
################################################################################


class TraceStep(BaseModel):
    kind: str
    vertices: List[int]
    lambda1: float


class SearchTrace(BaseModel):
    start_lambda1: float
    steps: List[TraceStep] = []


def in_class(g: Graph, delta: int) -> bool:
    """
    Whether g is connected, nonregular and of maximum degree delta.
    """
    if g.n == 0:
        return False
    profile = degree_profile(g)
    return profile.max_deg == delta and not profile.is_regular and is_connected(g)


def _score(g: Graph) -> float:
    if g.n <= _DENSE_SCORE_MAX_N:
        return spectral_radius_dense(g)
    return perron(g).lambda1


def _moves(g: Graph, pd: PerronData, tie_tol: float) -> Iterator[tuple]:
    # rotations first: they are the only moves that change the degree sequence.
    for r in valid_rotations(g):
        if is_proper_rotation(pd, r, tie_tol):
            yield "rotate", r
    for s in valid_switches(g):
        if is_proper_switch(pd, s, tie_tol):
            yield "switch", s


def improving_search(
    g: Graph,
    delta: int,
    budget: int,
    tie_tol: Optional[float] = None,
    lambda_tol: Optional[float] = None,
    trace: bool = False,
):
    """
    Greedy hill climbing: repeatedly applies the first admissible rotation or
    proper local switching (in lexicographic order, rotations first) that keeps the
    graph connected, nonregular and of maximum degree delta and raises the
    spectral radius by more than lambda_tol. Stops after `budget` moves or at a
    local optimum.

    Returns the final graph, or (graph, SearchTrace) when trace is True.
    """
    tie_tol = config.DEFAULT_TIE_TOL if tie_tol is None else tie_tol
    lambda_tol = config.DEFAULT_LAMBDA_TOL if lambda_tol is None else lambda_tol
    if budget < 0:
        raise GraphInputError("Budget must be non-negative", budget=budget)
    if not in_class(g, delta):
        raise GraphInputError(
            "improving_search needs a connected nonregular graph of maximum degree"
            " delta",
            delta=delta,
            max_degree=g.max_degree,
        )
    current = g
    current_lambda = _score(g)
    history = SearchTrace(start_lambda1=current_lambda)
    for step in range(budget):
        pd = perron(current)
        improved = False
        for kind, move in _moves(current, pd, tie_tol):
            candidate = (
                rotate(current, move) if kind == "rotate" else local_switch(current, move)
            )
            if not in_class(candidate, delta):
                continue
            lam = _score(candidate)
            if lam > current_lambda + lambda_tol:
                logger.trace(f"step {step}: {kind} {move} -> {lam}")
                history.steps.append(
                    TraceStep(kind=kind, vertices=list(move_vertices(move)), lambda1=lam)
                )
                current, current_lambda = candidate, lam
                improved = True
                break
        if not improved:
            logger.debug(f"improving_search reached a local optimum after {step} moves")
            break
    return (current, history) if trace else current


def move_vertices(move: Move) -> tuple:
    if isinstance(move, SwitchMove):
        return (move.s, move.t, move.v, move.u)
    return (move.u, move.v, move.w)
