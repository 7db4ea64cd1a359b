"""
Exhaustive ground truth for small orders: the largest spectral radius among all
connected nonregular graphs with n vertices and maximum degree Delta, all graphs
attaining it, and an audit of the structural lemmas on them.

Graphs are generated with a breadth-first labeling rooted at a vertex of minimum
degree: vertex i is processed in turn and decides its edges to the discovered but
unprocessed vertices and how many new vertices it discovers. Every connected
graph has such a labeling, so the search is complete; isomorphic copies are only
removed from the final witness list.

For the maximum query only saturated graphs matter: if two nonadjacent vertices of
degree below Delta can be joined without making the graph regular, the joined
graph is in the class and has a larger spectral radius.
"""

import concurrent.futures
from itertools import combinations
import math
import time
from typing import Dict, Iterator, List, Optional, Sequence, Set, Tuple

from loguru import logger
import numpy as np
from pydantic import BaseModel

from . import config
from ._internal.logging import log as internal_log
from .errors import CapabilityError, GraphInputError
from .graph import (
    CANONICAL_MAX_N,
    CanonicalCode,
    Graph,
    canonical_form,
    degree_profile,
    graph_from_edges,
    is_connected,
    to_graph6,
)
from .spectral import PerronData, PerronExtremes, perron, perron_extremes

# leaves are scored with a batched dense eigensolve of this many matrices.
_BATCH = 4096
# the search is split into independent tasks after this many processed vertices.
_PREFIX_DEPTH = 2
# near-ties are re-solved at this residual tolerance.
_RESOLVE_TOL = 1e-13

# (adjacency masks, degrees, next vertex to process, next free label, root degree)
_State = Tuple[Tuple[int, ...], Tuple[int, ...], int, int, int]


class Witness(BaseModel):
    code: str
    graph6: str
    edges: List[Tuple[int, int]]
    degree_profile: str
    lambda1: float

    def graph(self, n: int) -> Graph:
        return graph_from_edges(n, self.edges)


class ExtremalReport(BaseModel):
    n: int
    delta: int
    lambda_max: float
    witnesses: List[Witness]
    count_enumerated: int
    forced: bool = False

    def witness_graphs(self) -> List[Graph]:
        return [w.graph(self.n) for w in self.witnesses]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "delta": self.delta,
            "lambda_max": self.lambda_max,
            "count_enumerated": self.count_enumerated,
            "forced": self.forced,
            "witnesses": [
                {
                    "code": w.code,
                    "graph6": w.graph6,
                    "degree_profile": w.degree_profile,
                    "lambda1": w.lambda1,
                }
                for w in self.witnesses
            ],
        }


def estimate_cost(n: int, delta: int) -> int:
    """
    A crude upper bound on the number of candidate edge sets: all ways to choose
    floor(n Delta / 2) edges out of C(n, 2).
    """
    return math.comb(n * (n - 1) // 2, n * delta // 2)


################################################################################
# The breadth-first search tree.
################################################################################


def _root_state(n: int) -> _State:
    return (tuple([0] * n), tuple([0] * n), 0, 1, 0)


def _finished_pair_prunes(
    masks: Sequence[int], deg: Sequence[int], upto: int, delta: int
) -> bool:
    """
    Whether the processed vertices 0..upto already rule out saturation: their
    total deficiency is at least 3 and two of the deficient ones are nonadjacent.
    """
    deficient = [v for v in range(upto + 1) if deg[v] < delta]
    if sum(delta - deg[v] for v in deficient) < 3:
        return False
    for a, b in combinations(deficient, 2):
        if not (masks[a] >> b) & 1:
            return True
    return False


def _saturated(masks: Sequence[int], deg: Sequence[int], delta: int) -> bool:
    deficient = [v for v in range(len(deg)) if deg[v] < delta]
    if sum(delta - deg[v] for v in deficient) <= 2:
        return True
    return all((masks[a] >> b) & 1 for a, b in combinations(deficient, 2))


def _children(n: int, delta: int, state: _State, saturate: bool) -> Iterator[_State]:
    masks, deg, i, nxt, root_deg = state
    room = delta - deg[i]
    open_vertices = [j for j in range(i + 1, nxt) if deg[j] < delta]
    for size in range(min(room, len(open_vertices)) + 1):
        for chosen in combinations(open_vertices, size):
            for new in range(min(room - size, n - nxt) + 1):
                final = deg[i] + size + new
                if i == 0:
                    if final == 0 or final > delta - 1:
                        continue
                    new_root = final
                elif final < root_deg:
                    continue
                else:
                    new_root = root_deg
                new_nxt = nxt + new
                if new_nxt == i + 1 and new_nxt < n:
                    continue
                m = list(masks)
                d = list(deg)
                for j in list(chosen) + list(range(nxt, new_nxt)):
                    m[i] |= 1 << j
                    m[j] |= 1 << i
                    d[j] += 1
                d[i] = final
                if saturate and _finished_pair_prunes(m, d, i, delta):
                    continue
                yield (tuple(m), tuple(d), i + 1, new_nxt, new_root)


def _leaves(
    n: int, delta: int, state: _State, saturate: bool
) -> Iterator[Tuple[int, ...]]:
    masks, deg, i, _, _ = state
    if i == n:
        if max(deg) != delta:
            return
        if saturate and not _saturated(masks, deg, delta):
            return
        yield masks
        return
    for child in _children(n, delta, state, saturate):
        yield from _leaves(n, delta, child, saturate)


def _prefix_states(n: int, delta: int, saturate: bool) -> List[_State]:
    states = [_root_state(n)]
    for _ in range(min(_PREFIX_DEPTH, n - 1)):
        states = [c for s in states for c in _children(n, delta, s, saturate)]
    return states


def _masks_to_dense(batch: Sequence[Tuple[int, ...]], n: int) -> np.ndarray:
    arr = np.asarray(batch, dtype=np.int64)[:, :, None]
    return ((arr >> np.arange(n, dtype=np.int64)) & 1).astype(np.float64)


def _run_task(
    args: Tuple[int, int, _State, bool, float]
) -> Tuple[float, List[Tuple[int, ...]], int]:
    """
    Exhausts one subtree. Returns its largest spectral radius, every leaf within
    tie_tol of it and the number of leaves scored.
    """
    n, delta, state, saturate, tie_tol = args
    start = time.perf_counter()
    best = -np.inf
    candidates: List[Tuple[Tuple[int, ...], float]] = []
    count = 0
    batch: List[Tuple[int, ...]] = []

    def flush():
        nonlocal best, candidates
        lams = np.linalg.eigvalsh(_masks_to_dense(batch, n))[:, -1]
        top = float(lams.max())
        if top > best:
            best = top
            candidates = [(m, lam) for m, lam in candidates if lam >= best - tie_tol]
        for m, lam in zip(batch, lams):
            if lam >= best - tie_tol:
                candidates.append((m, float(lam)))
        batch.clear()

    for leaf in _leaves(n, delta, state, saturate):
        batch.append(leaf)
        count += 1
        if len(batch) >= _BATCH:
            flush()
    if batch:
        flush()
    internal_log(
        f"oracle task n={n} delta={delta} prefix degrees {state[1]}: {count} leaves"
        f" in {time.perf_counter() - start:.3f}s"
    )
    return best, [m for m, _ in candidates], count


def _masks_to_graph(masks: Sequence[int]) -> Graph:
    n = len(masks)
    return graph_from_edges(
        n, [(u, v) for u in range(n) for v in range(u + 1, n) if (masks[u] >> v) & 1]
    )


def enumerate_class(n: int, delta: int) -> Iterator[Graph]:
    """
    Every connected nonregular graph with n vertices and maximum degree delta, in
    breadth-first labelings rooted at a minimum degree vertex. Isomorphic graphs
    appear once per such labeling.
    """
    _check_order(n, delta)
    for masks in _leaves(n, delta, _root_state(n), saturate=False):
        yield _masks_to_graph(masks)


def naive_class_codes(n: int, delta: int) -> Set[CanonicalCode]:
    """
    Canonical codes of the class by brute force over all 2^C(n,2) edge subsets.
    """
    if n > 6:
        raise CapabilityError("Brute force is limited to n <= 6", n=n)
    pairs = list(combinations(range(n), 2))
    codes = set()
    for bits in range(1 << len(pairs)):
        g = graph_from_edges(n, [pairs[i] for i in range(len(pairs)) if bits >> i & 1])
        profile = degree_profile(g)
        if profile.max_deg != delta or profile.is_regular or not is_connected(g):
            continue
        codes.add(canonical_form(g))
    return codes


def _check_order(n: int, delta: int) -> None:
    if delta < 2:
        raise GraphInputError("The class is empty for delta < 2", delta=delta)
    if n < delta + 1:
        raise GraphInputError("The class needs n >= delta + 1", n=n, delta=delta)
    if n > CANONICAL_MAX_N:
        raise CapabilityError(
            "The oracle is limited by the canonical form size",
            n=n,
            limit=CANONICAL_MAX_N,
        )


def enumerate_extremal(
    n: int,
    delta: int,
    cfg: Optional[config.Config] = None,
    force: bool = False,
    threads: Optional[int] = None,
) -> ExtremalReport:
    """
    Finds lambda_1(n, Delta) and all extremal graphs up to isomorphism.

    Orders above the configured cap need force=True. The result does not depend on
    the number of worker processes.
    """
    cfg = cfg or config.Config()
    threads = cfg.threads if threads is None else threads
    _check_order(n, delta)
    cap = cfg.oracle_cap(delta)
    if n > cap:
        if not force:
            raise CapabilityError(
                "Order above the oracle cap; pass force to run anyway",
                n=n,
                delta=delta,
                cap=cap,
                estimated_cost=estimate_cost(n, delta),
            )
        logger.warning(
            f"Running the oracle at n={n} above its cap {cap}; up to"
            f" {estimate_cost(n, delta)} candidate edge sets."
        )
    tasks = [
        (n, delta, s, True, cfg.tie_tol) for s in _prefix_states(n, delta, True)
    ]
    logger.debug(f"oracle n={n} delta={delta}: {len(tasks)} tasks, {threads} workers")
    if threads > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=threads) as executor:
            results = list(executor.map(_run_task, tasks))
    else:
        results = [_run_task(t) for t in tasks]

    best = max((r[0] for r in results), default=-np.inf)
    count = sum(r[2] for r in results)
    if not np.isfinite(best):
        raise CapabilityError("The class is empty", n=n, delta=delta)
    near: List[Tuple[int, ...]] = []
    for local_best, cands, _ in results:
        if local_best >= best - cfg.tie_tol:
            near.extend(cands)

    resolved: Dict[CanonicalCode, Tuple[Graph, float]] = {}
    for masks in near:
        g = _masks_to_graph(masks)
        code = canonical_form(g)
        if code not in resolved:
            resolved[code] = (g, perron(g, tol=_RESOLVE_TOL).lambda1)
    lambda_max = max(lam for _, lam in resolved.values())
    witnesses = [
        Witness(
            code=code.hex(),
            graph6=to_graph6(g),
            edges=g.edges(),
            degree_profile=str(degree_profile(g)),
            lambda1=lam,
        )
        for code, (g, lam) in sorted(resolved.items())
        if lam >= lambda_max - cfg.tie_tol
    ]
    logger.info(
        f"oracle n={n} delta={delta}: lambda_max={lambda_max!r},"
        f" {len(witnesses)} witness(es), {count} leaves"
    )
    return ExtremalReport(
        n=n,
        delta=delta,
        lambda_max=lambda_max,
        witnesses=witnesses,
        count_enumerated=count,
        forced=n > cap,
    )


################################################################################
# Structural lemmas.
################################################################################


class LemmaAudit(BaseModel):
    """
    S is the set of vertices of degree below Delta and T the rest. The flags
    record whether S induces a clique, whether |S| <= Delta - 1, whether
    x_u <= x_v exactly when N_T(u) is contained in N_T(v) for u, v in S, whether
    every component on S is below every component on T, and whether removing the
    k vertices with the largest Perron components leaves a connected graph.
    """

    s_is_clique: bool
    s_size_ok: bool
    neighborhoods_nested: bool
    s_below_t: bool
    deletion_connected: Dict[int, bool]
    details: List[str] = []

    def all_hold(self) -> bool:
        return (
            self.s_is_clique
            and self.s_size_ok
            and self.neighborhoods_nested
            and self.s_below_t
            and all(self.deletion_connected.values())
        )


def verify_structure_lemmas(
    g: Graph, pd: PerronData, delta: Optional[int] = None, tol: float = 1e-9
) -> LemmaAudit:
    delta = g.max_degree if delta is None else delta
    x = pd.x
    degrees = g.degrees()
    s = [v for v in range(g.n) if degrees[v] < delta]
    t = [v for v in range(g.n) if degrees[v] >= delta]
    t_set = set(t)
    details: List[str] = []

    missing = [(u, v) for u, v in combinations(s, 2) if not g.has_edge(u, v)]
    if missing:
        details.append(f"S is not a clique: missing {missing}")
    if len(s) > delta - 1:
        details.append(f"|S| = {len(s)} exceeds delta - 1 = {delta - 1}")

    nested = True
    for u in s:
        for v in s:
            if u == v:
                continue
            below = x[u] <= x[v] + tol
            contained = (g.neighbor_set(u) & t_set) <= (g.neighbor_set(v) & t_set)
            if below != contained:
                nested = False
                details.append(f"x_{u} <= x_{v} is {below} but N_T inclusion is {contained}")

    s_below_t = True
    if s and t:
        s_max, t_min = max(x[s]), min(x[t])
        s_below_t = bool(s_max < t_min)
        if not s_below_t:
            details.append(f"max over S {s_max!r} is not below min over T {t_min!r}")

    order = [int(v) for v in np.argsort(-x, kind="stable")]
    deletion = {}
    for k in (1, 2, 3):
        if k >= g.n:
            deletion[k] = True
            continue
        keep = sorted(order[k:])
        deletion[k] = is_connected(g.induced_subgraph(keep))
        if not deletion[k]:
            details.append(f"removing the top {k} Perron vertices disconnects g")

    return LemmaAudit(
        s_is_clique=not missing,
        s_size_ok=len(s) <= delta - 1,
        neighborhoods_nested=nested,
        s_below_t=s_below_t,
        deletion_connected=deletion,
        details=details,
    )


class AuditReport(BaseModel):
    n: int
    delta: int
    in_class: bool
    lambda1: float
    lemmas: LemmaAudit
    extremes: PerronExtremes


def audit_report(g: Graph, delta: Optional[int] = None) -> AuditReport:
    """
    The lemma audit of g together with the Perron extremes checks.
    """
    from .switching import in_class

    delta = g.max_degree if delta is None else delta
    pd = perron(g)
    return AuditReport(
        n=g.n,
        delta=delta,
        in_class=in_class(g, delta),
        lambda1=pd.lambda1,
        lemmas=verify_structure_lemmas(g, pd, delta),
        extremes=perron_extremes(g, pd, delta),
    )
