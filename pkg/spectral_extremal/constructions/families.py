"""
Builders for the graph families: the unique extremal graphs for maximum degree 3
and 4, the spine G^p_{Delta,k-1} of k cut vertices threaded through k-1 copies of
K_Delta, connected realizations of degree sequences, and the coalescence families
that witness the upper bounds on Delta - lambda_1 for every Delta.
"""

from typing import List, Optional, Sequence, Tuple

from loguru import logger
import networkx as nx
from pydantic import BaseModel

from ..config import compatible_field_validator
from ..errors import CapabilityError, ConsistencyError, GraphInputError
from ..graph import (
    Graph,
    add_pendant,
    bfs_distances,
    coalesce,
    components,
    graph_from_edges,
)
from ..switching import SwitchMove, local_switch
from .gadgets import DELTA4_CAP_BY_RESIDUE, Gadget, block_g1, block_g2, block_g3, block_h

# Smallest orders for which the extremal constructions are proven.
DELTA3_MIN_N = 8
DELTA4_MIN_N = 10


class FamilySpec(BaseModel):
    """
    n = k (Delta + 1) + alpha with 1 <= alpha <= Delta + 1, and the attachment split
    p of the spine.
    """

    delta: int
    n: int
    k: int
    alpha: int
    p: int

    @compatible_field_validator("delta")
    def _delta_at_least_three(cls, value):
        if value < 3:
            raise ValueError(f"delta must be at least 3, got {value}")
        return value

    @compatible_field_validator("k")
    def _positive_k(cls, value):
        if value < 1:
            raise ValueError(f"k must be at least 1, got {value}")
        return value

    @property
    def has_pendant(self) -> bool:
        """
        Odd Delta with even n uses the variant with a pendant vertex at u_1.
        """
        return self.delta % 2 == 1 and self.n % 2 == 0

    @property
    def spine_order(self) -> int:
        return self.k * (self.delta + 1) - self.delta

    @property
    def f_order(self) -> int:
        """
        Order of the near-regular graph F glued at u_k.
        """
        if self.has_pendant:
            return self.delta + self.alpha
        return self.delta + self.alpha + 1


def default_split(delta: int) -> int:
    return delta - 1 if delta % 2 == 1 else delta - 2


def family_spec(
    delta: int,
    n: Optional[int] = None,
    p: Optional[int] = None,
    k: Optional[int] = None,
) -> FamilySpec:
    """
    Derives (k, alpha, p) from (Delta, n). When n is omitted, k must be given and
    alpha is taken as 1. alpha = Delta + 1 when Delta + 1 divides n, which drops one
    block from the spine.
    """
    if delta < 3:
        raise GraphInputError("Family parameters need delta >= 3", delta=delta)
    if n is None:
        if k is None:
            raise GraphInputError("family_spec needs either n or k")
        alpha = 1
        n = k * (delta + 1) + alpha
    else:
        alpha = n % (delta + 1) or delta + 1
        k = (n - alpha) // (delta + 1)
    if k < 1:
        raise GraphInputError("n is too small for this family", delta=delta, n=n)
    p = default_split(delta) if p is None else p
    if not 1 <= p <= delta - 1:
        raise GraphInputError("p must satisfy 1 <= p <= delta - 1", p=p, delta=delta)
    return FamilySpec(delta=delta, n=n, k=k, alpha=alpha, p=p)


################################################################################
# The extremal families for Delta = 3 and Delta = 4.
################################################################################


def extend_chain(
    n: int, edges: List[Tuple[int, int]], cut: int, unit: Gadget, count: int
) -> Tuple[int, int]:
    """
    Appends `count` copies of unit to the edge list, the first merged at `cut`.
    New vertices are numbered from n. Returns the new order and the last cut.
    """
    for _ in range(count):
        local = {}
        for label in unit.labels:
            if label == unit.attach:
                local[label] = cut
            else:
                local[label] = n
                n += 1
        edges.extend((local[a], local[b]) for a, b in unit.label_edges)
        cut = local[unit.cut]
    return n, cut


def chain(cap: Gadget, unit: Gadget, count: int, pendant: bool = False) -> Graph:
    """
    cap followed by `count` copies of unit, each merged at its attach vertex with
    the cut of the previous piece; optionally a pendant vertex at the last cut.
    Vertices are numbered in the order they are appended.
    """
    edges = [(cap.index(a), cap.index(b)) for a, b in cap.label_edges]
    n, cut = extend_chain(cap.n, edges, cap.cut_index, unit, count)
    g = graph_from_edges(n, edges)
    return add_pendant(g, cut) if pendant else g


def extremal_delta3(n: int) -> Graph:
    """
    The unique connected nonregular graph of order n and maximum degree 3 with
    the largest spectral radius. Its degree sequence is (3, ..., 3, 2) for odd n and
    (3, ..., 3, 1) for even n.
    """
    if n < DELTA3_MIN_N:
        raise CapabilityError(
            "The maximum degree 3 construction needs n >= 8", n=n, minimum=DELTA3_MIN_N
        )
    r = n % 4
    cap = block_g1() if r in (1, 2) else block_g2()
    pendant = n % 2 == 0
    count, rest = divmod(n - cap.n - int(pendant), 4)
    if rest:
        raise ConsistencyError("Cap does not match n mod 4", n=n, cap=cap.name)
    return chain(cap, block_g3(), count, pendant)


def extremal_delta4(n: int) -> Graph:
    """
    The unique connected nonregular graph of order n and maximum degree 4 with
    the largest spectral radius; its degree sequence is (4, ..., 4, 2).
    """
    if n < DELTA4_MIN_N:
        raise CapabilityError(
            "The maximum degree 4 construction needs n >= 10",
            n=n,
            minimum=DELTA4_MIN_N,
        )
    cap = DELTA4_CAP_BY_RESIDUE[n % 5]
    count, rest = divmod(n - cap.n, 5)
    if rest:
        raise ConsistencyError("Cap does not match n mod 5", n=n, cap=cap.name)
    return chain(cap, block_h(6), count)


def extremal_graph(delta: int, n: int) -> Graph:
    if delta == 3:
        return extremal_delta3(n)
    if delta == 4:
        return extremal_delta4(n)
    raise CapabilityError("Extremal graphs are only known for delta 3 and 4", delta=delta)


################################################################################
# The spine and the coalescence families.
################################################################################


def spine_block(spec: FamilySpec, i: int) -> List[int]:
    """
    The Delta vertices v_1^(i), ..., v_Delta^(i) of the i-th clique, 1 <= i <= k-1.
    """
    start = spec.k + (i - 1) * spec.delta
    return list(range(start, start + spec.delta))


def g_family(spec: FamilySpec) -> Graph:
    """
    G^p_{Delta,k-1}: cut vertices u_1..u_k (indices 0..k-1) and cliques
    G_1..G_{k-1} on Delta vertices each. u_i is joined to v_1..v_p of G_i and to
    v_{p+1}..v_Delta of G_{i-1}.
    """
    delta, k, p = spec.delta, spec.k, spec.p
    if k < 2:
        raise GraphInputError("The spine needs k >= 2", k=k)
    if not 1 <= p <= delta - 1:
        raise GraphInputError("p must satisfy 1 <= p <= delta - 1", p=p, delta=delta)
    edges: List[Tuple[int, int]] = []
    for i in range(1, k):
        block = spine_block(spec, i)
        edges.extend(
            (block[a], block[b]) for a in range(delta) for b in range(a + 1, delta)
        )
        edges.extend((i - 1, v) for v in block[:p])
        edges.extend((i, v) for v in block[p:])
    return graph_from_edges(spec.spine_order, edges)


def is_graphic(seq: Sequence[int]) -> bool:
    """
    Erdos-Gallai test.
    """
    seq = [int(d) for d in seq]
    if any(d < 0 for d in seq):
        return False
    return bool(nx.is_graphical(seq, method="eg"))


def havel_hakimi(seq: Sequence[int]) -> Graph:
    """
    The deterministic Havel-Hakimi realization in which vertex i has degree
    seq[i]. The result may be disconnected.
    """
    seq = [int(d) for d in seq]
    if not is_graphic(seq):
        raise GraphInputError("Degree sequence is not graphic", seq=seq)
    positions = [i for i, d in enumerate(seq) if d > 0]
    realization = nx.havel_hakimi_graph([seq[i] for i in positions])
    g = graph_from_edges(
        len(seq), [(positions[a], positions[b]) for a, b in realization.edges()]
    )
    if g.degrees() != seq:
        raise ConsistencyError("Havel-Hakimi realization has the wrong degrees")
    return g


def _non_bridge_edge(g: Graph, component: Sequence[int]) -> Optional[Tuple[int, int]]:
    members = set(component)
    for u, v in g.edges():
        if u in members and bfs_distances(g.remove_edges([(u, v)]), u)[v] >= 0:
            return u, v
    return None


def realize_connected(seq: Sequence[int]) -> Graph:
    """
    A connected graph with degree sequence seq, vertex i having degree seq[i].

    Starts from the Havel-Hakimi realization and joins components with local
    switchings: an edge u1v1 on a cycle of one component and any edge u2v2 of
    another are replaced by u1u2 and v1v2. This needs every degree to be at least
    one and at most one degree to be below two.
    """
    seq = [int(d) for d in seq]
    if not is_graphic(seq):
        raise GraphInputError("Degree sequence is not graphic", seq=seq)
    ordered = sorted(seq, reverse=True)
    if len(seq) > 1 and (ordered[-1] < 1 or (len(seq) > 2 and ordered[-2] < 2)):
        raise CapabilityError(
            "A connected realization is only guaranteed when d_(n-1) >= 2 and d_n >= 1",
            seq=seq,
        )
    g = havel_hakimi(seq)
    comps = components(g)
    while len(comps) > 1:
        first = None
        for c in comps:
            first = _non_bridge_edge(g, c)
            if first is not None:
                break
        if first is None:
            raise ConsistencyError("No component has a cycle", seq=seq)
        u1, v1 = first
        other = set(next(c for c in comps if u1 not in c))
        u2, v2 = next(e for e in g.edges() if e[0] in other)
        g = local_switch(g, SwitchMove(s=v2, t=u2, v=v1, u=u1))
        logger.trace(f"joined components with {(u1, v1)} and {(u2, v2)}")
        comps = components(g)
    return g


def near_regular_sequence(delta: int, order: int, deficit: int) -> List[int]:
    """
    (Delta, ..., Delta, Delta - deficit) on `order` vertices, the degree sequence of
    the members of T^(deficit).
    """
    return [delta] * (order - 1) + [delta - deficit]


def h_family(delta: int, n: int, p: Optional[int] = None) -> Graph:
    """
    The coalescence of G^p_{Delta,k-1} and a near-regular F at u_k:

    * odd Delta, odd n: p = Delta - 1 and F has degrees (Delta, ..., Delta, Delta - 1)
      on Delta + alpha + 1 vertices;
    * odd Delta, even n: as above with F on Delta + alpha vertices and a pendant
      vertex at u_1;
    * even Delta: p = Delta - 2 and F has degrees (Delta, ..., Delta, Delta - 2) on
      Delta + alpha + 1 vertices.

    A different split p of the spine may be given; F then has degrees
    (Delta, ..., Delta, p), which needs an even degree sum.

    Vertex order: u_1..u_k, the cliques, F without its glued vertex, the pendant.
    """
    spec = family_spec(delta, n, p=p)
    if spec.k < 2:
        raise GraphInputError("n is too small for the coalescence family", n=n, k=spec.k)
    # u_k already carries Delta - p spine edges
    deficit = delta - spec.p
    f = realize_connected(near_regular_sequence(delta, spec.f_order, deficit))
    g = coalesce(g_family(spec), spec.k - 1, f, f.n - 1)
    if spec.has_pendant:
        g = add_pendant(g, 0)
    if g.n != n:
        raise ConsistencyError("Coalescence family has the wrong order", n=n, got=g.n)
    return g
