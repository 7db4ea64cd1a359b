"""
Finding forbidden patterns in a host and replacing them.
"""

from typing import List, Optional, Tuple

from loguru import logger
from pydantic import BaseModel

from ..errors import ConsistencyError, GraphInputError
from ..graph import Embedding, Graph, bfs_distances, find_induced_embedding, graph_from_edges
from ..spectral import perron
from .patterns import PatternSpec, forbidden_patterns


def _search_order(pattern: Graph) -> List[int]:
    """
    Pattern vertices in an order where every vertex after the first of its
    component has an earlier neighbor.
    """
    order: List[int] = []
    seen = set()
    for root in range(pattern.n):
        if root in seen:
            continue
        dist = bfs_distances(pattern, root)
        layer = sorted((d, v) for v, d in enumerate(dist) if d >= 0)
        for _, v in layer:
            seen.add(v)
            order.append(v)
    return order


def is_admissible(g: Graph, emb: Embedding, spec: PatternSpec) -> bool:
    """
    Whether an induced copy of spec.pattern sits in g the way the replacement
    argument needs: twin ports share their outside neighbors, and the surgery
    yields a simple graph.
    """
    for a, b in spec.twins:
        outside_a = set(emb.outside_neighbors(g, spec.index(a)))
        if outside_a != set(emb.outside_neighbors(g, spec.index(b))):
            return False
    if spec.replacement is None:
        return True
    try:
        _replaced_edges(g, emb, spec)
    except ConsistencyError:
        return False
    return True


def embed_pattern(g: Graph, spec: PatternSpec) -> Optional[Embedding]:
    """
    The first induced embedding of spec.pattern in g in which the closed vertices
    have no outside neighbors, every port has exactly its stubs and the copy is
    admissible.
    """
    order = _search_order(spec.pattern)
    position = {v: i for i, v in enumerate(order)}
    permuted = spec.pattern.relabel([position[v] for v in range(spec.n)])
    wanted = spec.host_degrees()

    def unpermute(found: List[int]) -> List[int]:
        return [found[position[i]] for i in range(spec.n)]

    def accept(found: List[int]) -> bool:
        return is_admissible(g, Embedding(mapping=unpermute(found), ports=[]), spec)

    emb = find_induced_embedding(
        g,
        permuted,
        boundary=[position[i] for i in spec.boundary],
        host_degrees={position[i]: d for i, d in wanted.items()},
        accept=accept,
    )
    if emb is None:
        return None
    return Embedding(mapping=unpermute(emb.mapping), ports=sorted(order[p] for p in emb.ports))


class Violation(BaseModel):
    pattern: str
    mapping: List[int]


def audit_forbidden(g: Graph, delta: int) -> List[Violation]:
    """
    One entry per forbidden pattern of the given maximum degree that occurs in g.
    """
    violations = []
    for spec in forbidden_patterns(delta):
        emb = embed_pattern(g, spec)
        if emb is not None:
            logger.debug(f"found {spec.name} at {emb.mapping}")
            violations.append(Violation(pattern=spec.name, mapping=emb.mapping))
    return violations


def _check_embedding(host: Graph, emb: Embedding, spec: PatternSpec) -> None:
    if len(emb.mapping) != spec.n or len(set(emb.mapping)) != spec.n:
        raise GraphInputError("Embedding does not match the pattern order", name=spec.name)
    if any(not 0 <= v < host.n for v in emb.mapping):
        raise GraphInputError("Embedding leaves the host", name=spec.name)
    for i in range(spec.n):
        for j in range(i + 1, spec.n):
            if spec.pattern.has_edge(i, j) != host.has_edge(emb.mapping[i], emb.mapping[j]):
                raise GraphInputError(
                    "Embedding is not induced", name=spec.name, pair=(i, j)
                )


def _replaced_edges(host: Graph, emb: Embedding, spec: PatternSpec) -> List[Tuple[int, int]]:
    if len(spec.stubs) != len(spec.replacement_stubs):
        raise ConsistencyError("Port arity mismatch", name=spec.name)

    outside = []
    taken = {}
    for label in spec.stubs:
        i = spec.index(label)
        if i not in taken:
            taken[i] = list(emb.outside_neighbors(host, i))
        if not taken[i]:
            raise ConsistencyError(
                "Port has fewer outside edges than stubs", name=spec.name, port=label
            )
        outside.append(taken[i].pop(0))
    if any(rest for rest in taken.values()):
        raise ConsistencyError("Port has more outside edges than stubs", name=spec.name)
    closed = [i for i in range(spec.n) if i not in taken]
    for i in closed:
        if emb.outside_neighbors(host, i):
            raise ConsistencyError(
                "Closed pattern vertex has outside edges", name=spec.name, vertex=i
            )

    image = set(emb.mapping)
    edges = [(u, v) for u, v in host.edges() if u not in image and v not in image]
    edges.extend(
        (emb.mapping[i], emb.mapping[j]) for i, j in spec.replacement.edges()
    )
    for label, w in zip(spec.replacement_stubs, outside):
        edges.append((emb.mapping[spec.replacement_index(label)], w))
    normalized = {(min(u, v), max(u, v)) for u, v in edges}
    if len(normalized) != len(edges):
        raise ConsistencyError("Surgery produced a multi-edge", name=spec.name)
    return edges


def apply_replacement(host: Graph, emb: Embedding, spec: PatternSpec) -> Graph:
    """
    Replaces the image of spec.pattern by spec.replacement. Host vertex
    emb.mapping[i] takes the role of replacement vertex i; the outside edges of the
    ports are listed in stub order (each port's outside neighbors ascending) and
    the k-th one is re-attached at the k-th replacement stub.
    """
    if spec.replacement is None:
        raise GraphInputError(f"Pattern {spec.name} has no replacement")
    _check_embedding(host, emb, spec)
    return graph_from_edges(host.n, _replaced_edges(host, emb, spec))


def replacement_delta(host: Graph, emb: Embedding, spec: PatternSpec) -> float:
    """
    lambda_1 after the replacement minus lambda_1 before it.
    """
    new = apply_replacement(host, emb, spec)
    before = perron(host).lambda1
    after = perron(new).lambda1
    logger.debug(f"{spec.name}: lambda_1 {before!r} -> {after!r}")
    return after - before
