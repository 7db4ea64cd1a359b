"""
Simple undirected graphs on dense vertex indices 0..n-1.

A Graph is immutable once built; every operation that "changes" a graph returns a
new one. Besides the basic accessors this module holds the graph file formats
(graph6 and plain edge lists), connectivity and distances, coalescence, canonical
forms for small graphs and induced pattern embeddings.
"""

from collections import deque
from pathlib import Path
from typing import (
    Callable,
    Dict,
    Iterable,
    List,
    Mapping,
    Optional,
    Sequence,
    Set,
    Tuple,
    Union,
)

import numpy as np
from pydantic import BaseModel
import scipy.sparse

from .errors import CapabilityError, DomainError, GraphInputError

Edge = Tuple[int, int]

# graphs with at most this many vertices get per-vertex neighbor bitmasks.
BITSET_MAX_N = 64
# canonical forms are only defined up to this order.
CANONICAL_MAX_N = 12
# largest pattern accepted by find_induced_embedding.
PATTERN_MAX_N = 10


class Graph(object):
    """
    A simple undirected graph. Vertices are 0..n-1 and `adj[v]` is the sorted tuple
    of neighbors of v. Use `graph_from_edges` to build one from an edge list.
    """

    __slots__ = ("_n", "_adj", "_nbr_sets", "_masks")

    def __init__(self, n: int, adj: Sequence[Iterable[int]]):
        self._n = n
        self._adj = tuple(tuple(sorted(a)) for a in adj)
        self._nbr_sets = None
        self._masks = None

    @property
    def n(self) -> int:
        return self._n

    @property
    def adj(self) -> Tuple[Tuple[int, ...], ...]:
        return self._adj

    @property
    def m(self) -> int:
        return sum(len(a) for a in self._adj) // 2

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return self._adj[v]

    def neighbor_set(self, v: int) -> frozenset:
        if self._nbr_sets is None:
            self._nbr_sets = tuple(frozenset(a) for a in self._adj)
        return self._nbr_sets[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> List[int]:
        return [len(a) for a in self._adj]

    @property
    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    @property
    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbor_set(u)

    def edges(self) -> List[Edge]:
        return [(u, v) for u in range(self._n) for v in self._adj[u] if u < v]

    @property
    def masks(self) -> Tuple[int, ...]:
        """
        Per-vertex neighbor bitmasks, only available for n <= 64.
        """
        if self._n > BITSET_MAX_N:
            raise CapabilityError(
                "Bitset adjacency is only available for small graphs",
                n=self._n,
                limit=BITSET_MAX_N,
            )
        if self._masks is None:
            self._masks = tuple(sum(1 << w for w in a) for a in self._adj)
        return self._masks

    def add_edges(self, edges: Iterable[Edge]) -> "Graph":
        return graph_from_edges(self._n, self.edges() + list(edges))

    def remove_edges(self, edges: Iterable[Edge]) -> "Graph":
        gone = {(min(u, v), max(u, v)) for u, v in edges}
        return graph_from_edges(self._n, [e for e in self.edges() if e not in gone])

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """
        Returns the graph in which vertex v is renamed perm[v].
        """
        if sorted(perm) != list(range(self._n)):
            raise GraphInputError("relabel needs a permutation of 0..n-1", n=self._n)
        return graph_from_edges(self._n, [(perm[u], perm[v]) for u, v in self.edges()])

    def induced_subgraph(self, vertices: Sequence[int]) -> "Graph":
        """
        The subgraph induced by `vertices`; vertices[i] becomes vertex i.
        """
        index = {v: i for i, v in enumerate(vertices)}
        return graph_from_edges(
            len(vertices),
            [
                (index[u], index[v])
                for u in vertices
                for v in self._adj[u]
                if v in index and u < v
            ],
        )

    def to_sparse(self, dtype=np.float64) -> scipy.sparse.csr_matrix:
        rows = np.repeat(np.arange(self._n), [len(a) for a in self._adj])
        cols = np.fromiter(
            (w for a in self._adj for w in a), dtype=np.int64, count=len(rows)
        )
        data = np.ones(len(rows), dtype=dtype)
        return scipy.sparse.csr_matrix((data, (rows, cols)), shape=(self._n, self._n))

    def to_dense(self, dtype=np.float64) -> np.ndarray:
        a = np.zeros((self._n, self._n), dtype=dtype)
        for u, v in self.edges():
            a[u, v] = a[v, u] = 1
        return a

    def to_networkx(self):
        import networkx as nx

        nxg = nx.Graph()
        nxg.add_nodes_from(range(self._n))
        nxg.add_edges_from(self.edges())
        return nxg

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self._n == other._n
            and self._adj == other._adj
        )

    def __hash__(self) -> int:
        return hash((self._n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self.m})"


def graph_from_edges(n: int, edges: Iterable[Edge]) -> Graph:
    """
    Builds a graph on n vertices with the given edges. Duplicate edges (in either
    orientation) are collapsed.
    """
    if n < 0:
        raise GraphInputError("Vertex count must be non-negative", n=n)
    nbrs: List[Set[int]] = [set() for _ in range(n)]
    for e in edges:
        u, v = int(e[0]), int(e[1])
        if not (0 <= u < n and 0 <= v < n):
            raise GraphInputError("Edge endpoint out of range", edge=(u, v), n=n)
        if u == v:
            raise GraphInputError("Self-loops are not allowed", edge=(u, v))
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(n, nbrs)


def path_graph(n: int) -> Graph:
    return graph_from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphInputError("A cycle needs at least 3 vertices", n=n)
    return graph_from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return graph_from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star_graph(leaves: int) -> Graph:
    return graph_from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_minus_edge(n: int) -> Graph:
    """
    K_n with the edge {n-2, n-1} removed.
    """
    return complete_graph(n).remove_edges([(n - 2, n - 1)])


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    shift = g1.n
    return graph_from_edges(
        g1.n + g2.n, g1.edges() + [(u + shift, v + shift) for u, v in g2.edges()]
    )


def add_pendant(g: Graph, v: int) -> Graph:
    """
    Appends a new vertex n joined to v.
    """
    return graph_from_edges(g.n + 1, g.edges() + [(v, g.n)])


################################################################################
# Degrees, connectivity and distances.
################################################################################


class DegreeProfile(BaseModel):
    """
    The degree sequence in nonincreasing order, together with its extremes.
    """

    sorted_degrees: List[int]
    max_deg: int
    min_deg: int
    is_regular: bool

    def __str__(self) -> str:
        runs: List[str] = []
        for d in sorted(set(self.sorted_degrees), reverse=True):
            c = self.sorted_degrees.count(d)
            runs.append(f"{d}^{c}" if c > 1 else str(d))
        return "(" + ",".join(runs) + ")"


def degree_profile(g: Graph) -> DegreeProfile:
    degrees = sorted(g.degrees(), reverse=True)
    max_deg = degrees[0] if degrees else 0
    min_deg = degrees[-1] if degrees else 0
    return DegreeProfile(
        sorted_degrees=degrees,
        max_deg=max_deg,
        min_deg=min_deg,
        is_regular=max_deg == min_deg,
    )


def bfs_distances(g: Graph, source: int) -> List[int]:
    """
    Distances from source; unreachable vertices get -1.
    """
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    adj = g.adj
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in adj[u]:
            if dist[w] < 0:
                dist[w] = du
                queue.append(w)
    return dist


def components(g: Graph) -> List[List[int]]:
    seen = [False] * g.n
    result = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = [v for v, d in enumerate(bfs_distances(g, s)) if d >= 0]
        for v in comp:
            seen[v] = True
        result.append(comp)
    return result


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    return min(bfs_distances(g, 0)) >= 0


# Above this order the diameter is computed with networkx's eccentricity bounds
# instead of one BFS per vertex.
_DIAMETER_BFS_MAX_N = 300


def diameter(g: Graph) -> int:
    if g.n == 0 or not is_connected(g):
        raise DomainError("The diameter is only defined for connected graphs", n=g.n)
    if g.n <= _DIAMETER_BFS_MAX_N:
        return max(max(bfs_distances(g, s)) for s in range(g.n))
    import networkx as nx

    return int(nx.diameter(g.to_networkx(), usebounds=True))


def coalesce_map(n1: int, v1: int, n2: int, v2: int) -> List[int]:
    """
    Where the vertices of the second graph land in coalesce(g1, v1, g2, v2): v2 is
    merged into v1, the other vertices follow g1's in their original order.
    """
    mapping = []
    nxt = n1
    for w in range(n2):
        if w == v2:
            mapping.append(v1)
        else:
            mapping.append(nxt)
            nxt += 1
    return mapping


def coalesce(g1: Graph, v1: int, g2: Graph, v2: int) -> Graph:
    """
    Glues g1 and g2 by identifying v1 with v2.
    """
    if not (0 <= v1 < g1.n and 0 <= v2 < g2.n):
        raise GraphInputError("Coalescence vertex out of range", v1=v1, v2=v2)
    mapping = coalesce_map(g1.n, v1, g2.n, v2)
    return graph_from_edges(
        g1.n + g2.n - 1,
        g1.edges() + [(mapping[a], mapping[b]) for a, b in g2.edges()],
    )


################################################################################
# Graph file formats.
################################################################################


def _graph6_size_prefix(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    if n <= 68719476735:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise GraphInputError("Graph too large for graph6", n=n)


def to_graph6(g: Graph) -> str:
    """
    Encodes g in graph6: the size prefix followed by the upper triangle of the
    adjacency matrix, column by column, packed six bits per printable byte.
    """
    n = g.n
    rows, cols = np.tril_indices(n, -1)
    bits = np.zeros(len(rows), dtype=np.uint8)
    if len(rows):
        a = g.to_dense(dtype=np.uint8)
        # (row, col) with row > col ordered by row then col is (i=col, j=row)
        # ordered by j then i.
        bits = a[cols, rows]
    pad = (-len(bits)) % 6
    bits = np.concatenate([bits, np.zeros(pad, dtype=np.uint8)])
    weights = np.array([32, 16, 8, 4, 2, 1], dtype=np.uint16)
    body = (bits.reshape(-1, 6).astype(np.uint16) @ weights + 63).astype(np.uint8)
    return (_graph6_size_prefix(n) + body.tobytes()).decode("ascii")


def from_graph6(s: str) -> Graph:
    data = s.strip().encode("ascii")
    if data.startswith(b">>graph6<<"):
        data = data[len(b">>graph6<<") :]
    if not data or any(c < 63 or c > 126 for c in data):
        raise GraphInputError("Invalid graph6 string", value=s[:40])
    if data[0] != 126:
        n, body = data[0] - 63, data[1:]
    elif len(data) > 1 and data[1] != 126:
        if len(data) < 4:
            raise GraphInputError("Truncated graph6 size prefix", value=s[:40])
        n = sum((data[1 + i] - 63) << s_ for i, s_ in enumerate((12, 6, 0)))
        body = data[4:]
    else:
        if len(data) < 8:
            raise GraphInputError("Truncated graph6 size prefix", value=s[:40])
        n = sum(
            (data[2 + i] - 63) << s_ for i, s_ in enumerate((30, 24, 18, 12, 6, 0))
        )
        body = data[8:]
    total = n * (n - 1) // 2
    if len(body) != (total + 5) // 6:
        raise GraphInputError(
            "graph6 body length does not match the vertex count",
            n=n,
            expected=(total + 5) // 6,
            got=len(body),
        )
    values = np.frombuffer(body, dtype=np.uint8).astype(np.int64) - 63
    bits = ((values[:, None] >> np.arange(5, -1, -1)) & 1).reshape(-1)[:total]
    rows, cols = np.tril_indices(n, -1)
    on = np.nonzero(bits)[0]
    return graph_from_edges(n, zip(cols[on].tolist(), rows[on].tolist()))


def to_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def from_edge_list(text: str) -> Graph:
    lines = [line.split() for line in text.splitlines() if line.strip()]
    if not lines or len(lines[0]) != 2:
        raise GraphInputError("Edge list must start with a line 'n m'")
    try:
        n, m = int(lines[0][0]), int(lines[0][1])
        edges = [(int(a), int(b)) for a, b in lines[1:]]
    except ValueError as e:
        raise GraphInputError(f"Malformed edge list: {e}") from e
    if len(edges) != m:
        raise GraphInputError(
            "Edge count does not match the header", expected=m, got=len(edges)
        )
    return graph_from_edges(n, edges)


GRAPH6_SUFFIXES = (".g6", ".graph6")


def graph_format_for(path: Union[str, Path], fmt: Optional[str] = None) -> str:
    if fmt:
        if fmt not in ("graph6", "edges"):
            raise GraphInputError("Unknown graph format", format=fmt)
        return fmt
    return "graph6" if Path(path).suffix in GRAPH6_SUFFIXES else "edges"


def read_graph(path: Union[str, Path], fmt: Optional[str] = None) -> Graph:
    with open(path) as f:
        text = f.read()
    if graph_format_for(path, fmt) == "graph6":
        return from_graph6(text.splitlines()[0] if text.strip() else "")
    return from_edge_list(text)


def write_graph(g: Graph, path: Union[str, Path], fmt: Optional[str] = None) -> None:
    if graph_format_for(path, fmt) == "graph6":
        text = to_graph6(g) + "\n"
    else:
        text = to_edge_list(g)
    with open(path, "w", newline="\n") as f:
        f.write(text)


################################################################################
# Canonical forms.
################################################################################

CanonicalCode = bytes


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _refine(masks: Sequence[int], cells: List[List[int]]) -> List[List[int]]:
    """
    Splits cells by the number of neighbors each vertex has in every cell, until
    stable. Sub-cells are ordered by that signature, so the result only depends on
    the isomorphism class of (graph, ordered partition).
    """
    while True:
        cell_masks = [sum(1 << v for v in c) for c in cells]
        new_cells: List[List[int]] = []
        for c in cells:
            if len(c) == 1:
                new_cells.append(c)
                continue
            groups: Dict[Tuple[int, ...], List[int]] = {}
            for v in c:
                sig = tuple(_popcount(masks[v] & cm) for cm in cell_masks)
                groups.setdefault(sig, []).append(v)
            for sig in sorted(groups):
                new_cells.append(groups[sig])
        if len(new_cells) == len(cells):
            return new_cells
        cells = new_cells


def _code_for_order(masks: Sequence[int], order: Sequence[int]) -> int:
    n = len(order)
    code = 0
    for j in range(1, n):
        mj = masks[order[j]]
        for i in range(j):
            code = (code << 1) | ((mj >> order[i]) & 1)
    return code


def _are_twins(masks: Sequence[int], u: int, v: int) -> bool:
    return masks[u] & ~(1 << v) == masks[v] & ~(1 << u)


def canonical_form(g: Graph) -> CanonicalCode:
    """
    A byte string that is equal for two graphs iff they are isomorphic.

    Individualization and refinement: the degree partition is refined to an
    equitable ordered partition, then vertices of the first non-singleton cell are
    individualized in turn. Every discrete partition yields a vertex order and
    thereby an adjacency bit string; the largest one is the code. Twins (vertices
    with the same neighborhood apart from each other) give identical subtrees, so
    only one of each twin class is explored.
    """
    n = g.n
    if n > CANONICAL_MAX_N:
        raise CapabilityError(
            "Canonical forms are only supported for small graphs",
            n=n,
            limit=CANONICAL_MAX_N,
        )
    masks = g.masks
    best = -1

    def search(cells: List[List[int]]):
        nonlocal best
        cells = _refine(masks, cells)
        if len(cells) == n:
            best = max(best, _code_for_order(masks, [c[0] for c in cells]))
            return
        idx = next(i for i, c in enumerate(cells) if len(c) > 1)
        tried: List[int] = []
        for v in cells[idx]:
            if any(_are_twins(masks, v, t) for t in tried):
                continue
            tried.append(v)
            rest = [w for w in cells[idx] if w != v]
            search(cells[:idx] + [[v], rest] + cells[idx + 1 :])

    if n:
        search([list(range(n))])
    best = max(best, 0)
    nbytes = max(1, (n * (n - 1) // 2 + 7) // 8)
    return bytes([n]) + best.to_bytes(nbytes, "big")


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)


################################################################################
# Induced pattern embeddings.
################################################################################


class Embedding(BaseModel):
    """
    An injective map from pattern vertices to host vertices: pattern vertex i is
    host vertex mapping[i]. `ports` lists the pattern vertices that have host
    edges leaving the image of the pattern.
    """

    mapping: List[int]
    ports: List[int]

    def outside_neighbors(self, host: Graph, i: int) -> List[int]:
        image = set(self.mapping)
        return [w for w in host.neighbors(self.mapping[i]) if w not in image]


def find_induced_embedding(
    g: Graph,
    pattern: Graph,
    boundary: Optional[Iterable[int]] = None,
    host_degrees: Optional[Mapping[int, int]] = None,
    accept: Optional[Callable[[List[int]], bool]] = None,
) -> Optional[Embedding]:
    """
    Finds the lexicographically first injective map of pattern into g that
    preserves adjacency and non-adjacency on every pattern pair.

    With a non-empty boundary, pattern vertices outside it must be closed: their
    host neighbors all lie in the image. An empty or missing boundary means a plain
    induced-subgraph search. host_degrees optionally pins the host degree of the
    image of given pattern vertices. `accept`, if given, is called on every complete
    mapping and the search goes on past the ones it rejects.
    """
    k = pattern.n
    if k > PATTERN_MAX_N:
        raise CapabilityError(
            "Patterns are limited in size", n=k, limit=PATTERN_MAX_N
        )
    if k == 0 or k > g.n:
        return None
    boundary_set = set(boundary) if boundary else None
    closed = [boundary_set is not None and i not in boundary_set for i in range(k)]
    pattern_degree = pattern.degrees()
    wanted_degree = dict(host_degrees or {})
    earlier_nbrs = [[j for j in pattern.neighbors(i) if j < i] for i in range(k)]
    earlier_non = [
        [j for j in range(i) if not pattern.has_edge(i, j)] for i in range(k)
    ]
    mapping = [-1] * k
    used: Set[int] = set()

    def degree_ok(i: int, v: int) -> bool:
        d = g.degree(v)
        if d < pattern_degree[i]:
            return False
        if i in wanted_degree and d != wanted_degree[i]:
            return False
        if closed[i] and d != pattern_degree[i]:
            return False
        return True

    def candidates(i: int) -> Iterable[int]:
        if earlier_nbrs[i]:
            pool = set(g.neighbor_set(mapping[earlier_nbrs[i][0]]))
            for j in earlier_nbrs[i][1:]:
                pool &= g.neighbor_set(mapping[j])
            return sorted(pool)
        return range(g.n)

    def extend(i: int) -> bool:
        if i == k:
            return accept is None or accept(list(mapping))
        for v in candidates(i):
            if v in used or not degree_ok(i, v):
                continue
            nv = g.neighbor_set(v)
            if any(mapping[j] in nv for j in earlier_non[i]):
                continue
            mapping[i] = v
            used.add(v)
            if extend(i + 1):
                return True
            used.discard(v)
        mapping[i] = -1
        return False

    if not extend(0):
        return None
    image = set(mapping)
    ports = [
        i
        for i in range(k)
        if any(w not in image for w in g.neighbors(mapping[i]))
    ]
    return Embedding(mapping=list(mapping), ports=ports)
