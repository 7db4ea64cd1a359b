"""
Small host graphs that contain a forbidden pattern at a known position.

A host is the pattern with its stubs completed by connectors that lead either to
a closed near-regular end ("heavy") or to a chain of units ending in a vertex of
degree Delta - 2 for Delta = 4 and Delta - 1 for Delta = 3 ("light"). Connectors
treat the v- and w-labelled ports alike, so the hosts are symmetric under the
swap of the two labels and equal-label classes get equal Perron components.
"""

from typing import Dict, List, Sequence, Tuple

from pydantic import BaseModel

from ..constructions import block_g1, block_g3, block_h, extend_chain
from ..errors import GraphInputError
from ..graph import Embedding, Graph, graph_from_edges
from .patterns import PatternSpec, pattern_by_name

# Units on the light side.
LIGHT_UNITS = {3: 8, 4: 6}

# Which stubs go to which side, per pattern.
_SIDES: Dict[str, Tuple[Tuple[str, ...], ...]] = {
    "D2": (("v0", "w0"), ("u2",)),
    "D3": (("v3",),),
    "M1": (("v4", "w4"),),
    "M2": (("v4", "w4"),),
    "M3": (("v4", "w4"),),
    "M4": (("v1", "w1"), ("v3", "w3")),
    "M5": (("v1", "w1"), ("v4", "w4")),
    "M6": (("v1", "w1"), ("v3", "w3")),
    "M7": (("v1", "w1"), ("v3", "w3")),
}


class PatternHost(BaseModel):
    """
    `variant` names the end each side of the pattern leads to, left side first.
    """

    pattern: str
    variant: str
    n: int
    edges: List[Tuple[int, int]]
    mapping: List[int]

    @property
    def graph(self) -> Graph:
        return graph_from_edges(self.n, self.edges)

    @property
    def embedding(self) -> Embedding:
        g = self.graph
        image = set(self.mapping)
        ports = [
            i
            for i, v in enumerate(self.mapping)
            if any(w not in image for w in g.neighbors(v))
        ]
        return Embedding(mapping=list(self.mapping), ports=ports)


class _Builder(object):
    def __init__(self):
        self.n = 0
        self.edges: List[Tuple[int, int]] = []

    def add(self, count: int) -> List[int]:
        new = list(range(self.n, self.n + count))
        self.n += count
        return new

    def join(self, u: int, v: int) -> None:
        self.edges.append((u, v))


def _heavy_end(b: _Builder, cut: int, delta: int) -> None:
    """
    Closes a cut with two free slots by K_{Delta+1} minus an edge.
    """
    k = b.add(delta + 1)
    for i in range(len(k)):
        for j in range(i + 1, len(k)):
            if (i, j) != (len(k) - 2, len(k) - 1):
                b.join(k[i], k[j])
    b.join(cut, k[-2])
    b.join(cut, k[-1])


def _light_end(b: _Builder, cut: int, delta: int) -> None:
    unit = block_h(6) if delta == 4 else block_g3()
    b.n, _ = extend_chain(b.n, b.edges, cut, unit, LIGHT_UNITS[delta])


def _end(b: _Builder, cut: int, delta: int, kind: str) -> None:
    if kind == "heavy":
        _heavy_end(b, cut, delta)
    else:
        _light_end(b, cut, delta)


def _side_delta4(b: _Builder, ports: Sequence[int], stubs: int, kind: str) -> None:
    """
    Two ports with two stubs each share two new neighbors q1 ~ q2 that meet at a
    cut. Two ports with one stub each get private neighbors q1, q2 inside a K4
    {q1, q2, r1, r2} whose r-vertices meet at a cut.
    """
    p1, p2 = ports
    if stubs == 2:
        q1, q2, cut = b.add(3)
        for q in (q1, q2):
            b.join(p1, q)
            b.join(p2, q)
            b.join(q, cut)
        b.join(q1, q2)
    else:
        q1, q2, r1, r2, cut = b.add(5)
        b.join(p1, q1)
        b.join(p2, q2)
        for u, v in ((q1, q2), (q1, r1), (q1, r2), (q2, r1), (q2, r2), (r1, r2)):
            b.join(u, v)
        b.join(r1, cut)
        b.join(r2, cut)
    _end(b, cut, 4, kind)


def _side_delta3(b: _Builder, ports: Sequence[int], stubs: int, kind: str) -> None:
    if len(ports) == 2 and stubs == 2:
        # closed diamond
        p1, p2 = ports
        q1, q2 = b.add(2)
        for q in (q1, q2):
            b.join(p1, q)
            b.join(p2, q)
        b.join(q1, q2)
        return
    (port,) = ports
    if kind == "light":
        _light_end(b, port, 3)
        return
    # an extremal-style chain whose last cut takes the stub
    cap = block_g1()
    offset = b.n
    b.add(cap.n)
    b.edges.extend((offset + cap.index(u), offset + cap.index(v)) for u, v in cap.label_edges)
    b.n, cut = extend_chain(b.n, b.edges, offset + cap.cut_index, block_g3(), 6)
    b.join(cut, port)


def build_host(spec: PatternSpec, kinds: Sequence[str]) -> PatternHost:
    """
    The host of spec with side i ending as kinds[i] ("heavy" or "light").
    """
    sides = _SIDES.get(spec.name)
    if sides is None:
        raise GraphInputError("No host layout for pattern", name=spec.name)
    if len(kinds) != len(sides):
        raise GraphInputError("One end kind per side is needed", name=spec.name)
    b = _Builder()
    ids = b.add(spec.n)
    for i, j in spec.pattern.edges():
        b.join(ids[i], ids[j])
    counts = spec.stub_counts
    for labels, kind in zip(sides, kinds):
        ports = [ids[spec.index(lab)] for lab in labels]
        stubs = counts[spec.index(labels[0])]
        if spec.delta == 4:
            _side_delta4(b, ports, stubs, kind)
        else:
            _side_delta3(b, ports, stubs, kind)
    return PatternHost(
        pattern=spec.name,
        variant="-".join(kinds),
        n=b.n,
        edges=b.edges,
        mapping=ids,
    )


def pattern_hosts(name: str) -> List[PatternHost]:
    """
    Hosts for one replaceable pattern: both orientations for patterns with two
    sides, the light end for one-sided Delta = 4 patterns. D2 closes its left
    side and continues to the right; D3 hangs from an extremal-style chain.
    """
    spec = pattern_by_name(name)
    if name == "D2":
        return [build_host(spec, ("heavy", "light"))]
    if name == "D3":
        return [build_host(spec, ("heavy",))]
    sides = _SIDES.get(name)
    if sides is None:
        raise GraphInputError("No host layout for pattern", name=name)
    if len(sides) == 1:
        return [build_host(spec, ("light",))]
    return [
        build_host(spec, ("heavy", "light")),
        build_host(spec, ("light", "heavy")),
    ]


def d1_control_host() -> Graph:
    """
    A cubic graph on 10 vertices containing D1 once: the edge ab with a joined to
    the nonadjacent p, q and b to the nonadjacent r, s, each pair closed by two
    adjacent common neighbors.
    """
    a, b, p, q, x1, x2, r, s, y1, y2 = range(10)
    return graph_from_edges(
        10,
        [
            (a, b),
            (a, p),
            (a, q),
            (b, r),
            (b, s),
            (p, x1),
            (p, x2),
            (q, x1),
            (q, x2),
            (x1, x2),
            (r, y1),
            (r, y2),
            (s, y1),
            (s, y2),
            (y1, y2),
        ],
    )
