"""
Static tables of the end caps and interior units the extremal families are
assembled from.

Every gadget lists its vertex labels in index order and its edges as label pairs.
`cut` is the vertex the next unit hangs from; `attach` (interior units only) is the
label that is merged with the previous cut when the unit is appended.
"""

import re
from typing import Dict, List, Optional, Sequence, Tuple

from ..errors import GraphInputError
from ..graph import Graph, graph_from_edges

_LABEL = re.compile(r"[a-z]\d+|o")


class Gadget(object):
    """
    A small labeled graph with a distinguished cut vertex.
    """

    __slots__ = ("name", "labels", "label_edges", "cut", "attach", "_graph")

    def __init__(
        self,
        name: str,
        labels: Sequence[str],
        label_edges: Sequence[Tuple[str, str]],
        cut: str,
        attach: Optional[str] = None,
    ):
        self.name = name
        self.labels = tuple(labels)
        self.label_edges = tuple(label_edges)
        self.cut = cut
        self.attach = attach
        index = {lab: i for i, lab in enumerate(self.labels)}
        self._graph = graph_from_edges(
            len(self.labels), [(index[a], index[b]) for a, b in self.label_edges]
        )

    @property
    def graph(self) -> Graph:
        return self._graph

    @property
    def n(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise GraphInputError(f"Gadget {self.name} has no vertex {label}")

    @property
    def cut_index(self) -> int:
        return self.index(self.cut)

    def __repr__(self) -> str:
        return f"Gadget({self.name}, n={self.n}, m={self._graph.m}, cut={self.cut})"


def parse_edges(text: str) -> List[Tuple[str, str]]:
    """
    Parses a whitespace separated list like "v1v2 v2u1" into label pairs.
    """
    pairs = []
    for token in text.split():
        parts = _LABEL.findall(token)
        if len(parts) != 2 or "".join(parts) != token:
            raise GraphInputError("Malformed edge token in gadget table", token=token)
        pairs.append((parts[0], parts[1]))
    return pairs


def _gadget(
    name: str, labels: str, edges: str, cut: str, attach: Optional[str] = None
) -> Gadget:
    return Gadget(name, labels.split(), parse_edges(edges), cut, attach)


################################################################################
# Maximum degree 3.
################################################################################

# End cap on 5 vertices, used when n = 1 or 2 (mod 4).
_G1 = _gadget(
    "G1",
    "v1 v2 w1 w2 u1",
    "v1v2 v1w1 v1w2 v2w1 v2u1 w1w2 w2u1",
    cut="u1",
)

# End cap on 7 vertices, used when n = 3 or 0 (mod 4).
_G2 = _gadget(
    "G2",
    "v1 v2 v3 w1 w2 w3 u1",
    "v1v2 v2v3 v3u1 u1w3 w3w2 w2w1 w1v1 v1w2 v2w1 v3w3",
    cut="u1",
)

# Interior unit: o is the previous cut, u2 the new one.
_G3 = _gadget(
    "G3",
    "o u1 v1 w1 u2",
    "ou1 u1v1 u1w1 v1w1 v1u2 w1u2",
    cut="u2",
    attach="o",
)

################################################################################
# Maximum degree 4.
################################################################################

# End caps, named by the residue of n mod 5 they serve:
#   H1 -> 0, H2 -> 4, H3 -> 1, H4 -> 2, H5 -> 3.
_H1 = _gadget(
    "H1",
    "u1 v1 v2 v3 v4 u2 w1 w2 w3 w4",
    "u1v1 v1v2 v2v3 v3v4 v4u2 u2w4 w4w3 w3w2 w2w1 w1u1 "
    "u1v2 v2w1 w1v1 v1w2 w2u1 v3w3 w3v4 v4w4 w4v3",
    cut="u2",
)

_H2 = _gadget(
    "H2",
    "v1 v2 v3 v4 u1 w1 w2 w3 w4",
    "v1v2 v2v3 v3v4 v4u1 u1w4 w4w3 w3w2 w2w1 w1v1 "
    "v1w2 w2v2 v2w1 w1w3 w3v4 v4w4 w4v3 v3v1",
    cut="u1",
)

_H3 = _gadget(
    "H3",
    "u1 v1 v2 u2 w1 w2",
    "u1v1 v1v2 v2u2 u2w2 w2w1 w1u1 u1v2 v2w1 w1v1 v1w2 w2u1",
    cut="u2",
)

_H4 = _gadget(
    "H4",
    "v1 v2 v3 u1 w1 w2 w3",
    "v1v2 v2v3 v3u1 u1w3 w3w2 w2w1 w1v1 v1v3 v3w3 w3w1 w1v2 v2w2 w2v1",
    cut="u1",
)

_H5 = _gadget(
    "H5",
    "v1 v2 v3 u1 u2 w1 w2 w3",
    "v1v2 v2v3 v3u2 u2w3 w3w2 w2w1 w1v1 v1u1 u1w1 w1v2 v2w2 w2v1 "
    "v3u1 u1w3 w3v3",
    cut="u2",
)

# Interior unit: a K4 on {v1, w1, v2, w2}; (v1, w1) hang from the previous cut u1,
# (v2, w2) from the new cut u2.
_H6 = _gadget(
    "H6",
    "u1 v1 w1 v2 w2 u2",
    "u1v1 u1w1 v1w1 v1v2 v1w2 w1v2 w1w2 v2w2 v2u2 w2u2",
    cut="u2",
    attach="u1",
)

_DELTA4_BLOCKS: Dict[int, Gadget] = {
    1: _H1,
    2: _H2,
    3: _H3,
    4: _H4,
    5: _H5,
    6: _H6,
}

# n mod 5 -> end cap for the maximum degree 4 family.
DELTA4_CAP_BY_RESIDUE: Dict[int, Gadget] = {0: _H1, 1: _H3, 2: _H4, 3: _H5, 4: _H2}


def block_g1() -> Gadget:
    return _G1


def block_g2() -> Gadget:
    return _G2


def block_g3() -> Gadget:
    return _G3


def block_h(i: int) -> Gadget:
    """
    The maximum degree 4 blocks: H1..H5 are end caps, H6 is the interior unit.
    """
    if i not in _DELTA4_BLOCKS:
        raise GraphInputError("block_h index must be in 1..6", i=i)
    return _DELTA4_BLOCKS[i]

