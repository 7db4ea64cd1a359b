"""
The forbidden induced subgraphs of extremal graphs with maximum degree 3 and 4,
with the replacement gadgets used to show that an extremal graph cannot contain
them.

A pattern lists its vertex labels in index order, its edges as label pairs and
its stubs: one entry per edge leaving the pattern, naming the vertex it leaves
from. Vertices without stubs are closed. A replacement has the same number of
vertices, corresponds to the pattern position by position, and carries one stub
per pattern stub: the i-th outside edge of the pattern is re-attached at the i-th
replacement stub.

Twins are pairs of ports with the same outside neighbors. The replacement
arguments rely on equal Perron components on such a pair, which holds only when
the two ports see the same vertices outside the pattern.
"""

from collections import Counter
from typing import Dict, List, Optional, Sequence, Tuple

from ..constructions.gadgets import parse_edges
from ..errors import CapabilityError, ConsistencyError, GraphInputError
from ..graph import Graph, graph_from_edges


class PatternSpec(object):
    __slots__ = (
        "name",
        "delta",
        "labels",
        "label_edges",
        "stubs",
        "replacement_labels",
        "replacement_edges",
        "replacement_stubs",
        "twins",
        "_pattern",
        "_replacement",
    )

    def __init__(
        self,
        name: str,
        delta: int,
        labels: Sequence[str],
        label_edges: Sequence[Tuple[str, str]],
        stubs: Sequence[str],
        replacement_labels: Optional[Sequence[str]] = None,
        replacement_edges: Optional[Sequence[Tuple[str, str]]] = None,
        replacement_stubs: Optional[Sequence[str]] = None,
        twins: Sequence[Tuple[str, str]] = (),
    ):
        self.name = name
        self.delta = delta
        self.labels = tuple(labels)
        self.label_edges = tuple(label_edges)
        self.stubs = tuple(stubs)
        self._pattern = _labeled_graph(self.labels, self.label_edges)
        if replacement_edges is None:
            self.replacement_labels = None
            self.replacement_edges = None
            self.replacement_stubs = None
            self._replacement = None
        else:
            self.replacement_labels = tuple(replacement_labels or self.labels)
            self.replacement_edges = tuple(replacement_edges)
            self.replacement_stubs = tuple(replacement_stubs or self.stubs)
            if len(self.replacement_labels) != len(self.labels):
                raise ConsistencyError(
                    "Replacement order differs from the pattern order", name=name
                )
            if len(self.replacement_stubs) != len(self.stubs):
                raise ConsistencyError("Port arity mismatch", name=name)
            self._replacement = _labeled_graph(
                self.replacement_labels, self.replacement_edges
            )
        self.twins = tuple(twins)
        for label in self.stubs:
            self.index(label)
        ports = self.stub_counts
        for a, b in self.twins:
            if self.index(a) not in ports or self.index(b) not in ports:
                raise ConsistencyError("Twin ports must carry stubs", name=name, pair=(a, b))

    @property
    def pattern(self) -> Graph:
        return self._pattern

    @property
    def replacement(self) -> Optional[Graph]:
        return self._replacement

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def has_replacement(self) -> bool:
        return self._replacement is not None

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise GraphInputError(f"Pattern {self.name} has no vertex {label}")

    def replacement_index(self, label: str) -> int:
        if self.replacement_labels is None:
            raise GraphInputError(f"Pattern {self.name} has no replacement")
        try:
            return self.replacement_labels.index(label)
        except ValueError:
            raise GraphInputError(f"Replacement of {self.name} has no vertex {label}")

    @property
    def stub_counts(self) -> Dict[int, int]:
        """
        Pattern index -> number of outside edges.
        """
        return dict(Counter(self.index(s) for s in self.stubs))

    @property
    def boundary(self) -> List[int]:
        return sorted(self.stub_counts)

    def host_degrees(self) -> Dict[int, int]:
        """
        The host degree every port must have: its pattern degree plus its stubs.
        """
        degrees = self._pattern.degrees()
        return {i: degrees[i] + c for i, c in self.stub_counts.items()}

    def full_degrees(self) -> List[int]:
        counts = self.stub_counts
        return [d + counts.get(i, 0) for i, d in enumerate(self._pattern.degrees())]

    def replacement_full_degrees(self) -> List[int]:
        if self._replacement is None:
            raise GraphInputError(f"Pattern {self.name} has no replacement")
        counts = Counter(self.replacement_index(s) for s in self.replacement_stubs)
        return [d + counts.get(i, 0) for i, d in enumerate(self._replacement.degrees())]

    @property
    def preserves_degrees(self) -> bool:
        """
        Whether the surgery keeps the degree of every host vertex.
        """
        return self.full_degrees() == self.replacement_full_degrees()

    def __repr__(self) -> str:
        return (
            f"PatternSpec({self.name}, n={self.n}, m={self._pattern.m},"
            f" stubs={len(self.stubs)}, replacement={self.has_replacement})"
        )


def _labeled_graph(labels: Sequence[str], edges: Sequence[Tuple[str, str]]) -> Graph:
    index = {lab: i for i, lab in enumerate(labels)}
    try:
        return graph_from_edges(len(labels), [(index[a], index[b]) for a, b in edges])
    except KeyError as e:
        raise GraphInputError(f"Unknown label {e} in pattern table")


def _spec(
    name: str,
    delta: int,
    labels: str,
    edges: str,
    stubs: str,
    replacement: Optional[str] = None,
    replacement_labels: Optional[str] = None,
    replacement_stubs: Optional[str] = None,
    twins: str = "",
) -> PatternSpec:
    return PatternSpec(
        name,
        delta,
        labels.split(),
        parse_edges(edges),
        stubs.split(),
        replacement_labels.split() if replacement_labels else None,
        parse_edges(replacement) if replacement is not None else None,
        replacement_stubs.split() if replacement_stubs else None,
        parse_edges(twins),
    )


################################################################################
# Maximum degree 3.
################################################################################

# Two paths of length two joined at their middle vertices; the ends each carry two
# outside edges.
_D1 = _spec(
    "D1",
    3,
    "v1 v2 w2 v3 w1 w3",
    "v1v2 v2v3 w1w2 w2w3 v2w2",
    "v1 v1 w1 w1 v3 v3 w3 w3",
)

# o hangs from two nonadjacent vertices v0, w0 and starts a diamond chain ending
# at u2. The replacement moves the diamond {u1, v1, w1} one step to the left.
_D2 = _spec(
    "D2",
    3,
    "v0 w0 o u1 v1 w1 v2 w2 u2",
    "v0o w0o ou1 u1v1 u1w1 v1w1 v1v2 w1w2 v2w2 v2u2 w2u2",
    "v0 v0 w0 w0 u2",
    replacement="v1w1 w1v2 w1w2 ov1 v0o u1v1 w0u1 ou1 v2u2 v2w2 w2u2",
)

# The end of a chain with two adjacent vertices of degree 2; the replacement has
# a single pendant vertex instead.
_D3 = _spec(
    "D3",
    3,
    "u1 w1 v1 v2 u2 w2 v3",
    "v1u1 u1w1 w1v1 v1v2 v2u2 u2w2 w2v3 u2v3 v2w2",
    "v3",
    replacement="v1v2 v2u1 u1u2 u2v3 v2w1 w1w2 w2v3 u1w1 u2w2",
    replacement_labels="v1 v2 u1 w1 u2 w2 v3",
    replacement_stubs="v3",
)

_D4 = _spec(
    "D4",
    3,
    "w1 v1 u1 v2 w2 u2",
    "w1v1 v1u1 u1v2 v2u2 u2w2 w2v2 u1w2",
    "u2",
)

################################################################################
# Maximum degree 4.
################################################################################

_M1 = _spec(
    "M1",
    4,
    "u1 v1 w1 v2 w2 v3 w3 v4 w4",
    "u1v1 v1v2 v2v3 v3v4 v4w3 w3w2 w2w1 w1u1 u1v2 v2w1 w1v1 v1w2 w2u1 w3v3 "
    "v3w4 w3w4",
    "v4 v4 w4 w4",
    replacement="v1v2 v2v3 v3u1 u1v4 v4w4 w4u1 u1w3 w3w2 w2w1 w1v1 v1w2 w2v2 "
    "v2w1 v1v3 v3w3 w3w1",
    twins="v4w4",
)

# The outside neighbors of v4 and w4 both move to u1, so they must differ.
_M2 = _spec(
    "M2",
    4,
    "u1 v1 w1 v2 w2 v3 w3 v4 w4",
    "u1v1 v1v2 v2v3 v3v4 v4w3 w3w2 w2w1 w1u1 u1v2 v2w1 w1v1 v1w2 w2u1 w3v3 "
    "v3w4 w3w4 v4w4",
    "v4 w4",
    replacement="v1v2 v2v3 v3v4 v4u1 u1w4 w4w3 w3w2 w2w1 w1v1 v1w2 w2v2 v2w1 "
    "w1w3 w3v4 v4w4 w4v3 v3v1",
    replacement_stubs="u1 u1",
)

# Same for v4 and w4, which move to u2.
_M3 = _spec(
    "M3",
    4,
    "v1 v2 w1 w2 v3 w3 v4 w4",
    "v1v2 v2v3 v3v4 v4w4 w4w3 w3w2 w2w1 w1v1 v1v3 v3w4 v4w3 w3w1 w1v2 v2w2 w2v1",
    "v4 w4",
    replacement="v1v2 v2v3 v3u2 u2w3 w3w2 w2w1 w1v1 v1w2 w2v2 v2w1 w1u1 u1v1 "
    "u1v3 v3w3 w3u1",
    replacement_labels="v1 v2 w1 w2 v3 w3 u1 u2",
    replacement_stubs="u2 u2",
)

_M4 = _spec(
    "M4",
    4,
    "v1 w1 u1 v2 w2 v3 w3",
    "v1u1 u1v2 v2v3 v3w2 w2u1 u1w1 w1v1 w3w2 w2v2 v2w3",
    "v1 v1 w1 w1 v3 v3 w3 w3",
    replacement="v1v2 v2u1 u1w2 w2w1 w1v2 u1v3 v3w3 w3u1 v1w2 w2v2",
    twins="v1w1 v3w3",
)

_M5 = _spec(
    "M5",
    4,
    "v1 w1 u1 v2 w2 v3 w3 v4 w4",
    "v1u1 u1v2 v2v3 v3v4 v4w4 w4w3 w3w2 w2u1 u1w1 w1v1 v2w2 w2v3 v3w3 w3v2",
    "v1 v1 w1 w1 v4 v4 w4 w4",
    replacement="v1v2 v2v3 v3u1 u1w3 w3w2 w2w1 w1v1 v2w2 w2v3 v3w3 w3v2 u1v4 "
    "v4w4 w4u1",
    twins="v1w1 v4w4",
)

_M6 = _spec(
    "M6",
    4,
    "v1 w1 u1 v2 w2 u2 v3 w3",
    "v1w1 w1u1 u1v1 u1v2 v2v3 v3w3 w3w2 w2u1 w2v2 v2u2 u2v3 w2u2 u2w3",
    "v1 v1 w1 w1 v3 w3",
    replacement="w1u1 u1v1 v1u2 u2w1 w1v1 u2v2 v2v3 v3w3 w3w2 w2u2 v2w2 w2v3 v2w3",
    replacement_stubs="u1 u1 v1 w1 v3 w3",
    twins="v1w1",
)

_M7 = _spec(
    "M7",
    4,
    "v1 w1 u1 v2 w2 u2 v3 w3",
    "v1w1 w1u1 u1v1 u1v2 v2w2 w2u1 v2v3 v3u2 u2w2 w2w3 w3u2 u2v2",
    "v1 v1 w1 w1 v3 v3 w3 w3",
    replacement="v1v2 v2w2 w2w1 w1u1 u1v2 v2u2 u2w2 w2u1 u1v1 u2v3 v3w3 w3u2",
    twins="v1w1 v3w3",
)

_PATTERNS: Dict[int, Tuple[PatternSpec, ...]] = {
    3: (_D1, _D2, _D3, _D4),
    4: (_M1, _M2, _M3, _M4, _M5, _M6, _M7),
}


def forbidden_patterns(delta: int) -> List[PatternSpec]:
    """
    D1-D4 for maximum degree 3 and M1-M7 for maximum degree 4.
    """
    if delta not in _PATTERNS:
        raise CapabilityError(
            "Forbidden patterns are only tabulated for delta 3 and 4", delta=delta
        )
    return list(_PATTERNS[delta])


def pattern_by_name(name: str) -> PatternSpec:
    for specs in _PATTERNS.values():
        for spec in specs:
            if spec.name == name:
                return spec
    raise GraphInputError("Unknown pattern", name=name)
