"""
Signed cyclic graphs as rotation systems

A graph is a set of darts (half-edges) with:
- a rotation: one counterclockwise cyclic sequence of darts per vertex
- an edge involution pairing the darts, each pair carrying a sign of +1 or -1

Values are immutable. Vertex cycles are normalized on construction (each
cycle starts at its smallest dart, vertices ordered by first dart, isolated
vertices last) so two graphs with the same data compare equal.
"""

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, Iterator, Optional, Tuple

import networkx as nx

from apps.core.exceptions import InvariantViolation, UnknownEdgeError

POSITIVE = 1
NEGATIVE = -1


@dataclass(frozen=True, order=True)
class Edge:
    """One edge: two distinct darts (stored ascending) and a sign"""
    id: int
    darts: Tuple[int, int]
    sign: int = POSITIVE

    def __post_init__(self):
        first, second = self.darts
        if first == second:
            raise InvariantViolation('edge darts distinct', f"edge {self.id} pairs dart {first} to itself")
        if self.sign not in (POSITIVE, NEGATIVE):
            raise InvariantViolation('edge sign', f"edge {self.id} has sign {self.sign}")
        object.__setattr__(self, 'darts', (min(first, second), max(first, second)))

    @property
    def sign_symbol(self) -> str:
        return '+' if self.sign == POSITIVE else '-'

    def other(self, dart: int) -> int:
        return self.darts[1] if dart == self.darts[0] else self.darts[0]


def _normalize_cycle(cycle: Iterable[int]) -> Tuple[int, ...]:
    cycle = tuple(cycle)
    if not cycle:
        return cycle
    start = cycle.index(min(cycle))
    return cycle[start:] + cycle[:start]


@dataclass(frozen=True)
class SignedCyclicGraph:
    """
    Rotation system with edge signs

    vertices: ccw dart cycles (empty tuple = isolated vertex)
    edges: edge records, sorted by id
    """
    vertices: Tuple[Tuple[int, ...], ...]
    edges: Tuple[Edge, ...] = field(default_factory=tuple)

    def __post_init__(self):
        cycles = [_normalize_cycle(cycle) for cycle in self.vertices]
        occupied = sorted((c for c in cycles if c), key=lambda c: c[0])
        isolated = [c for c in cycles if not c]
        object.__setattr__(self, 'vertices', tuple(occupied + isolated))
        object.__setattr__(self, 'edges', tuple(sorted(self.edges, key=lambda e: e.id)))
        self._validate()

    def _validate(self):
        rotation_darts = {}
        for index, cycle in enumerate(self.vertices):
            for dart in cycle:
                if dart < 0:
                    raise InvariantViolation('dart ids non-negative', f"dart {dart} at vertex {index}")
                if dart in rotation_darts:
                    raise InvariantViolation(
                        'rotation is a permutation',
                        f"dart {dart} appears at vertex {rotation_darts[dart]} and vertex {index}",
                    )
                rotation_darts[dart] = index

        seen_ids = set()
        paired = {}
        for edge in self.edges:
            if edge.id in seen_ids:
                raise InvariantViolation('edge ids unique', f"edge {edge.id} defined twice")
            seen_ids.add(edge.id)
            for dart in edge.darts:
                if dart in paired:
                    raise InvariantViolation(
                        'edge pairs form a perfect matching',
                        f"dart {dart} used by edge {paired[dart]} and edge {edge.id}",
                    )
                paired[dart] = edge.id

        missing = sorted(set(rotation_darts) - set(paired))
        if missing:
            raise InvariantViolation('edge pairs form a perfect matching', f"darts {missing} belong to no edge")
        stray = sorted(set(paired) - set(rotation_darts))
        if stray:
            raise InvariantViolation('rotation is a permutation', f"darts {stray} belong to no vertex")

    # ------------------------------------------------------------------
    # Derived counts
    # ------------------------------------------------------------------

    @property
    def dart_count(self) -> int:
        return 2 * len(self.edges)

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def component_count(self) -> int:
        return nx.number_connected_components(self.to_networkx())

    # ------------------------------------------------------------------
    # Permutation views
    # ------------------------------------------------------------------

    def darts(self) -> Tuple[int, ...]:
        return tuple(sorted(d for cycle in self.vertices for d in cycle))

    def edge_ids(self) -> Tuple[int, ...]:
        return tuple(edge.id for edge in self.edges)

    def edge(self, edge_id: int) -> Edge:
        for edge in self.edges:
            if edge.id == edge_id:
                return edge
        raise UnknownEdgeError(edge_id)

    def rotation(self) -> Dict[int, int]:
        """sigma: dart -> next dart counterclockwise at its vertex"""
        sigma = {}
        for cycle in self.vertices:
            for position, dart in enumerate(cycle):
                sigma[dart] = cycle[(position + 1) % len(cycle)]
        return sigma

    def involution(self) -> Dict[int, int]:
        """alpha: dart -> the other dart of its edge"""
        alpha = {}
        for edge in self.edges:
            first, second = edge.darts
            alpha[first] = second
            alpha[second] = first
        return alpha

    def dart_vertex(self) -> Dict[int, int]:
        return {dart: index for index, cycle in enumerate(self.vertices) for dart in cycle}

    def dart_edge(self) -> Dict[int, Edge]:
        return {dart: edge for edge in self.edges for dart in edge.darts}

    def to_networkx(self) -> nx.MultiGraph:
        """Underlying abstract multigraph: vertex indices, one edge per graph edge"""
        graph = nx.MultiGraph()
        graph.add_nodes_from(range(self.vertex_count))
        where = self.dart_vertex()
        for edge in self.edges:
            graph.add_edge(where[edge.darts[0]], where[edge.darts[1]], key=edge.id, sign=edge.sign)
        return graph


@dataclass(frozen=True)
class EdgeSubset:
    """
    Spanning subgraph S of a host graph, given by its edge ids

    Build through EdgeSubset.of() so unknown ids are rejected.
    """
    edge_ids: FrozenSet[int] = frozenset()

    @classmethod
    def of(cls, graph: SignedCyclicGraph, edge_ids: Iterable[int] = ()) -> 'EdgeSubset':
        subset = cls(frozenset(edge_ids))
        subset.check(graph)
        return subset

    @classmethod
    def all(cls, graph: SignedCyclicGraph) -> 'EdgeSubset':
        return cls(frozenset(graph.edge_ids()))

    @classmethod
    def from_mask(cls, graph: SignedCyclicGraph, mask: int) -> 'EdgeSubset':
        """Bit i of mask selects the i-th edge in ascending id order"""
        ids = graph.edge_ids()
        return cls(frozenset(ids[i] for i in range(len(ids)) if mask >> i & 1))

    def check(self, graph: SignedCyclicGraph):
        known = set(graph.edge_ids())
        for edge_id in sorted(self.edge_ids):
            if edge_id not in known:
                raise UnknownEdgeError(edge_id)

    def mask(self, graph: SignedCyclicGraph) -> int:
        ids = graph.edge_ids()
        return sum(1 << i for i, edge_id in enumerate(ids) if edge_id in self.edge_ids)

    def with_edge(self, edge_id: int) -> 'EdgeSubset':
        return EdgeSubset(self.edge_ids | {edge_id})

    def __contains__(self, edge_id: object) -> bool:
        return edge_id in self.edge_ids

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.edge_ids))

    def __len__(self) -> int:
        return len(self.edge_ids)


def make_graph(vertices: Iterable[Iterable[int]], edges: Iterable[Tuple[int, int, int, Optional[int]]]) -> SignedCyclicGraph:
    """
    Convenience builder: edges given as (id, dart, dart, sign) tuples
    """
    return SignedCyclicGraph(
        vertices=tuple(tuple(cycle) for cycle in vertices),
        edges=tuple(Edge(edge_id, (first, second), POSITIVE if sign is None else sign)
                    for edge_id, first, second, sign in edges),
    )
