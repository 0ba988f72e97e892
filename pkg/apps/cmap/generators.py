"""
Instance generators for signed cyclic graphs
- Seeded random graphs for property checks
- Exhaustive enumeration of small rotation systems, one per relabeling class
"""

import itertools
import logging
import random
from typing import Iterator, List, Sequence, Tuple

from apps.core.exceptions import InvariantViolation
from apps.cmap.models import NEGATIVE, POSITIVE, Edge, SignedCyclicGraph
from apps.cmap.services import relabeling_key

logger = logging.getLogger(__name__)


def random_cyclic_graph(vertex_count: int, edge_count: int, sign_bias: float = 0.5,
                        seed: int = 0) -> SignedCyclicGraph:
    """
    Random rotation system: edge i owns darts 2i and 2i+1, each dart lands on
    a uniformly chosen vertex, then every vertex cycle is shuffled. An edge
    is positive with probability sign_bias.
    """
    if vertex_count < 1:
        raise InvariantViolation('vertex_count >= 1', f"got {vertex_count}")
    if edge_count < 0:
        raise InvariantViolation('edge_count >= 0', f"got {edge_count}")

    rng = random.Random(seed)
    cycles: List[List[int]] = [[] for _ in range(vertex_count)]
    for dart in range(2 * edge_count):
        cycles[rng.randrange(vertex_count)].append(dart)
    for cycle in cycles:
        rng.shuffle(cycle)

    edges = tuple(
        Edge(i, (2 * i, 2 * i + 1), POSITIVE if rng.random() < sign_bias else NEGATIVE)
        for i in range(edge_count)
    )
    return SignedCyclicGraph(vertices=tuple(tuple(c) for c in cycles), edges=edges)


def perfect_matchings(positions: Sequence[int]) -> Iterator[List[Tuple[int, int]]]:
    """Perfect matchings of positions, first element always paired first"""
    if not positions:
        yield []
        return
    first, rest = positions[0], positions[1:]
    for index, partner in enumerate(rest):
        remaining = rest[:index] + rest[index + 1:]
        for tail in perfect_matchings(remaining):
            yield [(first, partner)] + tail


def _compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    """Ordered splits of total into parts positive integers"""
    for cuts in itertools.combinations(range(1, total), parts - 1):
        bounds = (0,) + cuts + (total,)
        yield tuple(bounds[i + 1] - bounds[i] for i in range(parts))


def _rotation_systems(edge_count: int, vertex_count: int) -> Iterator[SignedCyclicGraph]:
    """One all-positive representative per relabeling class"""
    dart_total = 2 * edge_count
    seen = set()
    occupied_range = [0] if edge_count == 0 else range(1, min(vertex_count, dart_total) + 1)
    for occupied in occupied_range:
        isolated = vertex_count - occupied
        splits = [()] if occupied == 0 else list(_compositions(dart_total, occupied))
        for matching in perfect_matchings(list(range(dart_total))):
            edges = tuple(Edge(i, pair) for i, pair in enumerate(matching))
            for split in splits:
                cycles, start = [], 0
                for size in split:
                    cycles.append(tuple(range(start, start + size)))
                    start += size
                cycles.extend(() for _ in range(isolated))
                graph = SignedCyclicGraph(vertices=tuple(cycles), edges=edges)
                key = relabeling_key(graph, signed=False)
                if key in seen:
                    continue
                seen.add(key)
                yield graph


def enumerate_cyclic_graphs(max_edges: int, max_vertices: int,
                            min_edges: int = 0) -> Iterator[SignedCyclicGraph]:
    """
    Every signed cyclic graph with min_edges..max_edges edges on
    1..max_vertices vertices, up to relabeling, times every sign pattern.
    Order is deterministic: by edge count, then vertex count.
    """
    for edge_count in range(min_edges, max_edges + 1):
        for vertex_count in range(1, max_vertices + 1):
            classes = 0
            for graph in _rotation_systems(edge_count, vertex_count):
                classes += 1
                for signs in itertools.product((POSITIVE, NEGATIVE), repeat=edge_count):
                    yield SignedCyclicGraph(
                        vertices=graph.vertices,
                        edges=tuple(Edge(e.id, e.darts, s) for e, s in zip(graph.edges, signs)),
                    )
            logger.debug(f"{classes} rotation systems with {edge_count} edges on {vertex_count} vertices")
