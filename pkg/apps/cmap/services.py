"""
Combinatorial map operations on signed cyclic graphs

- boundary component counts of spanning subgraphs
- genus via the Euler formula
- edge deletion and single-edge partial duality
- sign flips, dense relabeling, and equivalence search for small graphs
"""

import itertools
import logging
from typing import Dict, Iterable, List, Optional, Tuple, Union

import networkx as nx

from apps.core.exceptions import InvariantViolation, LimitExceededError
from apps.cmap.models import Edge, EdgeSubset, SignedCyclicGraph

logger = logging.getLogger(__name__)

# Relabeling search tries every vertex order and every start dart
MAX_EQUIVALENCE_DARTS = 8

SubsetLike = Union[EdgeSubset, Iterable[int]]


def _as_subset(graph: SignedCyclicGraph, subset: Optional[SubsetLike]) -> EdgeSubset:
    if subset is None:
        return EdgeSubset.all(graph)
    if not isinstance(subset, EdgeSubset):
        subset = EdgeSubset(frozenset(subset))
    subset.check(graph)
    return subset


def _cycles_of(permutation: Dict[int, int]) -> List[Tuple[int, ...]]:
    cycles = []
    seen = set()
    for start in sorted(permutation):
        if start in seen:
            continue
        cycle = []
        dart = start
        while dart not in seen:
            seen.add(dart)
            cycle.append(dart)
            dart = permutation[dart]
        cycles.append(tuple(cycle))
    return cycles


def boundary_components(graph: SignedCyclicGraph, subset: Optional[SubsetLike] = None) -> int:
    """
    Number of boundary components of the ribbon subgraph with every vertex
    of the graph and exactly the edges in subset (all edges when omitted).

    Orbits of restricted-rotation after edge-involution on the subset darts,
    plus one for each vertex that keeps no dart.
    """
    subset = _as_subset(graph, subset)
    kept = {dart for edge in graph.edges if edge.id in subset for dart in edge.darts}

    restricted = {}
    bare_vertices = 0
    for cycle in graph.vertices:
        remaining = [dart for dart in cycle if dart in kept]
        if not remaining:
            bare_vertices += 1
            continue
        for position, dart in enumerate(remaining):
            restricted[dart] = remaining[(position + 1) % len(remaining)]

    alpha = graph.involution()
    walk = {dart: restricted[alpha[dart]] for dart in kept}
    return len(_cycles_of(walk)) + bare_vertices


def connected_components(graph: SignedCyclicGraph, subset: Optional[SubsetLike] = None) -> int:
    """Connected components of the spanning subgraph, isolated vertices included"""
    subset = _as_subset(graph, subset)
    multigraph = graph.to_networkx()
    dropped = [(u, v, key) for u, v, key in multigraph.edges(keys=True) if key not in subset]
    multigraph.remove_edges_from(dropped)
    return nx.number_connected_components(multigraph)


def genus(graph: SignedCyclicGraph) -> int:
    """g with bc = e - v + 2c - 2g"""
    twice = (graph.edge_count - graph.vertex_count + 2 * graph.component_count
             - boundary_components(graph))
    if twice < 0 or twice % 2:
        raise InvariantViolation('euler formula', f"e - v + 2c - bc = {twice}")
    return twice // 2


def delete_edge(graph: SignedCyclicGraph, edge_id: int) -> SignedCyclicGraph:
    """G - e: darts of e leave their vertex cycles, every vertex stays"""
    removed = set(graph.edge(edge_id).darts)
    return SignedCyclicGraph(
        vertices=tuple(tuple(d for d in cycle if d not in removed) for cycle in graph.vertices),
        edges=tuple(edge for edge in graph.edges if edge.id != edge_id),
    )


def partial_dual_edge(graph: SignedCyclicGraph, edge_id: int) -> SignedCyclicGraph:
    """
    Partial dual G^e along one edge

    The rotation is composed with the transposition of the two darts of e:
    sigma'(h1) = sigma(h2) and sigma'(h2) = sigma(h1). Dart ids, edge ids
    and every sign (including the sign of e) are kept.
    """
    first, second = graph.edge(edge_id).darts
    sigma = graph.rotation()
    sigma[first], sigma[second] = sigma[second], sigma[first]

    bare = [cycle for cycle in graph.vertices if not cycle]
    return SignedCyclicGraph(
        vertices=tuple(_cycles_of(sigma)) + tuple(bare),
        edges=graph.edges,
    )


def flip_signs(graph: SignedCyclicGraph) -> SignedCyclicGraph:
    return SignedCyclicGraph(
        vertices=graph.vertices,
        edges=tuple(Edge(e.id, e.darts, -e.sign) for e in graph.edges),
    )


def with_sign(graph: SignedCyclicGraph, edge_id: int, sign: int) -> SignedCyclicGraph:
    graph.edge(edge_id)
    return SignedCyclicGraph(
        vertices=graph.vertices,
        edges=tuple(Edge(e.id, e.darts, sign if e.id == edge_id else e.sign) for e in graph.edges),
    )


def canonical(graph: SignedCyclicGraph) -> SignedCyclicGraph:
    """
    Dense relabeling: darts numbered 0.. in vertex order, edges numbered
    0.. by their smallest new dart
    """
    relabel = {}
    for cycle in graph.vertices:
        for dart in cycle:
            relabel[dart] = len(relabel)

    renamed = sorted(
        ((min(relabel[d] for d in e.darts), max(relabel[d] for d in e.darts)), e.sign)
        for e in graph.edges
    )
    return SignedCyclicGraph(
        vertices=tuple(tuple(relabel[d] for d in cycle) for cycle in graph.vertices),
        edges=tuple(Edge(index, darts, sign) for index, (darts, sign) in enumerate(renamed)),
    )


def relabeling_key(graph: SignedCyclicGraph, signed: bool = True) -> Tuple:
    """
    Label-independent key: minimum over every vertex order and every starting
    dart of the traversal encoding. Equal keys mean the graphs differ only by
    an orientation-preserving relabeling (sign-preserving when signed).
    """
    alpha = graph.involution()
    sign_of = {dart: edge.sign for edge in graph.edges for dart in edge.darts}
    occupied = [cycle for cycle in graph.vertices if cycle]
    isolated = graph.vertex_count - len(occupied)

    best = None
    for order in itertools.permutations(occupied):
        for starts in itertools.product(*(range(len(cycle)) for cycle in order)):
            walk = []
            for cycle, start in zip(order, starts):
                walk.extend(cycle[start:] + cycle[:start])
            label = {dart: position for position, dart in enumerate(walk)}
            pairing = tuple(
                (label[alpha[dart]], sign_of[dart]) if signed else label[alpha[dart]]
                for dart in walk
            )
            candidate = (tuple(len(cycle) for cycle in order), pairing)
            if best is None or candidate < best:
                best = candidate
    return (isolated, best)


def is_equivalent(first: SignedCyclicGraph, second: SignedCyclicGraph) -> bool:
    """Sign- and orientation-preserving relabeling search (small graphs only)"""
    for graph in (first, second):
        if graph.dart_count > MAX_EQUIVALENCE_DARTS:
            raise LimitExceededError(
                f"equivalence search supports at most {MAX_EQUIVALENCE_DARTS} darts, got {graph.dart_count}"
            )
    if (first.vertex_count, first.edge_count) != (second.vertex_count, second.edge_count):
        return False
    return relabeling_key(first) == relabeling_key(second)
