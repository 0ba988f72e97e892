"""
Polynomial invariants

- bracket: state sum over all 2^n smoothings of a diagram
- f_expansion / f_recursive: F[G] by spanning subgraphs and by the
  deletion-marking recursion
- jones, jones_via_f: writhe-normalized specializations
"""

import logging
import time
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Any, Dict, Optional, Sequence, Tuple, Union

import django
from django.conf import settings

from apps.core.exceptions import InvariantViolation, LimitExceededError, NotColorableError
from apps.cmap.models import POSITIVE, EdgeSubset, SignedCyclicGraph, make_graph
from apps.cmap.services import boundary_components, delete_edge
from apps.diagram.models import State, VirtualDiagram
from apps.diagram.services import checkerboard_colorable, loop_count, orient, writhe
from apps.medial.construction import medial
from apps.medial.tait import tait_graph
from apps.polynomial.models import BracketPoly, QuarterLaurent
from apps.polynomial.rendering import bracket_to_json, jones_to_json
from apps.polynomial.services import normalize_writhe

logger = logging.getLogger(__name__)

# Below this many states a worker pool costs more than it saves
PARALLEL_MIN_STATES = 1 << 12


def _crossing_limit(limit: Optional[int]) -> int:
    return settings.GRAPHLINKS_MAX_CROSSINGS if limit is None else limit


def _edge_limit(limit: Optional[int]) -> int:
    return settings.GRAPHLINKS_MAX_EDGES if limit is None else limit


# ======================================================================
# Bracket
# ======================================================================

def _bracket_chunk(diagram: VirtualDiagram, start: int, stop: int) -> Dict[Tuple[int, int, int], int]:
    n = diagram.crossing_count
    counts: Dict[Tuple[int, int, int], int] = defaultdict(int)
    for mask in range(start, stop):
        state = State.from_mask(n, mask)
        b = bin(mask).count('1')
        counts[(n - b, b, loop_count(diagram, state) - 1)] += 1
    return counts


def bracket(diagram: VirtualDiagram, jobs: Optional[int] = None,
            limit: Optional[int] = None) -> BracketPoly:
    """
    Sum over states of A^(#A) B^(#B) d^(loops - 1); states in mask order
    (bit i set = B at crossing i)
    """
    n = diagram.crossing_count
    if n > _crossing_limit(limit):
        raise LimitExceededError(f"{n} crossings exceed the limit of {_crossing_limit(limit)}")

    total = 1 << n
    jobs = settings.GRAPHLINKS_JOBS if jobs is None else jobs
    if jobs <= 1 or total < PARALLEL_MIN_STATES:
        return BracketPoly(_bracket_chunk(diagram, 0, total))

    step = -(-total // jobs)
    bounds = [(start, min(start + step, total)) for start in range(0, total, step)]
    logger.debug(f"Bracket of {n} crossings split into {len(bounds)} ranges")
    counts: Dict[Tuple[int, int, int], int] = defaultdict(int)
    with ProcessPoolExecutor(max_workers=jobs, initializer=django.setup) as pool:
        futures = [pool.submit(_bracket_chunk, diagram, start, stop) for start, stop in bounds]
        for future in futures:
            for exponent, coefficient in future.result().items():
                counts[exponent] += coefficient
    return BracketPoly(counts)


def jones(diagram: VirtualDiagram, reverse: Sequence[int] = (), jobs: Optional[int] = None) -> QuarterLaurent:
    """Normalized Jones polynomial for the lowest-port orientation (components in reverse flipped)"""
    return normalize_writhe(bracket(diagram, jobs=jobs), writhe(diagram, orient(diagram, reverse)))


# ======================================================================
# F[G]
# ======================================================================

def subset_term(graph: SignedCyclicGraph, subset: EdgeSubset) -> Tuple[int, int, int]:
    """(a, b, k) exponents contributed by one spanning subgraph"""
    a = b = 0
    for edge in graph.edges:
        inside = edge.id in subset
        if (edge.sign == POSITIVE) == inside:
            a += 1
        else:
            b += 1
    return a, b, boundary_components(graph, subset) - 1


def f_expansion(graph: SignedCyclicGraph, limit: Optional[int] = None) -> BracketPoly:
    """Sum over spanning subgraphs S of A^(e+(S)+e-(G-S)) B^(e-(S)+e+(G-S)) d^(bc(S)-1)"""
    if graph.edge_count > _edge_limit(limit):
        raise LimitExceededError(f"{graph.edge_count} edges exceed the limit of {_edge_limit(limit)}")
    counts: Dict[Tuple[int, int, int], int] = defaultdict(int)
    for mask in range(1 << graph.edge_count):
        counts[subset_term(graph, EdgeSubset.from_mask(graph, mask))] += 1
    return BracketPoly(counts)


def f_recursive(graph: SignedCyclicGraph, order: Optional[Sequence[int]] = None,
                limit: Optional[int] = None) -> BracketPoly:
    """
    Deletion-marking recursion, edges taken in order (ascending ids by default):
    positive e: B.F[G-e] + A.F[G, e marked]; negative e: A.F[G-e] + B.F[G, e marked].
    With every edge marked, F = d^(bc(marked) - 1).
    """
    if graph.edge_count > _edge_limit(limit):
        raise LimitExceededError(f"{graph.edge_count} edges exceed the limit of {_edge_limit(limit)}")
    if order is None:
        order = graph.edge_ids()
    if sorted(order) != sorted(graph.edge_ids()):
        raise InvariantViolation('recursion order', f"{list(order)} is not an ordering of the edges")

    def step(current: SignedCyclicGraph, marked: EdgeSubset, remaining: Sequence[int]) -> BracketPoly:
        if not remaining:
            return BracketPoly.monomial(k=boundary_components(current, marked) - 1)
        edge = current.edge(remaining[0])
        deleted = step(delete_edge(current, edge.id), marked, remaining[1:])
        kept = step(current, marked.with_edge(edge.id), remaining[1:])
        if edge.sign == POSITIVE:
            return BracketPoly.B * deleted + BracketPoly.A * kept
        return BracketPoly.A * deleted + BracketPoly.B * kept

    return step(graph, EdgeSubset(), tuple(order))


def tait_polynomial(source: Union[SignedCyclicGraph, VirtualDiagram],
                    limit: Optional[int] = None) -> Tuple[VirtualDiagram, BracketPoly]:
    """
    (diagram, F of its Tait graph). A graph is taken as the Tait graph of
    its medial diagram.
    """
    if isinstance(source, SignedCyclicGraph):
        graph = source
        diagram, _ = medial(graph)
    else:
        diagram = source
        coloring = checkerboard_colorable(diagram)
        if coloring is None:
            raise NotColorableError('diagram is not checkerboard colorable')
        graph = tait_graph(diagram, coloring)
    return diagram, f_expansion(graph, limit=limit)


def jones_via_f(source: Union[SignedCyclicGraph, VirtualDiagram], reverse: Sequence[int] = (),
                limit: Optional[int] = None) -> QuarterLaurent:
    """Jones polynomial from F of a Tait graph and the writhe under orient(diagram, reverse)"""
    diagram, poly = tait_polynomial(source, limit=limit)
    return normalize_writhe(poly, writhe(diagram, orient(diagram, reverse)))


# ======================================================================
# Reports
# ======================================================================

@dataclass(frozen=True)
class InvariantReport:
    bracket: BracketPoly
    jones: QuarterLaurent
    writhe: int
    state_count: int
    ms: Optional[float] = None

    def to_json(self, timing: bool = False) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            'bracket': bracket_to_json(self.bracket),
            'jones': jones_to_json(self.jones),
            'writhe': self.writhe,
            'states': self.state_count,
        }
        if timing and self.ms is not None:
            data['ms'] = round(self.ms, 3)
        return data


def invariant_report(diagram: VirtualDiagram, jobs: Optional[int] = None) -> InvariantReport:
    started = time.perf_counter()
    poly = bracket(diagram, jobs=jobs)
    w = writhe(diagram)
    elapsed = (time.perf_counter() - started) * 1000
    return InvariantReport(
        bracket=poly,
        jones=normalize_writhe(poly, w),
        writhe=w,
        state_count=1 << diagram.crossing_count,
        ms=elapsed,
    )


def worked_example() -> Tuple[SignedCyclicGraph, BracketPoly]:
    """
    One vertex with interleaved loops a (positive) and b (negative); both
    ways of computing F must give A^2 d + 2AB + B^2 d
    """
    graph = make_graph([(0, 1, 2, 3)], [(0, 0, 2, 1), (1, 1, 3, -1)])
    expanded = f_expansion(graph)
    recursed = f_recursive(graph)
    if expanded != recursed:
        raise InvariantViolation('worked example', f"expansion {expanded} != recursion {recursed}")
    return graph, expanded

