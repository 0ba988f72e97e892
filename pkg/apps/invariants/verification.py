"""
Executable equalities between the graph and diagram sides

Single-instance checks return an EqualityReport; run_verification_suite
drives them over the exhaustive small family, a seeded random family, the
given diagrams and every small abstract diagram, and tallies the outcome
per property:

- order_independence   F[G] by recursion does not depend on the edge order
- recursion_expansion  recursion and spanning-subgraph expansion agree
- medial_bracket       F[G] equals the bracket of the medial diagram
- medial_anchors       medial diagrams are colorable; vertex- and
                       edge-parallel states give |V| and bc loops
- tait_bracket         bracket of a colorable diagram equals F of both
                       Tait graphs
- tait_duality         F[G](A,B,d) = F[flip_signs(G*)](B,A,d)
- r2_invariance        normalized bracket unchanged by an R2 clasp
- partial_dual         medial of G^e equals the virtualized medial of G
- virtualize_switch    virtualizing and switching a crossing give one bracket
"""

import logging
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence

import django

from apps.cmap.generators import enumerate_cyclic_graphs, random_cyclic_graph
from apps.cmap.models import EdgeSubset, SignedCyclicGraph
from apps.cmap.services import boundary_components, flip_signs, partial_dual_edge
from apps.diagram.enumeration import enumerate_diagrams
from apps.diagram.models import VirtualDiagram
from apps.diagram.moves import r2_insert, switch_crossing, virtualize
from apps.diagram.services import checkerboard_colorable, loop_count
from apps.invariants.services import bracket, f_expansion, f_recursive
from apps.medial.construction import medial, medial_state
from apps.medial.tait import tait_graph
from apps.polynomial.models import BracketPoly
from apps.polynomial.services import specialize_bracket, substitute_dual

logger = logging.getLogger(__name__)

# Failure reports kept per property
MAX_KEPT_FAILURES = 5

PROPERTIES = {
    'order_independence': 'recursion independent of edge order',
    'recursion_expansion': 'recursion equals spanning-subgraph expansion',
    'medial_bracket': 'F[G] equals the bracket of the medial diagram',
    'medial_anchors': 'medial diagram colorable with |V| and bc loop anchors',
    'tait_bracket': 'bracket equals F of both Tait graphs',
    'tait_duality': 'complementary Tait graphs are dual',
    'r2_invariance': 'normalized bracket invariant under R2 clasps',
    'partial_dual': 'partial dual matches crossing virtualization',
    'virtualize_switch': 'virtualize and switch give equal brackets',
}


@dataclass
class EqualityReport:
    check: str
    subject: str
    passed: bool
    values: Dict[str, Any] = field(default_factory=dict)
    differences: List[str] = field(default_factory=list)
    colorable: Optional[bool] = None

    def to_json(self) -> Dict[str, Any]:
        data = {
            'check': self.check,
            'subject': self.subject,
            'passed': self.passed,
            'values': {name: str(value) for name, value in self.values.items()},
            'differences': list(self.differences),
        }
        if self.colorable is not None:
            data['colorable'] = self.colorable
        return data


def _term_differences(left_name: str, left: BracketPoly, right_name: str, right: BracketPoly) -> List[str]:
    lines = []
    left_terms, right_terms = left.as_dict(), right.as_dict()
    for exponent in sorted(set(left_terms) | set(right_terms)):
        a, b = left_terms.get(exponent, 0), right_terms.get(exponent, 0)
        if a != b:
            lines.append(f"A^{exponent[0]} B^{exponent[1]} d^{exponent[2]}: {left_name} {a}, {right_name} {b}")
    return lines


def _graph_subject(graph: SignedCyclicGraph) -> str:
    signs = ''.join(e.sign_symbol for e in graph.edges)
    return f"graph v={graph.vertex_count} e={graph.edge_count} rotation={list(graph.vertices)} signs={signs}"


def _diagram_subject(diagram: VirtualDiagram) -> str:
    return f"diagram n={diagram.crossing_count} mate={list(diagram.mate)} loops={diagram.free_loops}"


# ======================================================================
# Single-instance checks
# ======================================================================

def check_medial_equality(graph: SignedCyclicGraph) -> EqualityReport:
    """F by expansion, F by recursion and the medial bracket must coincide"""
    diagram, mapping = medial(graph, check=False)
    expanded = f_expansion(graph)
    recursed = f_recursive(graph)
    medial_bracket = bracket(diagram, jobs=1)

    report = EqualityReport(
        check='medial_bracket',
        subject=_graph_subject(graph),
        passed=expanded == recursed == medial_bracket,
        values={'expansion': expanded, 'recursion': recursed, 'bracket': medial_bracket},
    )
    if not report.passed:
        report.differences += _term_differences('expansion', expanded, 'recursion', recursed)
        report.differences += _term_differences('expansion', expanded, 'bracket', medial_bracket)
        for mask in range(1 << graph.edge_count):
            subset = EdgeSubset.from_mask(graph, mask)
            state = medial_state(mapping, subset)
            loops = loop_count(diagram, state)
            bc = boundary_components(graph, subset)
            if loops != bc:
                report.differences.append(
                    f"S={sorted(subset)} state={state}: bc {bc}, loops {loops}"
                )
    return report


def check_order_independence(graph: SignedCyclicGraph, orders: int = 5, seed: int = 0) -> EqualityReport:
    rng = random.Random(seed)
    reference = f_recursive(graph)
    report = EqualityReport('order_independence', _graph_subject(graph), True, {'ascending': reference})
    for _ in range(orders):
        order = list(graph.edge_ids())
        rng.shuffle(order)
        value = f_recursive(graph, order=order)
        if value != reference:
            report.passed = False
            report.values[f"order {order}"] = value
            report.differences += _term_differences('ascending', reference, f"order {order}", value)
    return report


def check_recursion_expansion(graph: SignedCyclicGraph) -> EqualityReport:
    expanded, recursed = f_expansion(graph), f_recursive(graph)
    return EqualityReport(
        'recursion_expansion', _graph_subject(graph), expanded == recursed,
        {'expansion': expanded, 'recursion': recursed},
        _term_differences('expansion', expanded, 'recursion', recursed),
    )


def check_medial_anchors(graph: SignedCyclicGraph) -> EqualityReport:
    diagram, mapping = medial(graph, check=False)
    vertex_loops = loop_count(diagram, mapping.vertex_parallel_state())
    edge_loops = loop_count(diagram, mapping.edge_parallel_state())
    bc = boundary_components(graph)
    colorable = checkerboard_colorable(diagram) is not None

    differences = []
    if not colorable:
        differences.append('medial diagram is not checkerboard colorable')
    if vertex_loops != graph.vertex_count:
        differences.append(f"vertex-parallel state: {vertex_loops} loops, {graph.vertex_count} vertices")
    if edge_loops != bc:
        differences.append(f"edge-parallel state: {edge_loops} loops, bc {bc}")
    return EqualityReport(
        'medial_anchors', _graph_subject(graph), not differences,
        {'vertex_loops': vertex_loops, 'edge_loops': edge_loops}, differences, colorable,
    )


def check_tait_equality(diagram: VirtualDiagram) -> EqualityReport:
    """bracket(D) against F of the Tait graph of each complementary coloring"""
    coloring = checkerboard_colorable(diagram)
    if coloring is None:
        return EqualityReport('tait_bracket', _diagram_subject(diagram), False,
                              differences=['not checkerboard colorable'], colorable=False)

    diagram_bracket = bracket(diagram, jobs=1)
    report = EqualityReport('tait_bracket', _diagram_subject(diagram), True,
                            {'bracket': diagram_bracket}, colorable=True)
    for name, choice in (('canonical', coloring), ('complement', coloring.complement())):
        value = f_expansion(tait_graph(diagram, choice))
        report.values[name] = value
        if value != diagram_bracket:
            report.passed = False
            report.differences += _term_differences('bracket', diagram_bracket, name, value)
    return report


def check_tait_duality(diagram: VirtualDiagram) -> EqualityReport:
    coloring = checkerboard_colorable(diagram)
    if coloring is None:
        return EqualityReport('tait_duality', _diagram_subject(diagram), False,
                              differences=['not checkerboard colorable'], colorable=False)
    primal = f_expansion(tait_graph(diagram, coloring))
    dual = f_expansion(flip_signs(tait_graph(diagram, coloring.complement())))
    swapped = substitute_dual(dual)
    return EqualityReport(
        'tait_duality', _diagram_subject(diagram), primal == swapped,
        {'primal': primal, 'dual swapped': swapped},
        _term_differences('primal', primal, 'dual swapped', swapped), True,
    )


def check_r2_invariance(diagram: VirtualDiagram, arc_x: int, arc_y: int) -> EqualityReport:
    before = specialize_bracket(bracket(diagram, jobs=1))
    after = specialize_bracket(bracket(r2_insert(diagram, arc_x, arc_y), jobs=1))
    report = EqualityReport(
        'r2_invariance', f"{_diagram_subject(diagram)} arcs=({arc_x}, {arc_y})", before == after,
        {'before': before, 'after': after},
    )
    if not report.passed:
        report.differences.append(f"normalized bracket {before} became {after}")
    return report


def check_partial_dual(graph: SignedCyclicGraph, edge_id: int) -> EqualityReport:
    diagram, mapping = medial(graph, check=False)
    dualized = bracket(medial(partial_dual_edge(graph, edge_id), check=False)[0], jobs=1)
    virtualized = bracket(virtualize(diagram, mapping.crossing(edge_id)), jobs=1)
    return EqualityReport(
        'partial_dual', f"{_graph_subject(graph)} edge={edge_id}", dualized == virtualized,
        {'partial dual': dualized, 'virtualized': virtualized},
        _term_differences('partial dual', dualized, 'virtualized', virtualized),
    )


def check_virtualize_switch(diagram: VirtualDiagram, crossing: int) -> EqualityReport:
    virtualized = bracket(virtualize(diagram, crossing), jobs=1)
    switched = bracket(switch_crossing(diagram, crossing), jobs=1)
    return EqualityReport(
        'virtualize_switch', f"{_diagram_subject(diagram)} crossing={crossing}", virtualized == switched,
        {'virtualized': virtualized, 'switched': switched},
        _term_differences('virtualized', virtualized, 'switched', switched),
    )


# ======================================================================
# Batch drivers (module level so worker processes can import them)
# ======================================================================

def _graph_checks(graph: SignedCyclicGraph, seed: int, edge_orders: int,
                  exhaustive: bool) -> List[EqualityReport]:
    reports = [
        check_order_independence(graph, edge_orders, seed),
        check_recursion_expansion(graph),
        check_medial_equality(graph),
        check_medial_anchors(graph),
    ]
    diagram, _ = medial(graph, check=False)
    reports.append(check_tait_equality(diagram))
    reports.append(check_tait_duality(diagram))
    if exhaustive:
        reports += [check_partial_dual(graph, edge_id) for edge_id in graph.edge_ids()]
    return reports


def _diagram_checks(diagram: VirtualDiagram) -> List[EqualityReport]:
    return [check_virtualize_switch(diagram, c) for c in range(diagram.crossing_count)]


def _graph_case(case, edge_orders: int):
    index, seed, graph, exhaustive = case
    return _graph_checks(graph, seed * 1000003 + index, edge_orders, exhaustive)


def _parallel_map(func: Callable, items: Sequence, jobs: int) -> Iterable:
    if jobs <= 1 or len(items) < 2:
        return map(func, items)
    pool = ProcessPoolExecutor(max_workers=jobs, initializer=django.setup)
    try:
        return list(pool.map(func, items, chunksize=max(1, len(items) // (4 * jobs))))
    finally:
        pool.shutdown()


@dataclass
class PropertyTally:
    name: str
    description: str
    checked: int = 0
    failed: int = 0
    failures: List[EqualityReport] = field(default_factory=list)

    def record(self, report: EqualityReport):
        self.checked += 1
        if not report.passed:
            self.failed += 1
            if len(self.failures) < MAX_KEPT_FAILURES:
                self.failures.append(report)


@dataclass
class SuiteSummary:
    seed: int
    max_edges: int
    random_count: int
    max_crossings: int
    tallies: Dict[str, PropertyTally] = field(default_factory=dict)
    expected_not_colorable: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(t.failed == 0 for t in self.tallies.values())

    @property
    def total_checked(self) -> int:
        return sum(t.checked for t in self.tallies.values())

    @property
    def total_failed(self) -> int:
        return sum(t.failed for t in self.tallies.values())

    def record(self, report: EqualityReport):
        self.tallies[report.check].record(report)

    def to_json(self) -> Dict[str, Any]:
        return {
            'passed': self.passed,
            'seed': self.seed,
            'max_edges': self.max_edges,
            'random': self.random_count,
            'max_crossings': self.max_crossings,
            'properties': {
                name: {
                    'checked': tally.checked,
                    'failed': tally.failed,
                    'failures': [report.to_json() for report in tally.failures],
                }
                for name, tally in self.tallies.items()
            },
            'not_colorable': list(self.expected_not_colorable),
        }


def random_family(count: int, max_edges: int, seed: int, max_vertices: int = 3) -> List[SignedCyclicGraph]:
    """Seeded random graphs with up to max_edges edges and mixed signs"""
    rng = random.Random(seed)
    graphs = []
    for _ in range(count):
        graphs.append(random_cyclic_graph(
            vertex_count=rng.randint(1, max_vertices),
            edge_count=rng.randint(0, max_edges),
            sign_bias=0.5,
            seed=rng.randrange(2 ** 32),
        ))
    return graphs


def run_verification_suite(max_edges: int = 4, seed: int = 0, random_count: int = 200,
                           jobs: int = 1, random_max_edges: int = 8, r2_cases: int = 50,
                           edge_orders: int = 5, max_crossings: int = 3, max_vertices: int = 3,
                           diagrams: Sequence[VirtualDiagram] = ()) -> SuiteSummary:
    """
    Run every property over:
    - all signed cyclic graphs with <= max_edges edges on <= max_vertices vertices
    - random_count seeded random graphs with <= random_max_edges edges
    - the given diagrams (Tait round trip, R2 clasps) and their medial peers
    - every abstract diagram with <= max_crossings crossings (virtualize/switch)
    """
    summary = SuiteSummary(seed=seed, max_edges=max_edges, random_count=random_count,
                           max_crossings=max_crossings)
    for name, description in PROPERTIES.items():
        summary.tallies[name] = PropertyTally(name, description)

    family = list(enumerate_cyclic_graphs(max_edges, max_vertices))
    randoms = random_family(random_count, random_max_edges, seed, max_vertices)
    logger.info(f"Verification started: {len(family)} exhaustive graphs, {len(randoms)} random graphs, "
                f"{len(diagrams)} diagrams, abstract diagrams up to {max_crossings} crossings")

    cases = [(i, seed, g, True) for i, g in enumerate(family)]
    cases += [(len(family) + i, seed, g, False) for i, g in enumerate(randoms)]
    for reports in _parallel_map(partial(_graph_case, edge_orders=edge_orders), cases, jobs):
        for report in reports:
            summary.record(report)
            if not report.passed:
                logger.warning(f"{report.check} failed for {report.subject}")

    # Tait round trip on the given diagrams; non-colorable ones are listed, not failed
    for diagram in diagrams:
        report = check_tait_equality(diagram)
        if report.colorable is False:
            summary.expected_not_colorable.append(report.subject)
            continue
        summary.record(report)
        summary.record(check_tait_duality(diagram))

    # R2 clasps on the given diagrams and medial diagrams of the random family
    rng = random.Random(seed)
    bases = list(diagrams) + [medial(g, check=False)[0] for g in randoms if g.edge_count <= 6]
    bases = [d for d in bases if d.crossing_count + 2 <= 12 and len(d.arcs()) + d.free_loops >= 1]
    for _ in range(r2_cases if bases else 0):
        diagram = rng.choice(bases)
        real, loops = len(diagram.arcs()), diagram.free_loops
        arc_x = rng.randrange(real + loops)
        choices = [k for k in range(real + loops) if k != arc_x or k >= real]
        arc_y = rng.choice(choices)
        summary.record(check_r2_invariance(diagram, arc_x, arc_y))

    abstract = list(enumerate_diagrams(max_crossings))
    for reports in _parallel_map(_diagram_checks, abstract, jobs):
        for report in reports:
            summary.record(report)
            if not report.passed:
                logger.warning(f"{report.check} failed for {report.subject}")

    level = logging.INFO if summary.passed else logging.WARNING
    logger.log(level, f"Verification finished: {summary.total_checked} checks, {summary.total_failed} failed")
    return summary
