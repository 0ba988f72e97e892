"""
Abstract virtual link diagrams

Crossing c owns global ports 4c+0 .. 4c+3 in counterclockwise order. The
under-strand runs 0 <-> 2 and the over-strand 1 <-> 3. Arcs are a perfect
matching on ports (the mate involution). Virtual crossings are not stored:
a diagram is only the port matching plus a count of crossingless loops.
"""

from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, List, Tuple

from apps.core.exceptions import IncompleteStateError, InvariantViolation, UnknownCrossingError

SMOOTHING_A = 'A'
SMOOTHING_B = 'B'

# Ports joined inside a crossing by each smoothing, as port offsets
SMOOTHING_PAIRS = {
    SMOOTHING_A: ((0, 1), (2, 3)),
    SMOOTHING_B: ((0, 3), (1, 2)),
}


def port(crossing: int, offset: int) -> int:
    return 4 * crossing + offset


def crossing_of(p: int) -> int:
    return p // 4


def offset_of(p: int) -> int:
    return p % 4


def through(p: int) -> int:
    """The port on the other side of the same strand at this crossing"""
    return p - p % 4 + (p % 4 + 2) % 4


@dataclass(frozen=True)
class VirtualDiagram:
    """
    mate[p] is the port joined to p by an arc; free_loops counts closed
    curves without crossings
    """
    mate: Tuple[int, ...] = ()
    free_loops: int = 0

    def __post_init__(self):
        object.__setattr__(self, 'mate', tuple(self.mate))
        size = len(self.mate)
        if size % 4:
            raise InvariantViolation('four ports per crossing', f"{size} ports")
        if self.free_loops < 0:
            raise InvariantViolation('free loop count', f"negative count {self.free_loops}")
        for p, q in enumerate(self.mate):
            if not 0 <= q < size:
                raise InvariantViolation('arcs form a perfect matching', f"port {p} joined to missing port {q}")
            if q == p:
                raise InvariantViolation('arcs form a perfect matching', f"port {p} joined to itself")
            if self.mate[q] != p:
                raise InvariantViolation(
                    'arcs form a perfect matching',
                    f"port {p} joined to {q} but {q} joined to {self.mate[q]}",
                )

    @classmethod
    def from_arcs(cls, crossing_count: int, arcs: Iterable[Tuple[int, int]],
                  free_loops: int = 0) -> 'VirtualDiagram':
        mate = [-1] * (4 * crossing_count)
        for first, second in arcs:
            for p in (first, second):
                if not 0 <= p < len(mate):
                    raise InvariantViolation('arcs form a perfect matching', f"port {p} out of range")
                if mate[p] != -1:
                    raise InvariantViolation('arcs form a perfect matching', f"port {p} used twice")
            mate[first], mate[second] = second, first
        unmatched = [p for p, q in enumerate(mate) if q == -1]
        if unmatched:
            raise InvariantViolation('arcs form a perfect matching', f"ports {unmatched} have no arc")
        return cls(tuple(mate), free_loops)

    @classmethod
    def unknot(cls, loops: int = 1) -> 'VirtualDiagram':
        return cls((), loops)

    @property
    def crossing_count(self) -> int:
        return len(self.mate) // 4

    @property
    def port_count(self) -> int:
        return len(self.mate)

    @property
    def component_count(self) -> int:
        from apps.diagram.services import trace_components
        return len(trace_components(self)) + self.free_loops

    def arcs(self) -> List[Tuple[int, int]]:
        """Real arcs as (low port, high port), ordered by low port"""
        return [(p, q) for p, q in enumerate(self.mate) if p < q]

    def check_crossing(self, crossing: int):
        if not 0 <= crossing < self.crossing_count:
            raise UnknownCrossingError(crossing)


@dataclass(frozen=True)
class State:
    """One smoothing choice per crossing, indexed by crossing id"""
    choices: Tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'choices', tuple(self.choices))
        for choice in self.choices:
            if choice not in SMOOTHING_PAIRS:
                raise InvariantViolation('smoothing choice', f"unknown smoothing {choice!r}")

    @classmethod
    def from_mask(cls, crossing_count: int, mask: int) -> 'State':
        """Bit i set means crossing i takes the B-smoothing"""
        return cls(tuple(SMOOTHING_B if mask >> i & 1 else SMOOTHING_A for i in range(crossing_count)))

    @classmethod
    def uniform(cls, crossing_count: int, choice: str) -> 'State':
        return cls((choice,) * crossing_count)

    def check(self, diagram: VirtualDiagram):
        if len(self.choices) != diagram.crossing_count:
            raise IncompleteStateError(
                f"state has {len(self.choices)} choices for {diagram.crossing_count} crossings"
            )

    @property
    def a_count(self) -> int:
        return self.choices.count(SMOOTHING_A)

    @property
    def b_count(self) -> int:
        return self.choices.count(SMOOTHING_B)

    def toggled(self, crossing: int) -> 'State':
        flipped = SMOOTHING_B if self.choices[crossing] == SMOOTHING_A else SMOOTHING_A
        return State(self.choices[:crossing] + (flipped,) + self.choices[crossing + 1:])

    def __str__(self):
        return ''.join(self.choices)


@dataclass(frozen=True)
class FaceStructure:
    """
    Faces of the Carter surface

    faces[i] lists, in walking order, the ports p whose corner (between the
    port before p and p itself, counterclockwise) lies in face i. The side of
    arc {p, mate p} next to face_of[p] is the one walked from p. Each free
    loop adds two further faces with no corners.
    """
    faces: Tuple[Tuple[int, ...], ...]
    face_of: Tuple[int, ...]
    free_loop_faces: int
    surface_components: int
    crossing_count: int

    @property
    def face_count(self) -> int:
        return len(self.faces) + self.free_loop_faces

    @property
    def euler_characteristic(self) -> int:
        return self.crossing_count - 2 * self.crossing_count + self.face_count

    @property
    def genus(self) -> int:
        twice = 2 * self.surface_components - self.euler_characteristic
        if twice < 0 or twice % 2:
            raise InvariantViolation('euler formula', f"2c - chi = {twice}")
        return twice // 2


@dataclass(frozen=True)
class Coloring:
    """colors[i] is 0 (black) or 1 (white) for face i of a FaceStructure"""
    colors: Tuple[int, ...]

    def complement(self) -> 'Coloring':
        return Coloring(tuple(1 - c for c in self.colors))

    def black_faces(self) -> List[int]:
        return [i for i, c in enumerate(self.colors) if c == 0]


@dataclass(frozen=True)
class Orientation:
    """
    reversed[k] flips component k (components as ordered by trace_components);
    entries holds every port through which a strand enters its crossing
    """
    reversed: Tuple[bool, ...] = ()
    entries: FrozenSet[int] = field(default_factory=frozenset)
