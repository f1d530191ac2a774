"""Cycle tracing by the right-turn rule, edge colourings and the ribbon-map oracle."""
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .diagram import (
    ArcId, ArcSide, ChordId, ColorId, Decoration, Family, GaussDiagram,
    Side, StaleDecorationError, require_valid,
)

CO, COUNTER = Side.CO, Side.COUNTER


@dataclass(frozen=True)
class CrossingFrame:
    chord: ChordId
    sign: int
    a: ArcId  # incoming plus arc
    b: ArcId  # outgoing plus arc
    c: ArcId  # incoming minus arc
    d: ArcId  # outgoing minus arc


def frame(d: GaussDiagram, chord: ChordId) -> CrossingFrame:
    return CrossingFrame(
        chord=chord,
        sign=d.sign(chord),
        a=d.arc_before(chord, Family.PLUS),
        b=d.arc_after(chord, Family.PLUS),
        c=d.arc_before(chord, Family.MINUS),
        d=d.arc_after(chord, Family.MINUS),
    )


@dataclass(frozen=True)
class CycleSet:
    orbits: Tuple[Tuple[ArcSide, ...], ...]

    @property
    def count(self) -> int:
        return len(self.orbits)


def transition_map(d: GaussDiagram) -> Dict[ArcSide, ArcSide]:
    """The right-turn successor of every arc side."""
    step: Dict[ArcSide, ArcSide] = {}
    for chord in d.chords:
        f = frame(d, chord)
        if f.sign > 0:
            pairs = [((f.a, CO), (f.c, COUNTER)), ((f.c, CO), (f.b, CO)),
                     ((f.b, COUNTER), (f.d, CO)), ((f.d, COUNTER), (f.a, COUNTER))]
        else:
            pairs = [((f.a, CO), (f.d, CO)), ((f.c, CO), (f.a, COUNTER)),
                     ((f.d, COUNTER), (f.b, CO)), ((f.b, COUNTER), (f.c, COUNTER))]
        for src, dst in pairs:
            step[ArcSide(*src)] = ArcSide(*dst)
    for cid in d.chordless_circles():
        whole = d.arcs_of(cid)[0]
        for side in (CO, COUNTER):
            step[ArcSide(whole, side)] = ArcSide(whole, side)
    return step


def _orbits(step: Mapping, key) -> Tuple[Tuple, ...]:
    seen = set()
    orbits = []
    for start in sorted(step, key=key):
        if start in seen:
            continue
        orbit = []
        x = start
        while x not in seen:
            seen.add(x)
            orbit.append(x)
            x = step[x]
        orbits.append(tuple(orbit))
    return tuple(orbits)


def orbits_of(d: GaussDiagram) -> CycleSet:
    return CycleSet(_orbits(transition_map(d), ArcSide.sort_key))


def trace_cycles(d: GaussDiagram) -> CycleSet:
    """Orbits of the transition permutation, each starting at its minimal side."""
    require_valid(d)
    return orbits_of(d)


def decorate(d: GaussDiagram, colors: Optional[Sequence[ColorId]] = None) -> Decoration:
    """Trace `d` and colour its cycles; all-distinct colours 1..|c| by default."""
    cycles = trace_cycles(d)
    if colors is None:
        colors = range(1, cycles.count + 1)
    colors = tuple(colors)
    if len(colors) != cycles.count:
        raise StaleDecorationError(f"expected {cycles.count} colours, got {len(colors)}")
    return Decoration(cycles.orbits, colors)


def decorate_like(d: GaussDiagram, side_colors: Mapping[ArcSide, ColorId]) -> Decoration:
    """Trace `d` and colour each cycle from the colours given for its sides."""
    cycles = trace_cycles(d)
    colors = []
    for orbit in cycles.orbits:
        found = {side_colors[s] for s in orbit if s in side_colors}
        if len(found) != 1:
            raise StaleDecorationError(
                f"cycle through {orbit[0]} carries {len(found)} colours, expected 1")
        colors.append(found.pop())
    return Decoration(cycles.orbits, tuple(colors))


def check_decoration(d: GaussDiagram, deco: Decoration) -> None:
    if trace_cycles(d).orbits != deco.cycles:
        raise StaleDecorationError("decoration cycles differ from traced cycles")


def infer_edge_colorings(d: GaussDiagram, deco: Decoration) -> Dict[ArcId, Tuple[ColorId, ColorId]]:
    """Arc -> (colour of its co-directed side, colour of its counter-directed side)."""
    check_decoration(d, deco)
    return {arc: deco.coloring(arc) for arc in d.all_arcs()}


@dataclass
class ChordColorReport:
    violations: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def check_chord_color_equalities(d: GaussDiagram, deco: Decoration) -> ChordColorReport:
    report = ChordColorReport()
    try:
        pairs = infer_edge_colorings(d, deco)
    except StaleDecorationError as exc:
        report.violations.append(str(exc))
        return report
    for chord in d.chords:
        f = frame(d, chord)
        a1, a2 = pairs[f.a]
        b1, b2 = pairs[f.b]
        c1, c2 = pairs[f.c]
        d1, d2 = pairs[f.d]
        expected = (c2, d2, c1, d1) if f.sign > 0 else (d1, c1, d2, c2)
        if (a1, a2, b1, b2) != expected:
            report.violations.append(
                f"chord {chord} ({'+' if f.sign > 0 else '-'}): "
                f"(a1,a2,b1,b2)={(a1, a2, b1, b2)} but expected {expected}")
    return report


# Ribbon graph as a combinatorial map over half-edges

Dart = Tuple[ArcId, str]
TAIL, HEAD = "tail", "head"


@dataclass(frozen=True)
class RibbonMap:
    darts: Tuple[Dart, ...]
    rotation: Dict[Dart, Dart]
    pairing: Dict[Dart, Dart]
    chordless: int = 0

    def _orbits(self, perm: Mapping[Dart, Dart]) -> Tuple[Tuple[Dart, ...], ...]:
        return _orbits(perm, lambda dart: dart[0].sort_key() + (dart[1],))

    def vertices(self):
        return self._orbits(self.rotation)

    def edges(self):
        return self._orbits(self.pairing)

    def faces(self):
        return self._orbits({x: self.rotation[self.pairing[x]] for x in self.darts})

    def euler_characteristic(self) -> int:
        """V - E of the graph; chordless circles are not counted."""
        return len(self.vertices()) - len(self.edges())

    @property
    def boundary_components(self) -> int:
        # every chordless circle is an annulus with two boundary circles
        return len(self.faces()) + 2 * self.chordless


def build_ribbon_map(d: GaussDiagram) -> RibbonMap:
    require_valid(d)
    rotation: Dict[Dart, Dart] = {}
    for chord in d.chords:
        f = frame(d, chord)
        a, b, c, dd = (f.a, HEAD), (f.b, TAIL), (f.c, HEAD), (f.d, TAIL)
        order = [b, dd, a, c] if f.sign > 0 else [b, c, a, dd]
        for i, dart in enumerate(order):
            rotation[dart] = order[(i + 1) % 4]
    pairing: Dict[Dart, Dart] = {}
    for arc in d.all_arcs():
        if arc.is_whole:
            continue
        pairing[(arc, TAIL)] = (arc, HEAD)
        pairing[(arc, HEAD)] = (arc, TAIL)
    darts = tuple(sorted(rotation, key=lambda x: x[0].sort_key() + (x[1],)))
    return RibbonMap(darts, rotation, pairing, chordless=len(d.chordless_circles()))
