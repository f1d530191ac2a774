"""Gauss diagram data model: circles, signed chords, arcs and arc sides."""
import enum
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

import networkx as nx

from .utils import natural_sort_key

ChordId = str
ColorId = int

WHOLE = -1


class GaussDiagramError(ValueError):
    """Base class for every domain error raised by this package."""


class InvalidDiagramError(GaussDiagramError):
    def __init__(self, message: str, violations: Optional[List[str]] = None):
        super().__init__(message)
        self.violations = violations or []


class StaleDecorationError(GaussDiagramError):
    pass


class MoveError(GaussDiagramError):
    pass


class PreconditionError(GaussDiagramError):
    pass


class ParseError(GaussDiagramError):
    def __init__(self, message: str, line: int = 0, column: int = 0):
        super().__init__(f"line {line}, column {column}: {message}" if line else message)
        self.line = line
        self.column = column


class UnknownExampleError(GaussDiagramError):
    def __init__(self, name: str, suggestions: Sequence[str] = ()):
        hint = f" (did you mean: {', '.join(suggestions)}?)" if suggestions else ""
        super().__init__(f"unknown example '{name}'{hint}")
        self.name = name
        self.suggestions = list(suggestions)


class Family(str, enum.Enum):
    PLUS = "plus"
    MINUS = "minus"

    @property
    def opposite(self) -> "Family":
        return Family.MINUS if self is Family.PLUS else Family.PLUS

    @property
    def order(self) -> int:
        return 0 if self is Family.PLUS else 1


class Side(str, enum.Enum):
    CO = "co"
    COUNTER = "counter"

    @property
    def other(self) -> "Side":
        return Side.COUNTER if self is Side.CO else Side.CO


class CircleId(NamedTuple):
    family: Family
    index: int

    def __str__(self) -> str:
        return f"{self.family.value}:{self.index}"

    def sort_key(self) -> Tuple[int, int]:
        return (self.family.order, self.index)


class ArcId(NamedTuple):
    """The arc that follows the endpoint at `position` on `circle`.

    Chordless circles have a single arc with position WHOLE.
    """
    circle: CircleId
    position: int

    @property
    def is_whole(self) -> bool:
        return self.position == WHOLE

    def __str__(self) -> str:
        pos = "*" if self.is_whole else str(self.position)
        return f"{self.circle}:{pos}"

    def sort_key(self) -> Tuple[int, int, int]:
        return (self.circle.family.order, self.circle.index, self.position)


class ArcSide(NamedTuple):
    arc: ArcId
    side: Side

    def __str__(self) -> str:
        return f"{self.arc}/{self.side.value}"

    def sort_key(self) -> Tuple[int, int, int, int]:
        return self.arc.sort_key() + (0 if self.side is Side.CO else 1,)


@dataclass(frozen=True)
class GaussDiagram:
    plus_circles: Tuple[Tuple[ChordId, ...], ...] = ()
    minus_circles: Tuple[Tuple[ChordId, ...], ...] = ()
    chord_signs: Dict[ChordId, int] = field(default_factory=dict)

    @classmethod
    def build(cls, plus: Sequence[Sequence[ChordId]], minus: Sequence[Sequence[ChordId]],
              signs: Dict[ChordId, int]) -> "GaussDiagram":
        return cls(tuple(tuple(c) for c in plus), tuple(tuple(c) for c in minus), dict(signs))

    @property
    def g_plus(self) -> int:
        return len(self.plus_circles)

    @property
    def g_minus(self) -> int:
        return len(self.minus_circles)

    @property
    def num_chords(self) -> int:
        return len(self.chord_signs)

    @property
    def chords(self) -> List[ChordId]:
        return sorted(self.chord_signs, key=natural_sort_key)

    @property
    def is_empty(self) -> bool:
        return not self.plus_circles and not self.minus_circles

    def circles(self, family: Family) -> Tuple[Tuple[ChordId, ...], ...]:
        return self.plus_circles if family is Family.PLUS else self.minus_circles

    def circle_ids(self, family: Optional[Family] = None) -> List[CircleId]:
        families = [family] if family else [Family.PLUS, Family.MINUS]
        return [CircleId(f, i) for f in families for i in range(len(self.circles(f)))]

    def has_circle(self, cid: CircleId) -> bool:
        return 0 <= cid.index < len(self.circles(cid.family))

    def circle(self, cid: CircleId) -> Tuple[ChordId, ...]:
        if not self.has_circle(cid):
            raise GaussDiagramError(f"unknown circle {cid}")
        return self.circles(cid.family)[cid.index]

    def sign(self, chord: ChordId) -> int:
        try:
            return self.chord_signs[chord]
        except KeyError:
            raise GaussDiagramError(f"unknown chord '{chord}'") from None

    @cached_property
    def _endpoints(self) -> Dict[Tuple[Family, ChordId], Tuple[CircleId, int]]:
        table = {}
        for cid in self.circle_ids():
            for pos, chord in enumerate(self.circle(cid)):
                table.setdefault((cid.family, chord), (cid, pos))
        return table

    def endpoint(self, chord: ChordId, family: Family) -> Tuple[CircleId, int]:
        try:
            return self._endpoints[(family, chord)]
        except KeyError:
            raise GaussDiagramError(f"chord '{chord}' has no {family.value} endpoint") from None

    def arcs_of(self, cid: CircleId) -> List[ArcId]:
        n = len(self.circle(cid))
        if n == 0:
            return [ArcId(cid, WHOLE)]
        return [ArcId(cid, pos) for pos in range(n)]

    def all_arcs(self, family: Optional[Family] = None) -> List[ArcId]:
        return [arc for cid in self.circle_ids(family) for arc in self.arcs_of(cid)]

    def arc_sides(self) -> List[ArcSide]:
        return [ArcSide(arc, side) for arc in self.all_arcs() for side in (Side.CO, Side.COUNTER)]

    @property
    def num_arcs(self) -> int:
        return len(self.all_arcs())

    def has_arc(self, arc: ArcId) -> bool:
        if not self.has_circle(arc.circle):
            return False
        n = len(self.circle(arc.circle))
        return arc.position == WHOLE if n == 0 else 0 <= arc.position < n

    def check_arc(self, arc: ArcId) -> None:
        if not self.has_arc(arc):
            raise GaussDiagramError(f"unknown arc {arc}")

    def tail(self, arc: ArcId) -> Optional[ChordId]:
        if arc.is_whole:
            return None
        return self.circle(arc.circle)[arc.position]

    def head(self, arc: ArcId) -> Optional[ChordId]:
        if arc.is_whole:
            return None
        seq = self.circle(arc.circle)
        return seq[(arc.position + 1) % len(seq)]

    def arc_after(self, chord: ChordId, family: Family) -> ArcId:
        cid, pos = self.endpoint(chord, family)
        return ArcId(cid, pos)

    def arc_before(self, chord: ChordId, family: Family) -> ArcId:
        cid, pos = self.endpoint(chord, family)
        return ArcId(cid, (pos - 1) % len(self.circle(cid)))

    def chordless_circles(self, family: Optional[Family] = None) -> List[CircleId]:
        return [cid for cid in self.circle_ids(family) if not self.circle(cid)]

    def replace(self, plus=None, minus=None, signs=None) -> "GaussDiagram":
        return GaussDiagram.build(
            self.plus_circles if plus is None else plus,
            self.minus_circles if minus is None else minus,
            self.chord_signs if signs is None else signs,
        )

    def fresh_chord(self, taken: Sequence[ChordId] = ()) -> ChordId:
        used = set(self.chord_signs) | set(taken)
        k = len(used) + 1
        while f"h{k}" in used:
            k += 1
        return f"h{k}"


@dataclass(frozen=True)
class Decoration:
    """Traced cycles (canonical order) with one colour per cycle."""
    cycles: Tuple[Tuple[ArcSide, ...], ...]
    colors: Tuple[ColorId, ...]

    def __post_init__(self):
        if len(self.cycles) != len(self.colors):
            raise StaleDecorationError(
                f"{len(self.colors)} colours given for {len(self.cycles)} cycles")

    @cached_property
    def _cycle_index(self) -> Dict[ArcSide, int]:
        return {side: i for i, cycle in enumerate(self.cycles) for side in cycle}

    @property
    def num_cycles(self) -> int:
        return len(self.cycles)

    @property
    def color_set(self) -> List[ColorId]:
        return sorted(set(self.colors))

    @property
    def num_colors(self) -> int:
        return len(set(self.colors))

    def cycle_of(self, side: ArcSide) -> int:
        try:
            return self._cycle_index[side]
        except KeyError:
            raise StaleDecorationError(f"arc side {side} is in no cycle") from None

    def color_of(self, side: ArcSide) -> ColorId:
        return self.colors[self.cycle_of(side)]

    def coloring(self, arc: ArcId) -> Tuple[ColorId, ColorId]:
        return (self.color_of(ArcSide(arc, Side.CO)), self.color_of(ArcSide(arc, Side.COUNTER)))

    def cycles_of_color(self, color: ColorId) -> List[int]:
        return [i for i, c in enumerate(self.colors) if c == color]

    def fresh_color(self) -> ColorId:
        return max(self.colors, default=0) + 1

    def recolored(self, colors: Sequence[ColorId]) -> "Decoration":
        return Decoration(self.cycles, tuple(colors))


@dataclass
class ValidationReport:
    violations: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __str__(self) -> str:
        if self.ok:
            return "valid"
        return "invalid: " + "; ".join(self.violations)


def validate(d: GaussDiagram, deco: Optional[Decoration] = None) -> ValidationReport:
    report = ValidationReport()
    for chord, sign in d.chord_signs.items():
        if sign not in (1, -1):
            report.violations.append(f"chord '{chord}' has sign {sign}, expected +1 or -1")

    for family in (Family.PLUS, Family.MINUS):
        counts: Dict[ChordId, int] = {}
        for seq in d.circles(family):
            for chord in seq:
                counts[chord] = counts.get(chord, 0) + 1
        for chord, n in sorted(counts.items(), key=lambda kv: natural_sort_key(kv[0])):
            if chord not in d.chord_signs:
                report.violations.append(f"dangling chord '{chord}' on a {family.value} circle")
            elif n > 1:
                report.violations.append(
                    f"duplicate endpoint: chord '{chord}' appears {n} times in the {family.value} family")
        for chord in d.chords:
            if chord not in counts:
                report.violations.append(f"chord '{chord}' has no {family.value} endpoint")

    if deco is not None and report.ok:
        from .tracing import orbits_of
        traced = orbits_of(d)
        if traced.orbits != deco.cycles:
            report.violations.append("stale decoration: cycles differ from traced cycles")
        elif (d.num_chords - traced.count) % 2:
            report.violations.append("|h| - |c| is odd")
    elif report.ok:
        from .tracing import orbits_of
        if (d.num_chords - orbits_of(d).count) % 2:
            report.violations.append("|h| - |c| is odd")
    return report


def require_valid(d: GaussDiagram, deco: Optional[Decoration] = None) -> None:
    report = validate(d, deco)
    if not report.ok:
        stale = [v for v in report.violations if v.startswith("stale")]
        if stale and len(stale) == len(report.violations):
            raise StaleDecorationError(stale[0])
        raise InvalidDiagramError(str(report), report.violations)


def arcs_of(d: GaussDiagram, c: CircleId) -> List[ArcId]:
    return d.arcs_of(c)


def connected_components(d: GaussDiagram) -> List[Tuple[List[CircleId], List[CircleId]]]:
    """Circles linked by chords, as (plus circles, minus circles) per component."""
    graph = nx.Graph()
    graph.add_nodes_from(d.circle_ids())
    for chord in d.chords:
        graph.add_edge(d.endpoint(chord, Family.PLUS)[0], d.endpoint(chord, Family.MINUS)[0])
    components = []
    for nodes in nx.connected_components(graph):
        ordered = sorted(nodes, key=CircleId.sort_key)
        components.append((
            [c for c in ordered if c.family is Family.PLUS],
            [c for c in ordered if c.family is Family.MINUS],
        ))
    components.sort(key=lambda comp: min(c.sort_key() for c in comp[0] + comp[1]))
    return components


def is_connected(d: GaussDiagram) -> bool:
    return len(connected_components(d)) <= 1


# Canonical relabeling

Encoding = Tuple[Tuple[int, Tuple[int, ...], Tuple[int, ...]], ...]


@dataclass
class Relabeling:
    diagram: GaussDiagram
    chord_map: Dict[ChordId, ChordId]
    # old circle -> (new circle, rotation): new position = (old position - rotation) mod n
    circle_map: Dict[CircleId, Tuple[CircleId, int]]

    def arc(self, arc: ArcId) -> ArcId:
        new_cid, rot = self.circle_map[arc.circle]
        if arc.is_whole:
            return ArcId(new_cid, WHOLE)
        n = len(self.diagram.circle(new_cid))
        return ArcId(new_cid, (arc.position - rot) % n)

    def side(self, side: ArcSide) -> ArcSide:
        return ArcSide(self.arc(side.arc), side.side)


def _traverse(d: GaussDiagram, start: CircleId, rotation: int):
    labels: Dict[ChordId, int] = {}
    visits: List[Tuple[CircleId, int]] = []
    encoding = []
    queue = deque([(start, rotation)])
    seen = {start}
    while queue:
        cid, rot = queue.popleft()
        seq = d.circle(cid)
        if rot is None:
            rot = min(range(len(seq)), key=lambda i: labels.get(seq[i], len(labels) + 1 + i))
        rotated = seq[rot:] + seq[:rot]
        for chord in rotated:
            if chord not in labels:
                labels[chord] = len(labels) + 1
        visits.append((cid, rot))
        encoding.append((cid.family.order, tuple(labels[c] for c in rotated),
                         tuple(d.sign(c) for c in rotated)))
        for chord in rotated:
            other, _ = d.endpoint(chord, cid.family.opposite)
            if other not in seen:
                seen.add(other)
                queue.append((other, None))
    return tuple(encoding), labels, visits


def canonical_relabeling(d: GaussDiagram) -> Relabeling:
    require_valid(d)
    best_per_component = []
    for plus_ids, minus_ids in connected_components(d):
        chorded = [c for c in plus_ids if d.circle(c)]
        if not chorded:
            continue
        best = min((_traverse(d, cid, rot) for cid in chorded for rot in range(len(d.circle(cid)))),
                   key=lambda t: t[0])
        best_per_component.append(best)
    best_per_component.sort(key=lambda t: t[0])

    chord_map: Dict[ChordId, ChordId] = {}
    circle_map: Dict[CircleId, Tuple[CircleId, int]] = {}
    new_circles: Dict[Family, List[Tuple[ChordId, ...]]] = {Family.PLUS: [], Family.MINUS: []}
    offset = 0
    for _, labels, visits in best_per_component:
        for chord, label in labels.items():
            chord_map[chord] = f"h{offset + label}"
        offset += len(labels)
        for cid, rot in visits:
            seq = d.circle(cid)
            rotated = seq[rot:] + seq[:rot]
            circle_map[cid] = (CircleId(cid.family, len(new_circles[cid.family])), rot)
            new_circles[cid.family].append(tuple(chord_map[c] for c in rotated))
    for cid in d.chordless_circles():
        circle_map[cid] = (CircleId(cid.family, len(new_circles[cid.family])), 0)
        new_circles[cid.family].append(())

    signs = {chord_map[c]: s for c, s in d.chord_signs.items()}
    canon = GaussDiagram.build(new_circles[Family.PLUS], new_circles[Family.MINUS], signs)
    return Relabeling(canon, chord_map, circle_map)


def canonicalize(d: GaussDiagram) -> GaussDiagram:
    """Relabel chords and circles into a deterministic order.

    Two diagrams that differ only by chord names, circle order and rotation
    of circles canonicalize to equal values.
    """
    return canonical_relabeling(d).diagram


def disjoint_union(d1: GaussDiagram, deco1: Decoration, d2: GaussDiagram, deco2: Decoration,
                   share_colors: bool = False) -> Tuple[GaussDiagram, Decoration]:
    """Place two decorated diagrams side by side.

    Chords of the second diagram are renamed apart. Its colours are shifted
    past the first diagram's unless share_colors is set, in which case equal
    colour ids are identified.
    """
    from .tracing import decorate_like

    rename = {}
    taken = list(d1.chord_signs)
    for chord in d2.chords:
        new = d1.fresh_chord(taken) if chord in d1.chord_signs or chord in taken else chord
        rename[chord] = new
        taken.append(new)
    signs = dict(d1.chord_signs)
    signs.update({rename[c]: s for c, s in d2.chord_signs.items()})
    union = GaussDiagram.build(
        list(d1.plus_circles) + [[rename[c] for c in seq] for seq in d2.plus_circles],
        list(d1.minus_circles) + [[rename[c] for c in seq] for seq in d2.minus_circles],
        signs,
    )
    shift = 0 if share_colors else max(deco1.colors, default=0)

    def moved(side: ArcSide) -> ArcSide:
        cid = side.arc.circle
        offset = d1.g_plus if cid.family is Family.PLUS else d1.g_minus
        return ArcSide(ArcId(CircleId(cid.family, cid.index + offset), side.arc.position), side.side)

    side_colors = {side: deco1.colors[i] for i, cycle in enumerate(deco1.cycles) for side in cycle}
    for i, cycle in enumerate(deco2.cycles):
        for side in cycle:
            side_colors[moved(side)] = deco2.colors[i] + shift
    return union, decorate_like(union, side_colors)
