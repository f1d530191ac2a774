"""The move calculus on decorated Gauss diagrams.

Every move is pure: it returns a new diagram and decoration and leaves its
inputs untouched. Colours are carried across a move by mapping arc sides of
the result back to arc sides of the input; the result is then re-traced and
checked against the genus and boundary-genus invariants.
"""
import enum
import logging
from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple, Union

import networkx as nx

from .diagram import (
    WHOLE, ArcId, ArcSide, ChordId, CircleId, ColorId, Decoration, Family,
    GaussDiagram, MoveError, PreconditionError, Side, canonicalize,
    connected_components,
)
from .topology import boundary_genera
from .tracing import check_decoration, decorate_like, trace_cycles

logger = logging.getLogger(__name__)

CO, COUNTER = Side.CO, Side.COUNTER


class RCase(str, enum.Enum):
    A1B1 = "A1B1"
    A1B2 = "A1B2"
    A2B1 = "A2B1"
    A2B2 = "A2B2"

    @property
    def plus_side(self) -> Side:
        return CO if self.value[1] == "1" else COUNTER

    @property
    def minus_side(self) -> Side:
        return CO if self.value[3] == "1" else COUNTER

    @property
    def negative_first_on_plus(self) -> bool:
        return self.minus_side is CO

    @property
    def negative_first_on_minus(self) -> bool:
        return self in (RCase.A2B1, RCase.A2B2)

    @classmethod
    def from_sides(cls, plus_side: Side, minus_side: Side) -> "RCase":
        return cls(f"A{1 if plus_side is CO else 2}B{1 if minus_side is CO else 2}")


@dataclass(frozen=True)
class Eps:
    circle: CircleId


@dataclass(frozen=True)
class R:
    plus_arc: ArcId
    minus_arc: ArcId
    case: RCase


@dataclass(frozen=True)
class RInv:
    positive_chord: ChordId
    negative_chord: ChordId


@dataclass(frozen=True)
class Slide:
    slider_arc: ArcId
    along_arc: ArcId
    reversed: bool = False

    @property
    def slider(self) -> CircleId:
        return self.slider_arc.circle

    @property
    def along(self) -> CircleId:
        return self.along_arc.circle


@dataclass(frozen=True)
class SlideInv:
    slider: CircleId
    along: CircleId


@dataclass(frozen=True)
class Stab:
    color: ColorId
    sign: int = 1


@dataclass(frozen=True)
class StabInv:
    plus_circle: CircleId
    minus_circle: CircleId


@dataclass(frozen=True)
class Bubble:
    family: Family
    color: ColorId
    new_color: ColorId
    side: Side = CO  # side carrying new_color


@dataclass(frozen=True)
class BubbleInv:
    circle: CircleId


MoveSpec = Union[Eps, R, RInv, Slide, SlideInv, Stab, StabInv, Bubble, BubbleInv]
Script = List[MoveSpec]
SideMap = Dict[ArcSide, List[ArcSide]]
Invariants = Tuple[int, int, int]


class _Inconsistent(MoveError):
    pass


class _Fresh:
    def __init__(self, deco: Decoration):
        self.next = deco.fresh_color()

    def __call__(self) -> ColorId:
        color = self.next
        self.next += 1
        return color


def _link(side_map: SideMap, new_arc: ArcId, old_arcs: Iterable[ArcId]) -> None:
    old_arcs = list(old_arcs)
    for side in (CO, COUNTER):
        side_map.setdefault(ArcSide(new_arc, side), []).extend(ArcSide(o, side) for o in old_arcs)


def _insert_after(seq: Sequence[ChordId], position: int, items: Sequence[ChordId]) -> List[ChordId]:
    if position == WHOLE:
        return list(items)
    return list(seq[:position + 1]) + list(items) + list(seq[position + 1:])


def _side_colors(deco: Decoration) -> Dict[ArcSide, ColorId]:
    return {side: deco.colors[i] for i, cycle in enumerate(deco.cycles) for side in cycle}


def _invariants(d: GaussDiagram, deco: Decoration) -> Invariants:
    report = boundary_genera(d, deco)
    return report.g_s, report.dg_plus, report.dg_minus


def _require_invariants(before: Invariants, d: GaussDiagram, deco: Decoration, what: str) -> None:
    after = _invariants(d, deco)
    if after != before:
        raise MoveError(f"{what} changes (genus, dg+, dg-) from {before} to {after}")


def _color_forward(d: GaussDiagram, deco: Decoration, side_map: SideMap,
                   fresh: _Fresh, split_fresh: bool) -> Decoration:
    """Carry colours forward; unmapped cycles get fresh colours.

    An old cycle that now runs through two new cycles is split: with
    split_fresh both pieces get fresh colours and the other cycles of the
    old colour follow the first piece, otherwise only the second piece is
    recoloured.
    """
    cycles = trace_cycles(d).orbits
    colors: List[Optional[ColorId]] = []
    spread: Dict[int, List[int]] = defaultdict(list)
    for i, orbit in enumerate(cycles):
        sources = {deco.cycle_of(old) for side in orbit for old in side_map.get(side, ())}
        found = {deco.colors[k] for k in sources}
        if len(found) > 1:
            raise _Inconsistent(f"cycle through {orbit[0]} would join colours {sorted(found)}")
        for k in sources:
            spread[k].append(i)
        colors.append(found.pop() if found else None)
    colors = [fresh() if c is None else c for c in colors]

    for k in sorted(spread):
        pieces = spread[k]
        if len(pieces) == 1:
            continue
        if len(pieces) > 2:
            raise _Inconsistent(f"cycle {k} would split into {len(pieces)} pieces")
        second = pieces[1]
        old = deco.colors[k]
        if split_fresh:
            c1, c2 = fresh(), fresh()
            colors = [c1 if (c == old and j != second) else c for j, c in enumerate(colors)]
            colors[second] = c2
        else:
            colors[second] = fresh()
    return Decoration(cycles, tuple(colors))


def _color_merge(d: GaussDiagram, deco: Decoration, side_map: SideMap, fresh: _Fresh) -> Decoration:
    """Carry colours back across a deletion; colours meeting in one cycle merge to the smallest."""
    cycles = trace_cycles(d).orbits
    graph = nx.Graph()
    sources = []
    for orbit in cycles:
        found = sorted({deco.color_of(old) for side in orbit for old in side_map.get(side, ())})
        graph.add_nodes_from(found)
        graph.add_edges_from(zip(found, found[1:]))
        sources.append(found)
    rep = {c: min(comp) for comp in nx.connected_components(graph) for c in comp}
    return Decoration(cycles, tuple(rep[found[0]] if found else fresh() for found in sources))


def _deletion_map(old: GaussDiagram, new: GaussDiagram, excluded: Set[ArcId]) -> SideMap:
    """Map each arc of `new` to the old arcs it replaces, for diagrams obtained by removing chords."""
    side_map: SideMap = {}
    for cid in new.circle_ids():
        old_seq, new_seq = old.circle(cid), new.circle(cid)
        if not new_seq:
            _link(side_map, ArcId(cid, WHOLE), [a for a in old.arcs_of(cid) if a not in excluded])
            continue
        for j, u in enumerate(new_seq):
            v = new_seq[(j + 1) % len(new_seq)]
            _, i = old.endpoint(u, cid.family)
            path = []
            while True:
                path.append(ArcId(cid, i))
                i = (i + 1) % len(old_seq)
                if old_seq[i] == v:
                    break
            _link(side_map, ArcId(cid, j), [a for a in path if a not in excluded])
    return side_map


def _circle_shift(removed: Sequence[CircleId]):
    def moved(cid: CircleId) -> CircleId:
        lower = sum(1 for r in removed if r.family is cid.family and r.index < cid.index)
        return CircleId(cid.family, cid.index - lower)
    return moved


def _drop_circles(d: GaussDiagram, deco: Decoration, removed: Sequence[CircleId],
                  drop_chords: Sequence[ChordId] = ()) -> Tuple[GaussDiagram, Decoration]:
    gone = set(removed)
    moved = _circle_shift(removed)
    plus = [seq for i, seq in enumerate(d.plus_circles) if CircleId(Family.PLUS, i) not in gone]
    minus = [seq for i, seq in enumerate(d.minus_circles) if CircleId(Family.MINUS, i) not in gone]
    signs = {c: s for c, s in d.chord_signs.items() if c not in drop_chords}
    new_d = d.replace(plus=plus, minus=minus, signs=signs)
    side_colors = {ArcSide(ArcId(moved(side.arc.circle), side.arc.position), side.side): color
                   for side, color in _side_colors(deco).items() if side.arc.circle not in gone}
    return new_d, decorate_like(new_d, side_colors)


def _require_circle(d: GaussDiagram, cid: CircleId) -> None:
    if not d.has_circle(cid):
        raise MoveError(f"unknown circle {cid}")


def _require_arc(d: GaussDiagram, arc: ArcId) -> None:
    if not d.has_arc(arc):
        raise MoveError(f"unknown arc {arc}")


# epsilon

def eps_move(d: GaussDiagram, deco: Decoration, circle: CircleId) -> Tuple[GaussDiagram, Decoration]:
    """Reverse a circle and the signs of every chord ending on it."""
    check_decoration(d, deco)
    _require_circle(d, circle)
    seq = d.circle(circle)
    n = len(seq)
    signs = dict(d.chord_signs)
    for chord in seq:
        signs[chord] = -signs[chord]
    circles = [list(c) for c in d.circles(circle.family)]
    circles[circle.index] = list(reversed(seq))
    new_d = (d.replace(plus=circles, signs=signs) if circle.family is Family.PLUS
             else d.replace(minus=circles, signs=signs))

    side_colors = {}
    for side, color in _side_colors(deco).items():
        arc = side.arc
        if arc.circle == circle:
            position = WHOLE if arc.is_whole else (n - 2 - arc.position) % n
            side = ArcSide(ArcId(circle, position), side.side.other)
        side_colors[side] = color
    logger.debug("eps on %s", circle)
    return new_d, decorate_like(new_d, side_colors)


# R and its inverse

def r_move(d: GaussDiagram, deco: Decoration, plus_arc: ArcId, minus_arc: ArcId,
           case: RCase) -> Tuple[GaussDiagram, Decoration]:
    """Insert a cancelling pair of chords p (+) and m (-) across plus_arc and minus_arc."""
    check_decoration(d, deco)
    if plus_arc.circle.family is not Family.PLUS or minus_arc.circle.family is not Family.MINUS:
        raise MoveError("R needs a plus-family arc and a minus-family arc")
    _require_arc(d, plus_arc)
    _require_arc(d, minus_arc)
    case = RCase(case)
    a = deco.color_of(ArcSide(plus_arc, case.plus_side))
    b = deco.color_of(ArcSide(minus_arc, case.minus_side))
    if a != b:
        raise MoveError(f"case {case.value} needs {plus_arc} {case.plus_side.value} and "
                        f"{minus_arc} {case.minus_side.value} to share a colour, got {a} and {b}")
    before = _invariants(d, deco)

    p = d.fresh_chord()
    m = d.fresh_chord([p])
    plus_pair = (m, p) if case.negative_first_on_plus else (p, m)
    minus_pair = (m, p) if case.negative_first_on_minus else (p, m)
    plus = [list(c) for c in d.plus_circles]
    minus = [list(c) for c in d.minus_circles]
    plus[plus_arc.circle.index] = _insert_after(plus[plus_arc.circle.index], plus_arc.position, plus_pair)
    minus[minus_arc.circle.index] = _insert_after(minus[minus_arc.circle.index], minus_arc.position, minus_pair)
    signs = dict(d.chord_signs)
    signs[p], signs[m] = 1, -1
    new_d = d.replace(plus=plus, minus=minus, signs=signs)

    target = {Family.PLUS: plus_arc, Family.MINUS: minus_arc}
    last = {Family.PLUS: plus_pair[1], Family.MINUS: minus_pair[1]}
    side_map: SideMap = {}
    for arc in new_d.all_arcs():
        if arc.is_whole:
            _link(side_map, arc, [arc])
            continue
        u = new_d.tail(arc)
        family = arc.circle.family
        if u in (p, m):
            if u == last[family]:
                _link(side_map, arc, [target[family]])
        else:
            _link(side_map, arc, [d.arc_after(u, family)])

    new_deco = _color_forward(new_d, deco, side_map, _Fresh(deco), split_fresh=True)
    _require_invariants(before, new_d, new_deco, "R")
    logger.debug("R %s at %s, %s: added %s, %s", case.value, plus_arc, minus_arc, p, m)
    return new_d, new_deco


def _middle_arcs(d: GaussDiagram, p: ChordId, m: ChordId, family: Family) -> List[ArcId]:
    cp, ip = d.endpoint(p, family)
    cm, im = d.endpoint(m, family)
    if cp != cm:
        raise MoveError(f"{p} and {m} lie on different {family.value} circles")
    n = len(d.circle(cp))
    middles = []
    if (ip + 1) % n == im:
        middles.append(ArcId(cp, ip))
    if (im + 1) % n == ip:
        middles.append(ArcId(cp, im))
    if not middles:
        raise MoveError(f"{p} and {m} are not adjacent on {cp}")
    return middles


def r_inverse(d: GaussDiagram, deco: Decoration, positive_chord: ChordId,
              negative_chord: ChordId) -> Tuple[GaussDiagram, Decoration]:
    """Remove an adjacent cancelling pair bounding a bigon of its own colour."""
    check_decoration(d, deco)
    p, m = positive_chord, negative_chord
    for chord in (p, m):
        if chord not in d.chord_signs:
            raise MoveError(f"unknown chord '{chord}'")
    if p == m:
        raise MoveError("R inverse needs two distinct chords")
    if d.sign(p) != 1 or d.sign(m) != -1:
        raise MoveError(f"signs of {p} and {m} are not opposite (+, -)")
    plus_mid = _middle_arcs(d, p, m, Family.PLUS)
    minus_mid = _middle_arcs(d, p, m, Family.MINUS)

    bigon = None
    for i, orbit in enumerate(deco.cycles):
        arcs = {side.arc for side in orbit}
        if len(orbit) == 2 and arcs & set(plus_mid) and arcs & set(minus_mid):
            bigon = i
            break
    if bigon is None:
        raise MoveError(f"no bigon between {p} and {m}")
    if len(deco.cycles_of_color(deco.colors[bigon])) > 1:
        raise MoveError(f"bigon colour {deco.colors[bigon]} is shared with other cycles")
    excluded = {side.arc for side in deco.cycles[bigon]}
    before = _invariants(d, deco)

    plus = [[c for c in seq if c not in (p, m)] for seq in d.plus_circles]
    minus = [[c for c in seq if c not in (p, m)] for seq in d.minus_circles]
    signs = {c: s for c, s in d.chord_signs.items() if c not in (p, m)}
    new_d = d.replace(plus=plus, minus=minus, signs=signs)
    new_deco = _color_merge(new_d, deco, _deletion_map(d, new_d, excluded), _Fresh(deco))
    _require_invariants(before, new_d, new_deco, "R inverse")
    logger.debug("R inverse removed %s, %s", p, m)
    return new_d, new_deco


# handle slides

def _copy_order(d: GaussDiagram, along_arc: ArcId, reversed_: bool) -> List[ChordId]:
    seq = d.circle(along_arc.circle)
    n, j = len(seq), along_arc.position
    if reversed_:
        return [seq[(j - k) % n] for k in range(n)]
    return [seq[(j + 1 + k) % n] for k in range(n)]


def _placed_after(d: GaussDiagram, original: ChordId, placement: Side) -> bool:
    return (d.sign(original) > 0) == (placement is CO)


def h_move(d: GaussDiagram, deco: Decoration, spec: Slide) -> Tuple[GaussDiagram, Decoration]:
    """Slide a circle along another circle of its family across a shared-colour region."""
    check_decoration(d, deco)
    _require_arc(d, spec.slider_arc)
    _require_arc(d, spec.along_arc)
    slider, along = spec.slider, spec.along
    if slider.family is not along.family:
        raise MoveError("slider and along must be in the same family")
    if slider == along:
        raise MoveError("a circle cannot slide along itself")
    if not d.circle(along):
        raise MoveError(f"cannot slide along chordless circle {along}")
    shared = set(deco.coloring(spec.slider_arc)) & set(deco.coloring(spec.along_arc))
    if not shared:
        raise MoveError(f"{spec.slider_arc} and {spec.along_arc} share no colour")
    before = _invariants(d, deco)

    family, opp = slider.family, slider.family.opposite
    originals = _copy_order(d, spec.along_arc, spec.reversed)
    copies: List[ChordId] = []
    for _ in originals:
        copies.append(d.fresh_chord(copies))
    copy_of = dict(zip(copies, originals))
    factor = -1 if spec.reversed else 1
    signs = dict(d.chord_signs)
    signs.update({c: factor * d.sign(h) for c, h in copy_of.items()})
    same = [list(c) for c in d.circles(family)]
    same[slider.index] = _insert_after(same[slider.index], spec.slider_arc.position, copies)

    failures = []
    for placement in (CO, COUNTER):
        after = {c: _placed_after(d, h, placement) for c, h in copy_of.items()}
        others = [list(c) for c in d.circles(opp)]
        for c, h in copy_of.items():
            cid, _ = d.endpoint(h, opp)
            seq = others[cid.index]
            idx = seq.index(h)
            seq.insert(idx + 1 if after[c] else idx, c)
        new_d = (d.replace(plus=same, minus=others, signs=signs) if family is Family.PLUS
                 else d.replace(plus=others, minus=same, signs=signs))

        side_map: SideMap = {}
        for arc in new_d.all_arcs():
            if arc.circle == along:
                continue
            if arc.is_whole:
                _link(side_map, arc, [arc])
                continue
            u, v = new_d.tail(arc), new_d.head(arc)
            if arc.circle.family is family:
                if u in copy_of:
                    if u == copies[-1]:
                        _link(side_map, arc, [spec.slider_arc])
                else:
                    _link(side_map, arc, [d.arc_after(u, family)])
                continue
            if copy_of.get(v) == u and after[v]:
                continue
            if copy_of.get(u) == v and not after[u]:
                continue
            _link(side_map, arc, [d.arc_after(copy_of.get(u, u), opp)])

        try:
            new_deco = _color_forward(new_d, deco, side_map, _Fresh(deco), split_fresh=False)
            _require_invariants(before, new_d, new_deco, "slide")
        except MoveError as exc:
            failures.append(f"{placement.value}: {exc}")
            continue
        logger.debug("slid %s along %s (%s placement), copies %s", slider, along, placement.value, copies)
        return new_d, new_deco
    raise MoveError(f"no endpoint placement for sliding {slider} along {along} keeps the invariants "
                    f"({'; '.join(failures)})")


def _slide_blocks(d: GaussDiagram, slider: CircleId, along: CircleId):
    """Candidate (block, originals, placement) triples for undoing a slide."""
    opp = slider.family.opposite
    seq_s, seq_t = d.circle(slider), d.circle(along)
    m, n = len(seq_s), len(seq_t)
    for placement in (CO, COUNTER):
        for reversed_ in (False, True):
            factor = -1 if reversed_ else 1
            for j in range(n):
                originals = _copy_order(d, ArcId(along, j), reversed_)
                for start in range(m):
                    block = [seq_s[(start + k) % m] for k in range(n)]
                    if any(d.sign(b) != factor * d.sign(h) for b, h in zip(block, originals)):
                        continue
                    if all(_adjacent_as_copy(d, b, h, opp, placement) for b, h in zip(block, originals)):
                        yield block, originals, placement


def _adjacent_as_copy(d: GaussDiagram, copy: ChordId, original: ChordId, family: Family,
                      placement: Side) -> bool:
    cb, ib = d.endpoint(copy, family)
    ch, ih = d.endpoint(original, family)
    if cb != ch:
        return False
    n = len(d.circle(cb))
    if _placed_after(d, original, placement):
        return ib == (ih + 1) % n
    return ib == (ih - 1) % n


def h_inverse(d: GaussDiagram, deco: Decoration, slider: CircleId,
              along: CircleId) -> Tuple[GaussDiagram, Decoration]:
    """Remove a parallel copy of `along` from `slider`, undoing a slide."""
    check_decoration(d, deco)
    _require_circle(d, slider)
    _require_circle(d, along)
    if slider.family is not along.family or slider == along:
        raise MoveError("slider and along must be distinct circles of one family")
    if not d.circle(along):
        raise MoveError(f"cannot slide along chordless circle {along}")
    if len(d.circle(along)) > len(d.circle(slider)):
        raise MoveError(f"{slider} is too short to carry a copy of {along}")
    before = _invariants(d, deco)
    family, opp = slider.family, slider.family.opposite

    failures = []
    for block, originals, placement in _slide_blocks(d, slider, along):
        gone = set(block)
        excluded = set(d.arcs_of(along))
        excluded.update(d.arc_after(b, family) for b in block[:-1])
        for b, h in zip(block, originals):
            excluded.add(d.arc_after(h if _placed_after(d, h, placement) else b, opp))
        plus = [[c for c in seq if c not in gone] for seq in d.plus_circles]
        minus = [[c for c in seq if c not in gone] for seq in d.minus_circles]
        signs = {c: s for c, s in d.chord_signs.items() if c not in gone}
        new_d = d.replace(plus=plus, minus=minus, signs=signs)
        try:
            new_deco = _color_merge(new_d, deco, _deletion_map(d, new_d, excluded), _Fresh(deco))
            _require_invariants(before, new_d, new_deco, "slide inverse")
        except MoveError as exc:
            failures.append(str(exc))
            continue
        logger.debug("unslid %s from %s, removed %s", slider, along, block)
        return new_d, new_deco
    detail = f" ({'; '.join(failures)})" if failures else ""
    raise MoveError(f"{slider} carries no removable copy of {along}{detail}")


# stabilisation and bubbles

def s_move(d: GaussDiagram, deco: Decoration, color: ColorId, sign: int = 1) -> Tuple[GaussDiagram, Decoration]:
    """Add a plus and a minus circle joined by one chord; the new cycle takes `color`."""
    check_decoration(d, deco)
    if not d.is_empty and color not in deco.color_set:
        raise MoveError(f"unknown colour {color}")
    if sign not in (1, -1):
        raise MoveError(f"bad sign {sign}")
    h = d.fresh_chord()
    signs = dict(d.chord_signs)
    signs[h] = sign
    new_d = d.replace(plus=d.plus_circles + ((h,),), minus=d.minus_circles + ((h,),), signs=signs)
    side_colors = _side_colors(deco)
    for family in (Family.PLUS, Family.MINUS):
        arc = ArcId(CircleId(family, len(d.circles(family))), 0)
        for side in (CO, COUNTER):
            side_colors[ArcSide(arc, side)] = color
    return new_d, decorate_like(new_d, side_colors)


def s_inverse(d: GaussDiagram, deco: Decoration, plus_circle: CircleId,
              minus_circle: CircleId) -> Tuple[GaussDiagram, Decoration]:
    check_decoration(d, deco)
    _require_circle(d, plus_circle)
    _require_circle(d, minus_circle)
    if plus_circle.family is not Family.PLUS or minus_circle.family is not Family.MINUS:
        raise MoveError("S inverse needs a plus circle and a minus circle")
    seq_p, seq_m = d.circle(plus_circle), d.circle(minus_circle)
    if len(seq_p) != 1 or seq_p != seq_m:
        raise MoveError(f"{plus_circle} and {minus_circle} are not joined by exactly one chord")
    return _drop_circles(d, deco, [plus_circle, minus_circle], drop_chords=seq_p)


def b_move(d: GaussDiagram, deco: Decoration, family: Family, existing_color: ColorId,
           new_color: ColorId, side: Side = CO) -> Tuple[GaussDiagram, Decoration]:
    """Add a chordless circle; `side` carries new_color, the other side existing_color."""
    check_decoration(d, deco)
    if existing_color not in deco.color_set:
        raise MoveError(f"unknown colour {existing_color}")
    if new_color in deco.color_set:
        raise MoveError(f"colour {new_color} is already in use")
    circles = list(d.circles(family)) + [()]
    new_d = d.replace(plus=circles) if family is Family.PLUS else d.replace(minus=circles)
    side_colors = _side_colors(deco)
    whole = ArcId(CircleId(family, len(circles) - 1), WHOLE)
    side_colors[ArcSide(whole, side)] = new_color
    side_colors[ArcSide(whole, side.other)] = existing_color
    return new_d, decorate_like(new_d, side_colors)


def b_inverse(d: GaussDiagram, deco: Decoration, circle: CircleId) -> Tuple[GaussDiagram, Decoration]:
    check_decoration(d, deco)
    _require_circle(d, circle)
    if d.circle(circle):
        raise MoveError(f"{circle} has chords")
    whole = ArcId(circle, WHOLE)
    co, counter = deco.coloring(whole)
    def uses(color: ColorId) -> int:
        return len(deco.cycles_of_color(color))

    if co == counter or not ((uses(co) == 1 and uses(counter) > 1) or (uses(counter) == 1 and uses(co) > 1)):
        raise MoveError(f"{circle} needs one side in a colour of its own and the other in a shared colour, "
                        f"got ({co}, {counter})")
    return _drop_circles(d, deco, [circle])


# scripts

def apply_move(d: GaussDiagram, deco: Decoration, spec: MoveSpec) -> Tuple[GaussDiagram, Decoration]:
    if isinstance(spec, Eps):
        return eps_move(d, deco, spec.circle)
    if isinstance(spec, R):
        return r_move(d, deco, spec.plus_arc, spec.minus_arc, spec.case)
    if isinstance(spec, RInv):
        return r_inverse(d, deco, spec.positive_chord, spec.negative_chord)
    if isinstance(spec, Slide):
        return h_move(d, deco, spec)
    if isinstance(spec, SlideInv):
        return h_inverse(d, deco, spec.slider, spec.along)
    if isinstance(spec, Stab):
        return s_move(d, deco, spec.color, spec.sign)
    if isinstance(spec, StabInv):
        return s_inverse(d, deco, spec.plus_circle, spec.minus_circle)
    if isinstance(spec, Bubble):
        return b_move(d, deco, spec.family, spec.color, spec.new_color, spec.side)
    if isinstance(spec, BubbleInv):
        return b_inverse(d, deco, spec.circle)
    raise MoveError(f"unknown move {spec!r}")


def run_script(d: GaussDiagram, deco: Decoration, script: Sequence[MoveSpec]) -> Tuple[GaussDiagram, Decoration]:
    for step, spec in enumerate(script, 1):
        try:
            d, deco = apply_move(d, deco, spec)
        except MoveError as exc:
            raise MoveError(f"step {step} ({spec}): {exc}") from exc
    return d, deco


def eps_via_hb(d: GaussDiagram, deco: Decoration, circle: CircleId) -> Script:
    """Express eps on `circle` as bubble, slide, unslide and bubble removal.

    A bubble is slid along the circle with its copy reversed, the circle is
    then slid off the bubble's copy, and the circle, now a bubble itself, is
    removed. Every site is tried; the first script whose result matches
    eps_move is returned. A chordless circle needs no moves.
    """
    check_decoration(d, deco)
    _require_circle(d, circle)
    if not d.circle(circle):
        return []
    target_d, target_deco = eps_move(d, deco, circle)
    target = (canonicalize(target_d), _invariants(target_d, target_deco))
    family = circle.family
    bubble = CircleId(family, len(d.circles(family)))
    new_color = deco.fresh_color()

    for arc in d.arcs_of(circle):
        for existing in dict.fromkeys(deco.coloring(arc)):
            for side in (CO, COUNTER):
                script: Script = [
                    Bubble(family, existing, new_color, side),
                    Slide(ArcId(bubble, WHOLE), arc, reversed=True),
                    SlideInv(circle, bubble),
                    BubbleInv(circle),
                ]
                try:
                    out_d, out_deco = run_script(d, deco, script)
                except MoveError as exc:
                    logger.debug("eps site %s/%s/%s rejected: %s", arc, existing, side.value, exc)
                    continue
                if (canonicalize(out_d), _invariants(out_d, out_deco)) == target:
                    return script
    raise PreconditionError(f"no bubble site realises eps on {circle}")


def _merge_site(d: GaussDiagram, deco: Decoration) -> Optional[R]:
    component = {}
    for index, (plus_ids, minus_ids) in enumerate(connected_components(d)):
        for cid in plus_ids + minus_ids:
            component[cid] = index
    candidates = []
    for color in deco.color_set:
        members = deco.cycles_of_color(color)
        if len(members) < 2:
            continue
        for k1 in members:
            plus = [s for s in deco.cycles[k1] if s.arc.circle.family is Family.PLUS]
            if not plus:
                continue
            for k2 in members:
                minus = [s for s in deco.cycles[k2] if s.arc.circle.family is Family.MINUS]
                if k1 == k2 or not minus:
                    continue
                a, b = plus[0], minus[0]
                crosses = component[a.arc.circle] != component[b.arc.circle]
                candidates.append((not crosses, color, k1, k2,
                                   R(a.arc, b.arc, RCase.from_sides(a.side, b.side))))
    if not candidates:
        return None
    return min(candidates, key=lambda t: t[:4])[-1]


def normalize_colors(d: GaussDiagram, deco: Decoration) -> Tuple[GaussDiagram, Decoration, Script]:
    """Merge same-coloured cycles with R-moves until every colour covers one cycle."""
    check_decoration(d, deco)
    script: Script = []
    while deco.num_colors < deco.num_cycles:
        spec = _merge_site(d, deco)
        if spec is None:
            raise PreconditionError(
                "a colour covers several cycles but no pair of them offers a plus arc and a minus arc")
        d, deco = r_move(d, deco, spec.plus_arc, spec.minus_arc, spec.case)
        script.append(spec)
    logger.info("normalized colours with %d R-moves", len(script))
    return d, deco, script
