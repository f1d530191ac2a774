"""The `gd v1` text format for decorated diagrams, and one-line move specs."""
import re
from collections import Counter
from typing import Dict, List, Sequence, Tuple

from .diagram import (
    WHOLE, ArcId, ArcSide, CircleId, ColorId, Decoration, Family, GaussDiagram, GaussDiagramError,
    InvalidDiagramError, ParseError, Side, canonical_relabeling, validate,
)
from .moves import (
    Bubble, BubbleInv, Eps, MoveSpec, R, RCase, RInv, Slide, SlideInv, Stab, StabInv,
)
from .tracing import decorate, decorate_like, trace_cycles
from .utils import format_sign, natural_sort_key, parse_sign

FORMAT_HEADER = "gd v1"
CHORD_ID = re.compile(r"[A-Za-z_][A-Za-z0-9_']*$")


def _strip(line: str) -> str:
    return line.split("#", 1)[0].rstrip()


def _column(raw: str, token: str) -> int:
    return raw.find(token) + 1 if token in raw else 1


def parse(text: str) -> Tuple[GaussDiagram, Decoration]:
    """Parse a diagram file; an empty file is the empty diagram."""
    lines = text.splitlines()
    content = [(n, raw, _strip(raw)) for n, raw in enumerate(lines, 1) if _strip(raw).strip()]
    if not content:
        return GaussDiagram(), Decoration((), ())
    n0, raw0, first = content[0]
    if first.strip() != FORMAT_HEADER:
        raise ParseError(f"expected header '{FORMAT_HEADER}'", n0, _column(raw0, first.strip()) or 1)

    signs: Dict[str, int] = {}
    chord_lines: Dict[str, int] = {}
    circles: Dict[Family, List[List[str]]] = {Family.PLUS: [], Family.MINUS: []}
    names: Dict[Family, set] = {Family.PLUS: set(), Family.MINUS: set()}
    seen: Dict[Tuple[Family, str], int] = {}
    colors = None
    colors_line = 0

    for n, raw, line in content[1:]:
        tokens = line.split()
        keyword = tokens[0]
        if keyword == "chord":
            if len(tokens) != 3:
                raise ParseError("expected 'chord <id> <+|->'", n, 1)
            chord, sign = tokens[1], tokens[2]
            if not CHORD_ID.match(chord):
                raise ParseError(f"bad chord id '{chord}'", n, _column(raw, chord))
            if chord in signs:
                raise ParseError(f"chord '{chord}' declared twice", n, _column(raw, chord))
            try:
                signs[chord] = parse_sign(sign)
            except ValueError as exc:
                raise ParseError(str(exc), n, _column(raw, sign)) from None
            chord_lines[chord] = n
        elif keyword in ("plus", "minus"):
            family = Family(keyword)
            if len(tokens) < 3 or tokens[2] != "=":
                raise ParseError(f"expected '{keyword} <name> = <chord>*'", n, 1)
            name = tokens[1]
            if name in names[family]:
                raise ParseError(f"{keyword} circle '{name}' declared twice", n, _column(raw, name))
            names[family].add(name)
            seq = []
            for chord in tokens[3:]:
                if chord not in signs:
                    raise ParseError(f"unknown chord '{chord}'", n, _column(raw, f" {chord}") + 1)
                if (family, chord) in seen:
                    raise ParseError(f"duplicate endpoint: chord '{chord}' already on a {keyword} circle "
                                     f"(line {seen[(family, chord)]})", n, _column(raw, f" {chord}") + 1)
                seen[(family, chord)] = n
                seq.append(chord)
            circles[family].append(seq)
        elif keyword == "colors":
            if len(tokens) < 2 or tokens[1] != "=":
                raise ParseError("expected 'colors = <int>*'", n, 1)
            try:
                colors = [int(t) for t in tokens[2:]]
            except ValueError:
                raise ParseError("colours must be integers", n, 1) from None
            colors_line = n
        else:
            raise ParseError(f"unknown keyword '{keyword}'", n, _column(raw, keyword))

    for chord in sorted(signs, key=natural_sort_key):
        for family in (Family.PLUS, Family.MINUS):
            if (family, chord) not in seen:
                raise ParseError(f"chord '{chord}' has no {family.value} endpoint",
                                 chord_lines[chord], 1)

    d = GaussDiagram.build(circles[Family.PLUS], circles[Family.MINUS], signs)
    report = validate(d)
    if not report.ok:
        raise InvalidDiagramError(str(report), report.violations)
    if colors is None:
        return d, decorate(d)
    expected = trace_cycles(d).count
    if len(colors) != expected:
        raise ParseError(f"expected {expected} colours (one per traced cycle), got {len(colors)}",
                         colors_line, 1)
    return d, decorate(d, colors)


def _pair_key(pair: Tuple[ColorId, ColorId], numbering: Dict[ColorId, int]):
    fresh = dict(numbering)
    key = []
    for color in pair:
        fresh.setdefault(color, len(fresh) + 1)
        key.append(fresh[color])
    return tuple(key), fresh


def _order_chordless(groups: List[List[Tuple[ColorId, ColorId]]], numbering: Dict[ColorId, int]):
    """Orderings of each group of (co, counter) colour pairs giving the smallest renumbered sequence."""
    if not groups:
        return (), []
    if not groups[0]:
        seq, orders = _order_chordless(groups[1:], numbering)
        return seq, [[]] + orders
    remaining = groups[0]
    keyed = [_pair_key(pair, numbering) for pair in remaining]
    best_key = min(key for key, _ in keyed)
    shared = Counter(c for group in groups for pair in group for c in set(pair))
    tried = set()
    best = None
    for i, (key, fresh) in enumerate(keyed):
        if key != best_key:
            continue
        pair = remaining[i]
        private = all(c not in numbering and shared[c] == 1 for c in pair)
        signature = ("private", key) if private else pair
        if signature in tried:
            continue
        tried.add(signature)
        seq, orders = _order_chordless([remaining[:i] + remaining[i + 1:]] + groups[1:], fresh)
        if best is None or key + seq < best[0]:
            best = (key + seq, [[pair] + orders[0]] + orders[1:])
    return best


def canonical_form(d: GaussDiagram, deco: Decoration) -> Tuple[GaussDiagram, Decoration]:
    """Canonical relabeling with colours renumbered 1.. by first appearance.

    Chordless circles of one family are interchangeable; their colour pairs
    take the order that gives the smallest renumbered colour sequence.
    """
    relabeling = canonical_relabeling(d)
    side_colors = {relabeling.side(side): deco.colors[i]
                   for i, cycle in enumerate(deco.cycles) for side in cycle}
    canon = relabeling.diagram
    moved = decorate_like(canon, side_colors)

    numbering: Dict[ColorId, int] = {}
    for cycle, color in zip(moved.cycles, moved.colors):
        if cycle[0].arc.position != WHOLE:
            numbering.setdefault(color, len(numbering) + 1)
    families = (Family.PLUS, Family.MINUS)
    sides = {family: [(ArcSide(ArcId(cid, WHOLE), Side.CO), ArcSide(ArcId(cid, WHOLE), Side.COUNTER))
                      for cid in canon.chordless_circles(family)] for family in families}
    groups = [[(side_colors[co], side_colors[counter]) for co, counter in sides[family]] for family in families]
    _, orders = _order_chordless(groups, numbering)
    for family, order in zip(families, orders):
        for (co, counter), (co_color, counter_color) in zip(sides[family], order):
            side_colors[co], side_colors[counter] = co_color, counter_color
    moved = decorate_like(canon, side_colors)

    renumber: Dict[ColorId, int] = {}
    for color in moved.colors:
        renumber.setdefault(color, len(renumber) + 1)
    return canon, moved.recolored([renumber[c] for c in moved.colors])


def serialize(d: GaussDiagram, deco: Decoration) -> str:
    canon, canon_deco = canonical_form(d, deco)
    out = [FORMAT_HEADER]
    for chord in canon.chords:
        out.append(f"chord {chord} {format_sign(canon.sign(chord))}")
    for family, prefix in ((Family.PLUS, "p"), (Family.MINUS, "m")):
        for i, seq in enumerate(canon.circles(family), 1):
            out.append(f"{family.value} {prefix}{i} = {' '.join(seq)}".rstrip())
    if list(canon_deco.colors) != list(range(1, canon_deco.num_cycles + 1)):
        out.append("colors = " + " ".join(str(c) for c in canon_deco.colors))
    return "\n".join(out) + "\n"


# move specs

def parse_circle(token: str) -> CircleId:
    parts = token.split(":")
    if len(parts) != 2 or parts[0] not in ("plus", "minus") or not parts[1].isdigit():
        raise ParseError(f"bad circle '{token}', expected plus:<i> or minus:<i>")
    return CircleId(Family(parts[0]), int(parts[1]))


def parse_arc(token: str) -> ArcId:
    head, _, pos = token.rpartition(":")
    if not head:
        raise ParseError(f"bad arc '{token}', expected <family>:<circle>:<position|*>")
    cid = parse_circle(head)
    if pos == "*":
        return ArcId(cid, WHOLE)
    if not pos.isdigit():
        raise ParseError(f"bad arc position '{pos}' in '{token}'")
    return ArcId(cid, int(pos))


def _side(token: str) -> Side:
    try:
        return Side(token.lower())
    except ValueError:
        raise ParseError(f"bad side '{token}', expected co or counter") from None


def parse_move(text: str) -> MoveSpec:
    tokens = text.split()
    if not tokens:
        raise ParseError("empty move")
    kind, args = tokens[0].lower(), tokens[1:]
    arity = {"eps": (1,), "r": (3,), "rinv": (2,), "h": (2, 3), "hinv": (2,), "s": (1, 2),
             "sinv": (2,), "b": (3, 4), "binv": (1,)}
    if kind not in arity:
        raise ParseError(f"unknown move '{kind}'")
    if len(args) not in arity[kind]:
        raise ParseError(f"move '{kind}' takes {' or '.join(map(str, arity[kind]))} arguments, got {len(args)}")
    try:
        if kind == "eps":
            return Eps(parse_circle(args[0]))
        if kind == "r":
            return R(parse_arc(args[0]), parse_arc(args[1]), RCase(args[2].upper()))
        if kind == "rinv":
            return RInv(args[0], args[1])
        if kind == "h":
            if len(args) == 3 and args[2] != "rev":
                raise ParseError(f"expected 'rev', got '{args[2]}'")
            return Slide(parse_arc(args[0]), parse_arc(args[1]), reversed=len(args) == 3)
        if kind == "hinv":
            return SlideInv(parse_circle(args[0]), parse_circle(args[1]))
        if kind == "s":
            return Stab(int(args[0]), parse_sign(args[1]) if len(args) == 2 else 1)
        if kind == "sinv":
            return StabInv(parse_circle(args[0]), parse_circle(args[1]))
        if kind == "b":
            side = _side(args[3]) if len(args) == 4 else Side.CO
            return Bubble(Family(args[0]), int(args[1]), int(args[2]), side)
        return BubbleInv(parse_circle(args[0]))
    except ParseError:
        raise
    except ValueError as exc:
        raise ParseError(f"bad move '{text.strip()}': {exc}") from None


def format_move(spec: MoveSpec) -> str:
    if isinstance(spec, Eps):
        return f"eps {spec.circle}"
    if isinstance(spec, R):
        return f"r {spec.plus_arc} {spec.minus_arc} {RCase(spec.case).value}"
    if isinstance(spec, RInv):
        return f"rinv {spec.positive_chord} {spec.negative_chord}"
    if isinstance(spec, Slide):
        return f"h {spec.slider_arc} {spec.along_arc}" + (" rev" if spec.reversed else "")
    if isinstance(spec, SlideInv):
        return f"hinv {spec.slider} {spec.along}"
    if isinstance(spec, Stab):
        return f"s {spec.color} {format_sign(spec.sign)}"
    if isinstance(spec, StabInv):
        return f"sinv {spec.plus_circle} {spec.minus_circle}"
    if isinstance(spec, Bubble):
        return f"b {spec.family.value} {spec.color} {spec.new_color} {spec.side.value}"
    if isinstance(spec, BubbleInv):
        return f"binv {spec.circle}"
    raise GaussDiagramError(f"unknown move {spec!r}")


def parse_script(text: str) -> List[MoveSpec]:
    script = []
    for n, raw in enumerate(text.splitlines(), 1):
        line = _strip(raw).strip()
        if not line:
            continue
        try:
            script.append(parse_move(line))
        except ParseError as exc:
            raise ParseError(str(exc), n, 1) from None
    return script


def format_script(script: Sequence[MoveSpec]) -> str:
    return "".join(format_move(spec) + "\n" for spec in script)
