"""DOT export of the diagram graph, and the disc-with-holes Heegaard layout as text or SVG."""
import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .algebra import closed_preconditions
from .diagram import ArcId, Decoration, Family, GaussDiagram, PreconditionError, require_valid
from .utils import format_colors, format_sign

FAMILY_COLORS = {Family.PLUS: "#C62828", Family.MINUS: "#1565C0"}

# A point where a strand meets a hole copy: (copy name, endpoint position on its plus circle).
Anchor = Tuple[str, int]


def to_dot(d: GaussDiagram, deco: Optional[Decoration] = None) -> str:
    """Chords as vertices, arcs as directed edges coloured by family."""
    require_valid(d)
    out = ["digraph gauss {", "  node [shape=circle];"]
    for chord in d.chords:
        out.append(f'  "{chord}" [label="{chord} {format_sign(d.sign(chord))}"];')
    for cid in d.chordless_circles():
        out.append(f'  "{cid}" [shape=point];')
    for arc in d.all_arcs():
        tail = str(arc.circle) if arc.is_whole else d.tail(arc)
        head = str(arc.circle) if arc.is_whole else d.head(arc)
        label = str(arc)
        if deco is not None:
            label += " " + format_colors(deco.coloring(arc))
        color = FAMILY_COLORS[arc.circle.family]
        out.append(f'  "{tail}" -> "{head}" [label="{label}", color="{color}"];')
    out.append("}")
    return "\n".join(out) + "\n"


@dataclass
class Strand:
    arc: ArcId
    start: Anchor
    end: Anchor


@dataclass
class HeegaardLayout:
    """Plus circle k is cut into hole copies m{k}+ (co side) and m{k}- (counter side)."""
    genus: int
    attachments: Dict[str, List[Tuple[int, str]]] = field(default_factory=dict)
    strands: List[Strand] = field(default_factory=list)

    def to_text(self) -> str:
        out = [f"heegaard genus {self.genus}"]
        for k in range(1, self.genus + 1):
            out.append(f"hole pair {k}: m{k}+ <-> m{k}-")
        for copy, points in self.attachments.items():
            out.append(f"{copy}: " + " ".join(f"{chord}@{pos}" for pos, chord in points))
        for i, strand in enumerate(self.strands, 1):
            (c0, p0), (c1, p1) = strand.start, strand.end
            out.append(f"strand {i} ({strand.arc}): {c0}@{p0} -> {c1}@{p1}")
        return "\n".join(out) + "\n"


def heegaard_layout(d: GaussDiagram, check_genus: bool = True) -> HeegaardLayout:
    problem = closed_preconditions(d, check_genus)
    if problem:
        raise PreconditionError(problem)
    layout = HeegaardLayout(d.g_plus)
    for k, seq in enumerate(d.plus_circles, 1):
        points = [(pos, chord) for pos, chord in enumerate(seq)]
        layout.attachments[f"m{k}+"] = points
        layout.attachments[f"m{k}-"] = list(points)

    def crossing(chord: str) -> Tuple[Anchor, Anchor]:
        cid, pos = d.endpoint(chord, Family.PLUS)
        left, right = f"m{cid.index + 1}+", f"m{cid.index + 1}-"
        # arrive, depart
        if d.sign(chord) > 0:
            return (right, pos), (left, pos)
        return (left, pos), (right, pos)

    for arc in d.all_arcs(Family.MINUS):
        if arc.is_whole:
            continue
        _, depart = crossing(d.tail(arc))
        arrive, _ = crossing(d.head(arc))
        layout.strands.append(Strand(arc, depart, arrive))
    return layout


def export_heegaard(d: GaussDiagram, check_genus: bool = True) -> str:
    return heegaard_layout(d, check_genus).to_text()


def export_svg(d: GaussDiagram, size: int = 480, check_genus: bool = True) -> str:
    """Best-effort drawing: hole copies on two rows, strands as straight lines."""
    layout = heegaard_layout(d, check_genus)
    g = layout.genus
    radius = size / (4 * g + 2)
    centers: Dict[str, Tuple[float, float]] = {}
    for k in range(1, g + 1):
        x = size * k / (g + 1)
        centers[f"m{k}+"] = (x, size * 0.3)
        centers[f"m{k}-"] = (x, size * 0.7)

    def anchor_point(anchor: Anchor) -> Tuple[float, float]:
        copy, pos = anchor
        n = max(len(layout.attachments[copy]), 1)
        angle = 2 * math.pi * pos / n
        if copy.endswith("-"):
            angle = -angle
        cx, cy = centers[copy]
        return cx + radius * math.cos(angle), cy + radius * math.sin(angle)

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
           f'viewBox="0 0 {size} {size}">',
           f'<circle cx="{size / 2}" cy="{size / 2}" r="{size / 2 - 2}" fill="none" stroke="#444"/>']
    for copy, (cx, cy) in centers.items():
        out.append(f'<circle cx="{cx:.1f}" cy="{cy:.1f}" r="{radius:.1f}" fill="#EEEEEE" '
                   f'stroke="{FAMILY_COLORS[Family.PLUS]}"/>')
        out.append(f'<text x="{cx:.1f}" y="{cy:.1f}" text-anchor="middle" font-size="12">{copy}</text>')
    for strand in layout.strands:
        (x0, y0), (x1, y1) = anchor_point(strand.start), anchor_point(strand.end)
        out.append(f'<line x1="{x0:.1f}" y1="{y0:.1f}" x2="{x1:.1f}" y2="{y1:.1f}" '
                   f'stroke="{FAMILY_COLORS[Family.MINUS]}"><title>{strand.arc}</title></line>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
