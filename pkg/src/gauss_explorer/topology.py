"""Surface genus, boundary graphs C+/C-, boundary genera and the manifold verdict."""
import enum
from dataclasses import dataclass, field
from typing import Dict, List, Set, Tuple

import networkx as nx

from .diagram import (
    ColorId, Decoration, Family, GaussDiagram, InvalidDiagramError,
    PreconditionError, connected_components, require_valid,
)
from .tracing import build_ribbon_map, check_decoration, trace_cycles


class Verdict(str, enum.Enum):
    CLOSED = "Closed"
    KNOT_COMPLEMENT = "KnotComplement"
    COMPRESSION_BODIES = "CompressionBodies"
    INVALID = "Invalid"


class Reducibility(str, enum.Enum):
    FILLS_DISCS = "FillsDiscs"
    REDUCIBLE = "Reducible"


@dataclass
class BoundaryGraph:
    which: Family
    vertices: List[ColorId]
    edges: List[Tuple[ColorId, ColorId]] = field(default_factory=list)

    def to_networkx(self) -> nx.MultiGraph:
        graph = nx.MultiGraph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(self.edges)
        return graph

    @property
    def components(self) -> int:
        return nx.number_connected_components(self.to_networkx())


@dataclass
class BoundaryReport:
    g_s: int
    delta_c: int
    k_plus: int
    k_minus: int
    dg_plus: int
    dg_minus: int
    verdict: Verdict
    reason: str = ""

    def verdict_text(self) -> str:
        if self.verdict is Verdict.COMPRESSION_BODIES:
            return f"CompressionBodies({self.dg_plus}, {self.dg_minus})"
        if self.verdict is Verdict.INVALID:
            return f"Invalid({self.reason})"
        return self.verdict.value


def color_excess(deco: Decoration) -> int:
    """Number of cycles minus number of distinct colours."""
    return deco.num_cycles - deco.num_colors


def genus(d: GaussDiagram, deco: Decoration) -> int:
    check_decoration(d, deco)
    if d.is_empty:
        return 0
    excess = d.num_chords - deco.num_cycles
    if excess % 2:
        raise InvalidDiagramError("|h| - |c| is odd")
    return 1 + color_excess(deco) + excess // 2


def euler_characteristic(d: GaussDiagram, deco: Decoration) -> int:
    check_decoration(d, deco)
    return -d.num_chords + deco.num_cycles - 2 * color_excess(deco)


def genus_from_euler(d: GaussDiagram, deco: Decoration) -> int:
    """Genus from the ribbon map with one planar piece glued per colour."""
    check_decoration(d, deco)
    if d.is_empty:
        return 0
    ribbon = build_ribbon_map(d)
    chi = ribbon.euler_characteristic() + 2 * deco.num_colors - ribbon.boundary_components
    return (2 - chi) // 2


def boundary_graphs(d: GaussDiagram, deco: Decoration) -> Tuple[BoundaryGraph, BoundaryGraph]:
    """C+ is built from minus-family arcs, C- from plus-family arcs."""
    check_decoration(d, deco)
    c_plus = BoundaryGraph(Family.PLUS, deco.color_set)
    c_minus = BoundaryGraph(Family.MINUS, deco.color_set)
    for arc in d.all_arcs():
        target = c_plus if arc.circle.family is Family.MINUS else c_minus
        target.edges.append(deco.coloring(arc))
    return c_plus, c_minus


def boundary_genera(d: GaussDiagram, deco: Decoration) -> BoundaryReport:
    g_s = genus(d, deco)
    if d.is_empty:
        k_plus = k_minus = 1
    else:
        c_plus, c_minus = boundary_graphs(d, deco)
        k_plus, k_minus = c_plus.components, c_minus.components
    dg_plus = k_plus - d.g_plus + g_s - 1
    dg_minus = k_minus - d.g_minus + g_s - 1

    if dg_plus < 0 or dg_minus < 0:
        verdict = Verdict.INVALID
        reason = f"negative boundary genus ({dg_plus}, {dg_minus})"
    elif (dg_plus, dg_minus) == (0, 0):
        verdict, reason = Verdict.CLOSED, ""
    elif {dg_plus, dg_minus} == {0, 1}:
        verdict, reason = Verdict.KNOT_COMPLEMENT, ""
    else:
        verdict, reason = Verdict.COMPRESSION_BODIES, ""
    return BoundaryReport(g_s, color_excess(deco), k_plus, k_minus, dg_plus, dg_minus, verdict, reason)


def closed_condition(d: GaussDiagram, report: BoundaryReport) -> bool:
    return (report.k_plus == 1 + d.g_plus - report.g_s
            and report.k_minus == 1 + d.g_minus - report.g_s)


def component_colors(d: GaussDiagram, deco: Decoration) -> List[Set[ColorId]]:
    colors = []
    for plus_ids, minus_ids in connected_components(d):
        found = set()
        for cid in plus_ids + minus_ids:
            for arc in d.arcs_of(cid):
                found.update(deco.coloring(arc))
        colors.append(found)
    return colors


def r_connected(d: GaussDiagram, deco: Decoration) -> bool:
    """Components of the diagram joined when they share a colour form one piece."""
    check_decoration(d, deco)
    colors = component_colors(d, deco)
    graph = nx.Graph()
    graph.add_nodes_from(range(len(colors)))
    for i in range(len(colors)):
        for j in range(i + 1, len(colors)):
            if colors[i] & colors[j]:
                graph.add_edge(i, j)
    return len(colors) <= 1 or nx.is_connected(graph)


surface_connected = r_connected


def undecorated_genus(d: GaussDiagram) -> int:
    """Genus with every cycle a distinct colour."""
    if d.is_empty:
        return 0
    return 1 + (d.num_chords - trace_cycles(d).count) // 2


def reducibility_hint(d: GaussDiagram) -> Reducibility:
    require_valid(d)
    if d.g_plus != d.g_minus:
        raise PreconditionError(f"family sizes differ: g+={d.g_plus}, g-={d.g_minus}")
    if len(connected_components(d)) != 1:
        raise PreconditionError("diagram is not connected")
    if undecorated_genus(d) == d.g_plus:
        return Reducibility.FILLS_DISCS
    return Reducibility.REDUCIBLE


def summary(d: GaussDiagram, deco: Decoration) -> Dict[str, object]:
    """The invariants shown by `info` and the browser, in display order."""
    report = boundary_genera(d, deco)
    return {
        "genus": report.g_s,
        "color excess": report.delta_c,
        "chords": d.num_chords,
        "cycles": deco.num_cycles,
        "colors": deco.num_colors,
        "k+": report.k_plus,
        "k-": report.k_minus,
        "boundary genus +": report.dg_plus,
        "boundary genus -": report.dg_minus,
        "verdict": report.verdict_text(),
        "R-connected": r_connected(d, deco),
    }
