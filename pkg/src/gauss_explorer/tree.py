from dataclasses import dataclass
from typing import Dict, List, Optional

from thefuzz import fuzz

from .algebra import h1
from .diagram import Decoration, Family, GaussDiagram, GaussDiagramError
from .loader import LoadedDiagram
from .topology import summary
from .utils import format_colors, natural_sort_key

FUZZY_THRESHOLD = 70


@dataclass
class InfoItem:
    name: str
    value: str
    detail: str = ""


@dataclass
class TreeNode:
    name: str
    # If it's a group
    children: Optional[List['TreeNode']] = None
    expanded: bool = False
    item_count: int = 0
    # If it's a leaf
    info: Optional[InfoItem] = None

    @property
    def is_group(self) -> bool:
        return self.children is not None

    @property
    def is_item(self) -> bool:
        return self.info is not None


def matches(filter_text: str, text: str) -> bool:
    if not filter_text:
        return True
    needle = filter_text.lower()
    return needle in text.lower() or fuzz.partial_ratio(needle, text.lower()) >= FUZZY_THRESHOLD


def _group(name: str, children: List[TreeNode], expanded: bool = False) -> TreeNode:
    return TreeNode(name=name, children=children, expanded=expanded, item_count=len(children))


def _leaf(name: str, value: str, detail: str = "") -> TreeNode:
    return TreeNode(name=name, info=InfoItem(name, value, detail))


class TreeBuilder:
    @staticmethod
    def build_tree(diagrams: List[LoadedDiagram], filter_text: str = "") -> List[TreeNode]:
        tree = []
        for loaded in diagrams:
            node = TreeBuilder.build_diagram(loaded)
            if filter_text:
                node = TreeBuilder.filter_node(node, filter_text)
            if node is not None:
                tree.append(node)
        tree.sort(key=lambda x: natural_sort_key(x.name))
        return tree

    @staticmethod
    def filter_node(node: TreeNode, filter_text: str) -> Optional[TreeNode]:
        if node.is_item:
            text = f"{node.name} {node.info.value}"
            return node if matches(filter_text, text) else None
        kept = [c for c in (TreeBuilder.filter_node(ch, filter_text) for ch in node.children) if c]
        if not kept:
            return None
        return _group(node.name, kept, expanded=True)

    @staticmethod
    def build_diagram(loaded: LoadedDiagram) -> TreeNode:
        d, deco = loaded.diagram, loaded.decoration
        children = [
            TreeBuilder.invariants(d, deco, loaded.check_genus),
            TreeBuilder.circles(d, deco, Family.PLUS),
            TreeBuilder.circles(d, deco, Family.MINUS),
            TreeBuilder.colors(d, deco),
        ]
        return _group(loaded.name, children, expanded=True)

    @staticmethod
    def invariants(d: GaussDiagram, deco: Decoration, check_genus: bool = True) -> TreeNode:
        items = []
        if not check_genus:
            items.append(_leaf("genus", "n/a", "reconstructed from relators; plus-circle orders are not the original ones"))
        else:
            try:
                for key, value in summary(d, deco).items():
                    items.append(_leaf(key, str(value)))
            except GaussDiagramError as e:
                items.append(_leaf("error", str(e)))
        try:
            items.append(_leaf("H1", str(h1(d, deco, check_genus=check_genus))))
        except GaussDiagramError as e:
            items.append(_leaf("H1", "n/a", str(e)))
        return _group("🔧 Invariants", items, expanded=True)

    @staticmethod
    def circles(d: GaussDiagram, deco: Decoration, family: Family) -> TreeNode:
        groups = []
        for cid in d.circle_ids(family):
            arcs = []
            for arc in d.arcs_of(cid):
                if arc.is_whole:
                    span = "whole circle"
                else:
                    span = f"{d.tail(arc)} -> {d.head(arc)}"
                arcs.append(_leaf(str(arc), f"{span} {format_colors(deco.coloring(arc))}"))
            seq = " ".join(d.circle(cid)) or "(chordless)"
            groups.append(TreeNode(name=f"{cid}: {seq}", children=arcs, item_count=len(arcs)))
        return _group(f"{family.value} circles", groups)

    @staticmethod
    def colors(d: GaussDiagram, deco: Decoration) -> TreeNode:
        by_color: Dict[int, List[TreeNode]] = {}
        for i, (cycle, color) in enumerate(zip(deco.cycles, deco.colors), 1):
            sides = " ".join(str(side) for side in cycle)
            by_color.setdefault(color, []).append(_leaf(f"cycle {i}", f"{len(cycle)} sides", sides))
        groups = [_group(f"color {color}", cycles) for color, cycles in sorted(by_color.items())]
        return _group("🎨 Colors", groups)
