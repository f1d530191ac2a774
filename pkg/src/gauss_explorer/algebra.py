"""Fundamental-group presentations, intersection matrices, Smith normal form and H1."""
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx
from sympy import Matrix, igcd, ilcm
from sympy.matrices.normalforms import smith_normal_form as sympy_smith_normal_form
from sympy.polys.domains import ZZ

from .diagram import (
    ArcId, Decoration, Family, GaussDiagram, GaussDiagramError, PreconditionError,
    Side, is_connected, require_valid,
)
from .moves import normalize_colors
from .topology import boundary_genera, undecorated_genus
from .tracing import check_decoration, decorate
from .utils import format_letter, format_matrix

logger = logging.getLogger(__name__)

# A word is a sequence of signed 1-based generator indices: 2 is g2, -2 is g2^-1.
Word = Tuple[int, ...]


@dataclass
class Presentation:
    generators: List[str]
    relators: List[Word] = field(default_factory=list)

    def __post_init__(self):
        for word in self.relators:
            for letter in word:
                if letter == 0 or abs(letter) > len(self.generators):
                    raise GaussDiagramError(f"relator letter {letter} names no generator")

    def __str__(self) -> str:
        return format_presentation(self)


@dataclass(frozen=True)
class IntMatrix:
    """Integer matrix; for intersection matrices rows are plus circles and columns minus circles."""
    nrows: int
    ncols: int
    entries: Tuple[Tuple[int, ...], ...] = ()

    def __post_init__(self):
        if len(self.entries) != self.nrows or any(len(row) != self.ncols for row in self.entries):
            raise GaussDiagramError(f"entries do not form a {self.nrows}x{self.ncols} matrix")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], ncols: Optional[int] = None) -> "IntMatrix":
        rows = tuple(tuple(int(x) for x in row) for row in rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        return cls(len(rows), ncols, rows)

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def to_sympy(self) -> Matrix:
        return Matrix(self.nrows, self.ncols, [x for row in self.entries for x in row])

    def det(self) -> int:
        if not self.is_square:
            raise GaussDiagramError(f"determinant of a non-square {self.nrows}x{self.ncols} matrix")
        if self.nrows == 0:
            return 1
        return int(self.to_sympy().det())

    def __str__(self) -> str:
        return format_matrix(self.entries)


@dataclass(frozen=True)
class H1Group:
    rank: int
    torsion: Tuple[int, ...] = ()

    @property
    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.torsion

    def __str__(self) -> str:
        parts = []
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append(f"Z^{self.rank}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " + ".join(parts) if parts else "0"


def reduce_word(word: Sequence[int]) -> Word:
    """Free cancellation of adjacent inverse letters."""
    stack: List[int] = []
    for letter in word:
        if stack and stack[-1] == -letter:
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


def format_word(word: Word, generators: Sequence[str]) -> str:
    if not word:
        return "1"
    powers: List[Tuple[int, int]] = []
    for letter in word:
        gen, step = abs(letter), (1 if letter > 0 else -1)
        if powers and powers[-1][0] == gen and (powers[-1][1] > 0) == (step > 0):
            powers[-1] = (gen, powers[-1][1] + step)
        else:
            powers.append((gen, step))
    return " ".join(format_letter(generators[g - 1], e) for g, e in powers)


def format_presentation(p: Presentation) -> str:
    relators = ", ".join(format_word(w, p.generators) for w in p.relators)
    return f"⟨{', '.join(p.generators)} | {relators}⟩"


def closed_preconditions(d: GaussDiagram, check_genus: bool = True) -> Optional[str]:
    """Why pi1_closed does not apply to `d`, or None when it does."""
    require_valid(d)
    if d.g_plus != d.g_minus:
        return f"family sizes differ (g+={d.g_plus}, g-={d.g_minus})"
    if d.is_empty:
        return "diagram is empty"
    if not is_connected(d):
        return "diagram is not connected"
    if check_genus and undecorated_genus(d) != d.g_plus:
        return f"surface genus {undecorated_genus(d)} differs from g={d.g_plus}"
    return None


def pi1_closed(d: GaussDiagram, check_genus: bool = True) -> Presentation:
    """One generator per plus circle, one relator read off each minus circle.

    check_genus=False accepts diagrams whose plus-circle orders are only
    known up to the relators they produce.
    """
    problem = closed_preconditions(d, check_genus)
    if problem:
        raise PreconditionError(problem)
    if check_genus:
        report = boundary_genera(d, decorate(d))
        if report.k_plus > 1 or report.k_minus > 1:
            logger.warning("boundary graphs have k+=%d, k-=%d; families may be separating",
                           report.k_plus, report.k_minus)
    generators = [f"g{i + 1}" for i in range(d.g_plus)]
    relators = []
    for seq in d.minus_circles:
        word = []
        for chord in seq:
            cid, _ = d.endpoint(chord, Family.PLUS)
            word.append(d.sign(chord) * (cid.index + 1))
        relators.append(tuple(word))
    return Presentation(generators, relators)


def _chord_node(family: Family, chord: str):
    return ("end", family.value, chord)


def _arc_nodes(d: GaussDiagram, arc: ArcId):
    if arc.is_whole:
        node = ("circle", str(arc.circle))
        return node, node
    family = arc.circle.family
    return _chord_node(family, d.tail(arc)), _chord_node(family, d.head(arc))


def pi1_general(d: GaussDiagram, deco: Decoration) -> Presentation:
    """Presentation from a spanning tree of the diagram's graph containing every chord.

    Generators are the arcs outside the tree. Each cycle contributes a relator
    (co-directed sides read forward, counter-directed sides inverted) and so
    does each circle of either family.
    """
    check_decoration(d, deco)
    if deco.num_colors != deco.num_cycles:
        raise PreconditionError("some colour covers several cycles; normalize colours first")
    if d.is_empty:
        raise PreconditionError("diagram is empty")

    graph = nx.MultiGraph()
    for chord in d.chords:
        graph.add_edge(_chord_node(Family.PLUS, chord), _chord_node(Family.MINUS, chord), key=("chord", chord))
    arcs = sorted(d.all_arcs(), key=ArcId.sort_key)
    for arc in arcs:
        graph.add_edge(*_arc_nodes(d, arc), key=arc)
    if not nx.is_connected(graph):
        raise PreconditionError("diagram graph is not connected")
    if d.chordless_circles():
        logger.warning("chordless circles with distinct colours encode genus-0 pieces")

    # chords are a matching, so they always extend to a spanning tree
    forest = nx.utils.UnionFind()
    for chord in d.chords:
        forest.union(_chord_node(Family.PLUS, chord), _chord_node(Family.MINUS, chord))
    generator_arcs: List[ArcId] = []
    for arc in arcs:
        u, v = _arc_nodes(d, arc)
        if forest[u] == forest[v]:
            generator_arcs.append(arc)
        else:
            forest.union(u, v)
    index: Dict[ArcId, int] = {arc: i + 1 for i, arc in enumerate(generator_arcs)}

    relators = []
    for orbit in deco.cycles:
        word = [index[s.arc] if s.side is Side.CO else -index[s.arc] for s in orbit if s.arc in index]
        relators.append(reduce_word(word))
    for cid in d.circle_ids():
        relators.append(reduce_word([index[a] for a in d.arcs_of(cid) if a in index]))
    return Presentation([f"e{i}" for i in range(1, len(generator_arcs) + 1)], relators)


def abelianize(p: Presentation) -> IntMatrix:
    """Exponent sums: rows are generators, columns relators."""
    rows = [[0] * len(p.relators) for _ in p.generators]
    for j, word in enumerate(p.relators):
        for letter in word:
            rows[abs(letter) - 1][j] += 1 if letter > 0 else -1
    return IntMatrix.from_rows(rows, ncols=len(p.relators))


def intersection_matrix(d: GaussDiagram) -> IntMatrix:
    """Signed chord counts between plus circle i and minus circle j."""
    require_valid(d)
    rows = [[0] * d.g_minus for _ in range(d.g_plus)]
    for chord in d.chords:
        i = d.endpoint(chord, Family.PLUS)[0].index
        j = d.endpoint(chord, Family.MINUS)[0].index
        rows[i][j] += d.sign(chord)
    return IntMatrix.from_rows(rows, ncols=d.g_minus)


def symmetric_intersection_form(d: GaussDiagram) -> IntMatrix:
    """The doubled form [[0, A], [A^T, 0]] over both families."""
    a = intersection_matrix(d)
    n = a.nrows + a.ncols
    rows = [[0] * n for _ in range(n)]
    for i in range(a.nrows):
        for j in range(a.ncols):
            rows[i][a.nrows + j] = a.entries[i][j]
            rows[a.nrows + j][i] = a.entries[i][j]
    return IntMatrix.from_rows(rows, ncols=n)


def smith_normal_form(m: IntMatrix) -> Tuple[IntMatrix, Tuple[int, ...]]:
    """Diagonal form d1 | d2 | ... with non-negative entries, and its diagonal."""
    r = min(m.nrows, m.ncols)
    if r == 0:
        return IntMatrix.from_rows([[0] * m.ncols for _ in range(m.nrows)], ncols=m.ncols), ()
    snf = sympy_smith_normal_form(m.to_sympy(), domain=ZZ)
    diag = [abs(int(snf[i, i])) for i in range(r)]
    for i in range(r):
        for j in range(i + 1, r):
            a, b = diag[i], diag[j]
            diag[i], diag[j] = igcd(a, b), ilcm(a, b)
    rows = [[diag[i] if i == j else 0 for j in range(m.ncols)] for i in range(m.nrows)]
    return IntMatrix.from_rows(rows, ncols=m.ncols), tuple(int(x) for x in diag)


def h1_of_presentation(p: Presentation) -> H1Group:
    _, diag = smith_normal_form(abelianize(p))
    nonzero = [x for x in diag if x != 0]
    return H1Group(len(p.generators) - len(nonzero), tuple(x for x in nonzero if x > 1))


def h1(d: GaussDiagram, deco: Optional[Decoration] = None, check_genus: bool = True) -> H1Group:
    """First homology: from pi1_closed when it applies, else from pi1_general.

    The general route normalizes colours first when some colour covers more
    than one cycle.
    """
    if closed_preconditions(d, check_genus) is None:
        return h1_of_presentation(pi1_closed(d, check_genus))
    if deco is None:
        deco = decorate(d)
    if deco.num_colors != deco.num_cycles:
        d, deco, script = normalize_colors(d, deco)
        logger.info("normalized colours with %d R-moves before computing H1", len(script))
    return h1_of_presentation(pi1_general(d, deco))


def is_homology_sphere(d: GaussDiagram, check_genus: bool = True) -> bool:
    presentation = pi1_closed(d, check_genus)
    matrix = intersection_matrix(d)
    by_det = matrix.is_square and abs(matrix.det()) == 1
    by_h1 = h1_of_presentation(presentation).is_trivial
    if by_det != by_h1:
        raise GaussDiagramError(f"determinant test ({by_det}) and H1 test ({by_h1}) disagree")
    return by_det
