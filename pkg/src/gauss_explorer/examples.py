"""Built-in example diagrams."""
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from sympy import igcd
from thefuzz import process

from .diagram import Decoration, GaussDiagram, GaussDiagramError, UnknownExampleError, validate
from .tracing import decorate, trace_cycles

logger = logging.getLogger(__name__)

POINCARE_RELATORS = [(-1, -1, -1, -1, 2, 1, 2), (1, -2, -2, 1, 2)]
HEMPEL_RELATORS = [(1, -2, -1, 2, 2, -1, -2), (1, 2, 1, -2, -1, -2)]

# Boundaries of two crossing bands on a torus, each band a disc
TORUS_PLUS = ["h1", "h2", "h3", "h4", "h5", "h6", "h7", "h8"]
TORUS_MINUS = ["h1", "h6", "h7", "h4", "h5", "h2", "h3", "h8"]
TORUS_SIGNS = {f"h{i}": 1 if i % 2 else -1 for i in range(1, 9)}

DEFAULT_SEED = 0
MAX_ATTEMPTS = 100


@dataclass(frozen=True)
class ExampleInfo:
    name: str
    description: str
    reconstructed: bool = False

    @property
    def check_genus(self) -> bool:
        return not self.reconstructed


EXAMPLES: Dict[str, ExampleInfo] = {
    info.name: info for info in [
        ExampleInfo("s3", "the 3-sphere: one plus and one minus circle joined by a positive chord"),
        ExampleInfo("lens:p:q", "lens space L(p,q): p positive chords, minus circle read with step q"),
        ExampleInfo("poincare-relators", "Poincare homology sphere from its two relators; plus orders "
                                         "follow first appearance", reconstructed=True),
        ExampleInfo("hempel-relators", "genus-2 homology sphere from its two relators; plus orders "
                                       "follow first appearance", reconstructed=True),
        ExampleInfo("solid-torus", "S3 plus a chordless plus circle, all cycles one colour: "
                                   "an unknot complement with surface genus 2"),
        ExampleInfo("torus-x-i", "thickened torus: two separating curves on a torus meeting 8 times, "
                                 "every cycle its own colour"),
    ]
}


def list_examples() -> List[ExampleInfo]:
    return list(EXAMPLES.values())


def lens_diagram(p: int, q: int) -> GaussDiagram:
    if p < 2 or not 1 <= q < p or igcd(p, q) != 1:
        raise GaussDiagramError(f"lens:{p}:{q} needs p >= 2, 1 <= q < p and gcd(p, q) = 1")
    chords = [f"h{i}" for i in range(1, p + 1)]
    minus = [chords[(k * q) % p] for k in range(p)]
    return GaussDiagram.build([chords], [minus], {c: 1 for c in chords})


def diagram_from_relators(relators: Sequence[Sequence[int]], num_generators: int) -> GaussDiagram:
    """One minus circle per relator, one chord per letter.

    Plus circle k holds the chords of generator k in order of first
    appearance across the relators.
    """
    plus: List[List[str]] = [[] for _ in range(num_generators)]
    minus: List[List[str]] = []
    signs: Dict[str, int] = {}
    for word in relators:
        seq = []
        for letter in word:
            chord = f"h{len(signs) + 1}"
            signs[chord] = 1 if letter > 0 else -1
            plus[abs(letter) - 1].append(chord)
            seq.append(chord)
        minus.append(seq)
    return GaussDiagram.build(plus, minus, signs)


def example_info(name: str) -> ExampleInfo:
    key = "lens:p:q" if name.startswith("lens:") else name
    if key not in EXAMPLES:
        raise UnknownExampleError(name, suggest(name))
    return EXAMPLES[key]


def suggest(name: str, limit: int = 3) -> List[str]:
    matches = process.extract(name, list(EXAMPLES), limit=limit)
    return [match for match, score in matches if score >= 60]


def builtin_example(name: str) -> Tuple[GaussDiagram, Decoration]:
    info = example_info(name)
    if info.name == "s3":
        d = GaussDiagram.build([["h1"]], [["h1"]], {"h1": 1})
        return d, decorate(d)
    if info.name == "lens:p:q":
        parts = name.split(":")
        if len(parts) != 3 or not all(p.isdigit() for p in parts[1:]):
            raise GaussDiagramError(f"bad lens name '{name}', expected lens:<p>:<q>")
        d = lens_diagram(int(parts[1]), int(parts[2]))
        return d, decorate(d)
    if info.name == "solid-torus":
        d = GaussDiagram.build([["h1"], []], [["h1"]], {"h1": 1})
        return d, decorate(d, [1, 1, 1])
    if info.name == "torus-x-i":
        d = GaussDiagram.build([TORUS_PLUS], [TORUS_MINUS], TORUS_SIGNS)
        return d, decorate(d)
    relators = POINCARE_RELATORS if info.name == "poincare-relators" else HEMPEL_RELATORS
    logger.info("%s is reconstructed from relators; plus-circle orders are not the original ones", name)
    d = diagram_from_relators(relators, 2)
    return d, decorate(d)


def random_diagram(seed: Optional[int] = DEFAULT_SEED, max_circles: int = 4, max_chords: int = 12,
                   random_colors: bool = False) -> Tuple[GaussDiagram, Decoration]:
    """A random valid diagram: chords dropped onto random circles of each family.

    With random_colors the traced cycles get colours drawn from 1..|c|,
    otherwise every cycle has its own colour.
    """
    rng = np.random.default_rng(seed)
    for _ in range(MAX_ATTEMPTS):
        g_plus = int(rng.integers(1, max_circles + 1))
        g_minus = int(rng.integers(1, max_circles + 1))
        n = int(rng.integers(0, max_chords + 1))
        chords = [f"h{i}" for i in range(1, n + 1)]
        signs = {c: int(rng.choice([-1, 1])) for c in chords}
        plus: List[List[str]] = [[] for _ in range(g_plus)]
        minus: List[List[str]] = [[] for _ in range(g_minus)]
        for i in rng.permutation(n):
            plus[int(rng.integers(g_plus))].append(chords[i])
        for i in rng.permutation(n):
            minus[int(rng.integers(g_minus))].append(chords[i])
        d = GaussDiagram.build(plus, minus, signs)
        if not validate(d).ok:
            continue
        if not random_colors:
            return d, decorate(d)
        count = trace_cycles(d).count
        colors = [int(c) for c in rng.integers(1, count + 1, size=count)]
        return d, decorate(d, colors)
    raise GaussDiagramError(f"no valid random diagram after {MAX_ATTEMPTS} attempts (seed {seed})")
