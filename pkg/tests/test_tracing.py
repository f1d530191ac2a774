import unittest
import sys
import os

# Add src to path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '../src')))

from gauss_explorer.diagram import ArcId, ArcSide, CircleId, Family, GaussDiagram, Side, StaleDecorationError
from gauss_explorer.examples import builtin_example, lens_diagram
from gauss_explorer.tracing import (
    build_ribbon_map, check_chord_color_equalities, check_decoration, decorate,
    frame, infer_edge_colorings, trace_cycles, transition_map,
)
from tests.corpus import random_corpus

P = CircleId(Family.PLUS, 0)
M = CircleId(Family.MINUS, 0)
CO, COUNTER = Side.CO, Side.COUNTER


def side(circle, position, s):
    return ArcSide(ArcId(circle, position), s)


class TestTracing(unittest.TestCase):
    def setUp(self):
        self.s3 = GaussDiagram.build([["h1"]], [["h1"]], {"h1": 1})

    def test_frame(self):
        f = frame(lens_diagram(3, 1), "h2")
        self.assertEqual(f.sign, 1)
        self.assertEqual((f.a, f.b), (ArcId(P, 0), ArcId(P, 1)))
        self.assertEqual((f.c, f.d), (ArcId(M, 0), ArcId(M, 1)))

    def test_transitions_positive(self):
        step = transition_map(self.s3)
        self.assertEqual(step[side(P, 0, CO)], side(M, 0, COUNTER))
        self.assertEqual(step[side(M, 0, CO)], side(P, 0, CO))
        self.assertEqual(step[side(P, 0, COUNTER)], side(M, 0, CO))
        self.assertEqual(step[side(M, 0, COUNTER)], side(P, 0, COUNTER))

    def test_transitions_negative(self):
        step = transition_map(GaussDiagram.build([["h1"]], [["h1"]], {"h1": -1}))
        self.assertEqual(step[side(P, 0, CO)], side(M, 0, CO))
        self.assertEqual(step[side(M, 0, CO)], side(P, 0, COUNTER))
        self.assertEqual(step[side(M, 0, COUNTER)], side(P, 0, CO))
        self.assertEqual(step[side(P, 0, COUNTER)], side(M, 0, COUNTER))

    def test_s3_single_cycle(self):
        cycles = trace_cycles(self.s3)
        self.assertEqual(cycles.count, 1)
        self.assertEqual(cycles.orbits[0], (side(P, 0, CO), side(M, 0, COUNTER),
                                            side(P, 0, COUNTER), side(M, 0, CO)))

    def test_lens_has_p_cycles(self):
        """Every lens diagram traces p four-sided cycles."""
        for p, q in [(2, 1), (3, 1), (5, 2), (7, 3)]:
            cycles = trace_cycles(lens_diagram(p, q))
            self.assertEqual(cycles.count, p)
            self.assertTrue(all(len(orbit) == 4 for orbit in cycles.orbits))

    def test_chordless_circle_gives_two_fixed_cycles(self):
        d, _ = builtin_example("solid-torus")
        cycles = trace_cycles(d)
        self.assertEqual(cycles.count, 3)
        self.assertEqual(sorted(len(o) for o in cycles.orbits), [1, 1, 4])

    def test_cycles_partition_sides(self):
        for d, _ in random_corpus(50):
            sides = [s for orbit in trace_cycles(d).orbits for s in orbit]
            self.assertEqual(len(sides), len(set(sides)))
            self.assertEqual(set(sides), set(d.arc_sides()))


class TestDecoration(unittest.TestCase):
    def test_decorate_defaults_to_distinct_colors(self):
        deco = decorate(lens_diagram(5, 2))
        self.assertEqual(deco.colors, (1, 2, 3, 4, 5))
        self.assertEqual(deco.fresh_color(), 6)

    def test_decorate_wrong_count(self):
        with self.assertRaises(StaleDecorationError):
            decorate(lens_diagram(3, 1), [1, 2])

    def test_check_decoration(self):
        with self.assertRaises(StaleDecorationError):
            check_decoration(lens_diagram(3, 1), decorate(lens_diagram(2, 1)))

    def test_edge_colorings(self):
        d, deco = builtin_example("solid-torus")
        colorings = infer_edge_colorings(d, deco)
        self.assertEqual(len(colorings), d.num_arcs)
        self.assertTrue(all(pair == (1, 1) for pair in colorings.values()))

    def test_chord_color_equalities_hold_for_traced_decorations(self):
        for d, deco in random_corpus(50, random_colors=True):
            report = check_chord_color_equalities(d, deco)
            self.assertTrue(report.ok, report.violations)


class TestRibbonMap(unittest.TestCase):
    def test_s3(self):
        ribbon = build_ribbon_map(GaussDiagram.build([["h1"]], [["h1"]], {"h1": 1}))
        self.assertEqual(len(ribbon.vertices()), 1)
        self.assertEqual(len(ribbon.edges()), 2)
        self.assertEqual(ribbon.boundary_components, 1)
        self.assertEqual(ribbon.euler_characteristic(), -1)

    def test_boundary_count_matches_cycle_count(self):
        for d, _ in random_corpus(1000):
            self.assertEqual(build_ribbon_map(d).boundary_components, trace_cycles(d).count)


if __name__ == '__main__':
    unittest.main()
