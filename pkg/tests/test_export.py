import unittest
import sys
import os

# Add src to path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '../src')))

from gauss_explorer.diagram import PreconditionError
from gauss_explorer.examples import HEMPEL_RELATORS, builtin_example, diagram_from_relators, lens_diagram
from gauss_explorer.export import export_heegaard, export_svg, heegaard_layout, to_dot


class TestDot(unittest.TestCase):
    def test_s3(self):
        d, deco = builtin_example("s3")
        dot = to_dot(d, deco)
        self.assertTrue(dot.startswith("digraph gauss {"))
        self.assertIn('"h1" [label="h1 +"];', dot)
        self.assertIn('"h1" -> "h1" [label="plus:0:0 (1, 1)"', dot)
        self.assertEqual(dot.count("->"), 2)

    def test_chordless_circle_is_a_point(self):
        d, _ = builtin_example("solid-torus")
        dot = to_dot(d)
        self.assertIn('"plus:1" [shape=point];', dot)
        self.assertIn('"plus:1" -> "plus:1"', dot)


class TestHeegaard(unittest.TestCase):
    def test_s3_text(self):
        d, _ = builtin_example("s3")
        self.assertEqual(export_heegaard(d), (
            "heegaard genus 1\n"
            "hole pair 1: m1+ <-> m1-\n"
            "m1+: h1@0\n"
            "m1-: h1@0\n"
            "strand 1 (minus:0:0): m1+@0 -> m1-@0\n"
        ))

    def test_lens_strands(self):
        layout = heegaard_layout(lens_diagram(5, 2))
        self.assertEqual(layout.genus, 1)
        self.assertEqual(len(layout.strands), 5)
        self.assertTrue(all(s.start[0] == "m1+" and s.end[0] == "m1-" for s in layout.strands))

    def test_needs_closed_preconditions(self):
        d, _ = builtin_example("solid-torus")
        with self.assertRaises(PreconditionError):
            heegaard_layout(d)

    def test_reconstructed_relators(self):
        d = diagram_from_relators(HEMPEL_RELATORS, 2)
        layout = heegaard_layout(d, check_genus=False)
        self.assertEqual(layout.genus, 2)
        self.assertEqual(len(layout.strands), d.num_chords)
        self.assertTrue(export_heegaard(d, check_genus=False).startswith("heegaard genus 2\n"))

    def test_svg(self):
        svg = export_svg(lens_diagram(3, 1), size=300)
        self.assertTrue(svg.startswith("<svg"))
        self.assertTrue(svg.rstrip().endswith("</svg>"))
        self.assertEqual(svg.count("<line"), 3)
        self.assertIn('width="300"', svg)


if __name__ == '__main__':
    unittest.main()
