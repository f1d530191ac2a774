import unittest
import sys
import os

# Add src to path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '../src')))

from gauss_explorer.diagram import GaussDiagramError, UnknownExampleError, validate
from gauss_explorer.examples import (
    EXAMPLES, builtin_example, example_info, lens_diagram, list_examples, random_diagram, suggest,
)
from gauss_explorer.topology import boundary_genera


class TestBuiltinExamples(unittest.TestCase):
    def test_every_example_loads(self):
        for info in list_examples():
            name = "lens:5:2" if info.name == "lens:p:q" else info.name
            with self.subTest(name=name):
                d, deco = builtin_example(name)
                self.assertTrue(validate(d, deco).ok)

    def test_reconstructed_metadata(self):
        self.assertTrue(example_info("poincare-relators").reconstructed)
        self.assertFalse(example_info("poincare-relators").check_genus)
        self.assertTrue(example_info("lens:3:1").check_genus)
        self.assertEqual(len(EXAMPLES), 6)

    def test_lens_rejects_bad_parameters(self):
        for p, q in [(4, 2), (1, 1), (5, 5), (5, 0)]:
            with self.subTest(p=p, q=q):
                with self.assertRaises(GaussDiagramError):
                    lens_diagram(p, q)
        with self.assertRaises(GaussDiagramError):
            builtin_example("lens:5")

    def test_lens_minus_order(self):
        d = lens_diagram(5, 2)
        self.assertEqual(d.minus_circles, (("h1", "h3", "h5", "h2", "h4"),))

    def test_unknown_example_suggests(self):
        with self.assertRaises(UnknownExampleError) as ctx:
            builtin_example("poincare")
        self.assertIn("poincare-relators", ctx.exception.suggestions)
        self.assertIn("did you mean", str(ctx.exception))
        self.assertIn("poincare-relators", suggest("poincare"))

    def test_solid_torus_verdict(self):
        d, deco = builtin_example("solid-torus")
        self.assertEqual(boundary_genera(d, deco).verdict_text(), "KnotComplement")

    def test_thickened_torus(self):
        d, deco = builtin_example("torus-x-i")
        self.assertEqual((d.g_plus, d.g_minus, d.num_chords), (1, 1, 8))
        self.assertEqual(deco.num_cycles, 8)
        self.assertEqual(deco.num_colors, 8)
        self.assertEqual(sorted(len(cycle) for cycle in deco.cycles), [2, 2, 2, 2, 4, 4, 8, 8])

        report = boundary_genera(d, deco)
        self.assertEqual(report.g_s, 1)
        self.assertEqual((report.k_plus, report.k_minus), (2, 2))
        self.assertEqual(report.verdict_text(), "CompressionBodies(1, 1)")


class TestRandomDiagram(unittest.TestCase):
    def test_deterministic(self):
        self.assertEqual(random_diagram(7), random_diagram(7))

    def test_within_bounds(self):
        for seed in range(20):
            d, deco = random_diagram(seed, max_circles=2, max_chords=5)
            self.assertTrue(validate(d, deco).ok)
            self.assertLessEqual(d.g_plus, 2)
            self.assertLessEqual(d.g_minus, 2)
            self.assertLessEqual(d.num_chords, 5)

    def test_random_colors_stay_in_range(self):
        for seed in range(20):
            _, deco = random_diagram(seed, random_colors=True)
            self.assertTrue(all(1 <= c <= deco.num_cycles for c in deco.colors))


if __name__ == '__main__':
    unittest.main()
