import unittest
import sys
import os

# Add src to path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '../src')))

from gauss_explorer.diagram import Decoration, Family, GaussDiagram, PreconditionError, disjoint_union
from gauss_explorer.examples import builtin_example, lens_diagram
from gauss_explorer.topology import (
    Reducibility, Verdict, boundary_genera, boundary_graphs, closed_condition, color_excess,
    euler_characteristic, genus, genus_from_euler, r_connected, reducibility_hint, summary,
    surface_connected, undecorated_genus,
)
from gauss_explorer.tracing import decorate
from tests.corpus import random_corpus


class TestGenus(unittest.TestCase):
    def test_s3(self):
        d, deco = builtin_example("s3")
        self.assertEqual(genus(d, deco), 1)
        self.assertEqual(color_excess(deco), 0)
        self.assertEqual(euler_characteristic(d, deco), 0)

    def test_lens_spaces_are_genus_one(self):
        for p, q in [(2, 1), (5, 2), (7, 3)]:
            d = lens_diagram(p, q)
            self.assertEqual(genus(d, decorate(d)), 1)
            self.assertEqual(undecorated_genus(d), 1)

    def test_shared_colors_raise_genus(self):
        d, deco = builtin_example("solid-torus")
        self.assertEqual(color_excess(deco), 2)
        self.assertEqual(genus(d, deco), 2)
        self.assertEqual(genus(d, decorate(d)), 0)

    def test_empty_diagram(self):
        empty = GaussDiagram()
        deco = Decoration((), ())
        self.assertEqual(genus(empty, deco), 0)
        report = boundary_genera(empty, deco)
        self.assertEqual((report.k_plus, report.k_minus), (1, 1))
        self.assertEqual(report.verdict, Verdict.CLOSED)

    def test_genus_formula_matches_euler_characteristic(self):
        """The cycle-count genus agrees with the ribbon-map genus."""
        for d, deco in random_corpus(1000, random_colors=True):
            self.assertEqual(genus(d, deco), genus_from_euler(d, deco))
            self.assertEqual(2 - 2 * genus(d, deco), euler_characteristic(d, deco))


class TestBoundary(unittest.TestCase):
    def test_s3_is_closed(self):
        d, deco = builtin_example("s3")
        report = boundary_genera(d, deco)
        self.assertEqual((report.k_plus, report.k_minus), (1, 1))
        self.assertEqual((report.dg_plus, report.dg_minus), (0, 0))
        self.assertEqual(report.verdict, Verdict.CLOSED)
        self.assertTrue(closed_condition(d, report))

    def test_lens_is_closed(self):
        d = lens_diagram(3, 1)
        report = boundary_genera(d, decorate(d))
        self.assertEqual(report.verdict, Verdict.CLOSED)
        self.assertEqual(report.verdict_text(), "Closed")

    def test_solid_torus_is_knot_complement(self):
        d, deco = builtin_example("solid-torus")
        report = boundary_genera(d, deco)
        self.assertEqual((report.dg_plus, report.dg_minus), (0, 1))
        self.assertEqual(report.verdict, Verdict.KNOT_COMPLEMENT)
        self.assertFalse(closed_condition(d, report))

    def test_boundary_graphs_use_opposite_family(self):
        d, deco = builtin_example("solid-torus")
        c_plus, c_minus = boundary_graphs(d, deco)
        self.assertEqual(c_plus.which, Family.PLUS)
        self.assertEqual(len(c_plus.edges), len(d.all_arcs(Family.MINUS)))
        self.assertEqual(len(c_minus.edges), len(d.all_arcs(Family.PLUS)))
        self.assertEqual(c_plus.components, 1)


class TestConnectivity(unittest.TestCase):
    def test_r_connected(self):
        d, deco = builtin_example("s3")
        union, union_deco = disjoint_union(d, deco, d, deco)
        self.assertFalse(r_connected(union, union_deco))
        shared, shared_deco = disjoint_union(d, deco, d, deco, share_colors=True)
        self.assertTrue(r_connected(shared, shared_deco))
        self.assertTrue(surface_connected(shared, shared_deco))

    def test_solid_torus_is_r_connected(self):
        d, deco = builtin_example("solid-torus")
        self.assertTrue(r_connected(d, deco))
        self.assertFalse(r_connected(d, decorate(d)))

    def test_reducibility_hint(self):
        self.assertEqual(reducibility_hint(lens_diagram(5, 2)), Reducibility.FILLS_DISCS)
        d, _ = builtin_example("solid-torus")
        with self.assertRaises(PreconditionError):
            reducibility_hint(d)


class TestSummary(unittest.TestCase):
    def test_s3_summary(self):
        d, deco = builtin_example("s3")
        facts = summary(d, deco)
        self.assertEqual(facts["genus"], 1)
        self.assertEqual(facts["chords"], 1)
        self.assertEqual(facts["cycles"], 1)
        self.assertEqual(facts["k+"], 1)
        self.assertEqual(facts["boundary genus -"], 0)
        self.assertEqual(facts["verdict"], "Closed")
        self.assertTrue(facts["R-connected"])

    def test_solid_torus_summary(self):
        d, deco = builtin_example("solid-torus")
        facts = summary(d, deco)
        self.assertEqual(facts["genus"], 2)
        self.assertEqual(facts["color excess"], 2)
        self.assertEqual(facts["verdict"], "KnotComplement")


if __name__ == '__main__':
    unittest.main()
