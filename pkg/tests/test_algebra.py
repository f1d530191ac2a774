import unittest
import sys
import os

# Add src to path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '../src')))

from gauss_explorer.algebra import (
    H1Group, IntMatrix, Presentation, abelianize, closed_preconditions, format_word, h1,
    h1_of_presentation, intersection_matrix, is_homology_sphere, pi1_closed, pi1_general,
    reduce_word, smith_normal_form, symmetric_intersection_form,
)
from gauss_explorer.diagram import GaussDiagramError, PreconditionError
from gauss_explorer.examples import (
    HEMPEL_RELATORS, POINCARE_RELATORS, builtin_example, diagram_from_relators, lens_diagram,
)
from gauss_explorer.moves import normalize_colors


class TestWords(unittest.TestCase):
    def test_reduce_word(self):
        self.assertEqual(reduce_word((1, -1, 2)), (2,))
        self.assertEqual(reduce_word((1, 2, -2, -1)), ())
        self.assertEqual(reduce_word((1, 1)), (1, 1))

    def test_format_word(self):
        self.assertEqual(format_word((-1, -1, -1, -1, 2, 1, 2), ["g1", "g2"]), "g1^-4 g2 g1 g2")
        self.assertEqual(format_word((), ["g1"]), "1")

    def test_presentation_checks_letters(self):
        with self.assertRaises(GaussDiagramError):
            Presentation(["g1"], [(2,)])


class TestClosedPresentation(unittest.TestCase):
    def test_lens(self):
        p = pi1_closed(lens_diagram(5, 2))
        self.assertEqual(p.generators, ["g1"])
        self.assertEqual(p.relators, [(1, 1, 1, 1, 1)])
        self.assertEqual(str(p), "⟨g1 | g1^5⟩")

    def test_poincare_relators(self):
        d = diagram_from_relators(POINCARE_RELATORS, 2)
        p = pi1_closed(d, check_genus=False)
        self.assertEqual(p.relators, [tuple(r) for r in POINCARE_RELATORS])
        self.assertEqual(str(p), "⟨g1, g2 | g1^-4 g2 g1 g2, g1 g2^-2 g1 g2⟩")

    def test_preconditions(self):
        d, _ = builtin_example("solid-torus")
        self.assertIn("family sizes differ", closed_preconditions(d))
        with self.assertRaises(PreconditionError):
            pi1_closed(d)
        self.assertIsNone(closed_preconditions(lens_diagram(3, 1)))


class TestMatrices(unittest.TestCase):
    def test_intersection_matrix(self):
        d = diagram_from_relators(HEMPEL_RELATORS, 2)
        self.assertEqual(intersection_matrix(d).entries, ((-1, 1), (0, -1)))
        self.assertEqual(intersection_matrix(d).det(), 1)

    def test_symmetric_form(self):
        d = diagram_from_relators(HEMPEL_RELATORS, 2)
        form = symmetric_intersection_form(d)
        self.assertEqual(form.entries, (
            (0, 0, -1, 1),
            (0, 0, 0, -1),
            (-1, 0, 0, 0),
            (1, -1, 0, 0),
        ))

    def test_abelianize_matches_intersection_matrix(self):
        d = diagram_from_relators(POINCARE_RELATORS, 2)
        self.assertEqual(abelianize(pi1_closed(d, check_genus=False)), intersection_matrix(d))

    def test_smith_normal_form(self):
        _, diag = smith_normal_form(IntMatrix.from_rows([[2, 0], [0, 3]]))
        self.assertEqual(diag, (1, 6))
        _, diag = smith_normal_form(IntMatrix.from_rows([[2, 4], [6, 8]]))
        self.assertEqual(diag, (2, 4))

    def test_empty_matrix(self):
        m = IntMatrix.from_rows([])
        self.assertEqual(m.det(), 1)
        self.assertEqual(smith_normal_form(m)[1], ())

    def test_non_square_det(self):
        with self.assertRaises(GaussDiagramError):
            IntMatrix.from_rows([[1, 2]]).det()


class TestHomology(unittest.TestCase):
    def test_h1_group_text(self):
        self.assertEqual(str(H1Group(0)), "0")
        self.assertEqual(str(H1Group(1)), "Z")
        self.assertEqual(str(H1Group(2, (5,))), "Z^2 + Z/5")

    def test_h1_of_presentation(self):
        self.assertEqual(h1_of_presentation(Presentation(["g1", "g2"], [(1, 1)])), H1Group(1, (2,)))

    def test_s3_and_lens(self):
        d, deco = builtin_example("s3")
        self.assertTrue(h1(d, deco).is_trivial)
        self.assertEqual(str(h1(lens_diagram(5, 2))), "Z/5")
        self.assertEqual(h1(lens_diagram(7, 3)), H1Group(0, (7,)))

    def test_homology_spheres(self):
        for relators in (POINCARE_RELATORS, HEMPEL_RELATORS):
            d = diagram_from_relators(relators, 2)
            self.assertTrue(is_homology_sphere(d, check_genus=False))
            self.assertTrue(h1(d, check_genus=False).is_trivial)
        self.assertFalse(is_homology_sphere(lens_diagram(5, 2)))

    def test_solid_torus_general_route(self):
        """With g+ != g- H1 comes from the spanning-tree presentation."""
        d, deco = builtin_example("solid-torus")
        self.assertEqual(h1(d, deco), H1Group(1))

    def test_pi1_general_needs_distinct_colors(self):
        d, deco = builtin_example("solid-torus")
        with self.assertRaises(PreconditionError):
            pi1_general(d, deco)
        nd, ndeco, _ = normalize_colors(d, deco)
        p = pi1_general(nd, ndeco)
        self.assertEqual(len(p.generators), 6)
        self.assertEqual(h1_of_presentation(p), H1Group(1))


if __name__ == '__main__':
    unittest.main()
