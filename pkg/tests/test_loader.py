import unittest
import sys
import os
import tempfile
from pathlib import Path

# Add src to path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '../src')))

from gauss_explorer.diagram import ParseError, PreconditionError, UnknownExampleError
from gauss_explorer.examples import builtin_example
from gauss_explorer.loader import DiagramLoader, collect_files, load_source
from gauss_explorer.textformat import serialize
from gauss_explorer.tree import TreeBuilder, matches


class TestLoader(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.tmp = tempfile.TemporaryDirectory()
        cls.root = Path(cls.tmp.name)
        (cls.root / "nested").mkdir()
        (cls.root / "s3.gd").write_text(serialize(*builtin_example("s3")), encoding="utf-8")
        (cls.root / "nested" / "lens.gd").write_text(serialize(*builtin_example("lens:5:2")), encoding="utf-8")
        (cls.root / "broken.gd").write_text("gd v1\nchord h1 +\n", encoding="utf-8")
        (cls.root / "notes.txt").write_text("not a diagram", encoding="utf-8")

    @classmethod
    def tearDownClass(cls):
        cls.tmp.cleanup()

    def test_collect_directory(self):
        files = collect_files([str(self.root)])
        self.assertEqual([f.name for f in files], ["broken.gd", "s3.gd"])

    def test_collect_recursive(self):
        files = collect_files([str(self.root)], recursive=True)
        self.assertEqual(sorted(f.name for f in files), ["broken.gd", "lens.gd", "s3.gd"])

    def test_collect_glob(self):
        files = collect_files([str(self.root / "s*.gd")])
        self.assertEqual([f.name for f in files], ["s3.gd"])

    def test_load_source(self):
        loaded = load_source(str(self.root / "s3.gd"))
        self.assertEqual(loaded.name, "s3.gd")
        self.assertEqual(loaded.diagram.num_chords, 1)
        self.assertTrue(loaded.check_genus)

        example = load_source("@hempel-relators")
        self.assertIsNone(example.path)
        self.assertFalse(example.check_genus)

        with self.assertRaises(UnknownExampleError):
            load_source("@nosuch")

    def test_reconstructed_refuses_ordered_invariants(self):
        load_source("@s3").require_ordered()
        with self.assertRaises(PreconditionError) as ctx:
            load_source("@poincare-relators").require_ordered()
        self.assertIn("reconstructed from relators", str(ctx.exception))

    def test_non_utf8_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            bad = Path(tmp) / "latin.gd"
            bad.write_bytes(b"\xff\xfe gd v1\n")
            (Path(tmp) / "s3.gd").write_text(serialize(*builtin_example("s3")), encoding="utf-8")

            with self.assertRaises(ParseError) as ctx:
                load_source(str(bad))
            self.assertIn("not UTF-8", str(ctx.exception))

            loader = DiagramLoader([tmp])
            with self.assertLogs("gauss_explorer.loader", level="ERROR"):
                loader.load()
            self.assertEqual([x.name for x in loader.diagrams], ["s3.gd"])
            self.assertEqual(len(loader.errors), 1)
            self.assertIn("latin.gd", loader.errors[0][0])

    def test_loader_records_errors(self):
        loader = DiagramLoader([str(self.root), "@s3"])
        with self.assertLogs("gauss_explorer.loader", level="ERROR"):
            loader.load()
        self.assertEqual(sorted(x.name for x in loader.diagrams), ["s3", "s3.gd"])
        self.assertEqual(len(loader.errors), 1)
        self.assertIn("broken.gd", loader.errors[0][0])


class TestTreeBuilder(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.diagrams = [load_source("@solid-torus"), load_source("@s3")]

    def test_build_tree(self):
        tree = TreeBuilder.build_tree(self.diagrams)
        self.assertEqual([n.name for n in tree], ["s3", "solid-torus"])
        groups = [child.name for child in tree[0].children]
        self.assertEqual(groups, ["🔧 Invariants", "plus circles", "minus circles", "🎨 Colors"])

    def test_invariants_group(self):
        tree = TreeBuilder.build_tree(self.diagrams)
        invariants = {leaf.name: leaf.info.value for leaf in tree[1].children[0].children}
        self.assertEqual(invariants["genus"], "2")
        self.assertEqual(invariants["verdict"], "KnotComplement")
        self.assertEqual(invariants["H1"], "Z")

    def test_reconstructed_invariants(self):
        tree = TreeBuilder.build_tree([load_source("@hempel-relators")])
        invariants = {leaf.name: leaf.info.value for leaf in tree[0].children[0].children}
        self.assertEqual(invariants["genus"], "n/a")
        self.assertNotIn("verdict", invariants)
        self.assertEqual(invariants["H1"], "0")

    def test_circles_group(self):
        node = TreeBuilder.build_tree(self.diagrams)[1].children[1]
        self.assertEqual(node.item_count, 2)
        self.assertEqual(node.children[1].name, "plus:1: (chordless)")
        self.assertIn("whole circle", node.children[1].children[0].info.value)

    def test_filter(self):
        tree = TreeBuilder.build_tree(self.diagrams, "verdict")
        self.assertEqual(len(tree), 2)
        leaves = tree[0].children[0].children
        self.assertTrue(all(leaf.is_item for leaf in leaves))
        self.assertIn("verdict", [leaf.name for leaf in leaves])

    def test_matches(self):
        self.assertTrue(matches("", "anything"))
        self.assertTrue(matches("genus", "boundary genus +"))
        self.assertFalse(matches("zzzz", "genus"))


if __name__ == '__main__':
    unittest.main()
