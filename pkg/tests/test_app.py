import unittest
import os
import sys
import tempfile
from pathlib import Path

# Add src to path so we can import gauss_explorer
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '../src')))

from gauss_explorer.app import GaussExplorerApp
from gauss_explorer.examples import lens_diagram
from gauss_explorer.textformat import serialize
from gauss_explorer.tracing import decorate
from gauss_explorer.tree import InfoItem, TreeNode


class TestGaussExplorer(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.tmp = tempfile.TemporaryDirectory()
        cls.lens_path = Path(cls.tmp.name) / "lens52.gd"
        d = lens_diagram(5, 2)
        cls.lens_path.write_text(serialize(d, decorate(d)), encoding="utf-8")

    @classmethod
    def tearDownClass(cls):
        cls.tmp.cleanup()

    def test_load_example(self):
        """Test loading a builtin example."""
        app = GaussExplorerApp(["@s3"])
        app.load_diagrams()

        self.assertEqual(len(app.diagrams), 1)
        self.assertEqual(app.diagrams[0].name, "s3")
        self.assertEqual(app.diagrams[0].diagram.num_chords, 1)

    def test_load_file(self):
        app = GaussExplorerApp([str(self.lens_path)])
        app.load_diagrams()

        self.assertEqual([x.name for x in app.diagrams], ["lens52.gd"])
        self.assertEqual(app.diagrams[0].decoration.num_cycles, 5)

    def test_mixed_loading(self):
        """Test loading files and examples together."""
        app = GaussExplorerApp([self.tmp.name, "@solid-torus"])
        app.load_diagrams()

        self.assertEqual(sorted(x.name for x in app.diagrams), ["lens52.gd", "solid-torus"])
        self.assertEqual(app.loader.errors, [])

    def test_format_node_label(self):
        app = GaussExplorerApp([])
        group = TreeNode(name="🎨 Colors", children=[], item_count=3)
        self.assertEqual(app.format_node_label(group), "📁 🎨 Colors (3)")

        leaf = TreeNode(name="cycle 1", info=InfoItem("cycle 1", "x" * 50))
        label = app.format_node_label(leaf)
        self.assertTrue(label.startswith("🏷️ cycle 1: "))
        self.assertTrue(label.endswith("..."))


class TestGaussExplorerPilot(unittest.IsolatedAsyncioTestCase):
    async def test_tree_and_search(self):
        app = GaussExplorerApp(["@s3", "@lens:3:1"])
        async with app.run_test() as pilot:
            tree = app.query_one("#diagram-tree")
            self.assertEqual(len(tree.root.children), 2)
            self.assertIn("2 diagram(s)", app.title)

            await pilot.press("/")
            self.assertTrue(app.has_class("search-active"))

            app.build_tree("h3")
            self.assertEqual(len(tree.root.children), 1)


if __name__ == '__main__':
    unittest.main()
