import glob
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Tuple

from .diagram import Decoration, GaussDiagram, GaussDiagramError, ParseError, PreconditionError
from .examples import ExampleInfo, builtin_example, example_info
from .textformat import parse

logger = logging.getLogger(__name__)

DIAGRAM_SUFFIX = ".gd"


@dataclass
class LoadedDiagram:
    name: str
    diagram: GaussDiagram
    decoration: Decoration
    path: Optional[Path] = None
    example: Optional[ExampleInfo] = None

    @property
    def check_genus(self) -> bool:
        return self.example is None or self.example.check_genus

    def require_ordered(self) -> None:
        """Refuse invariants that depend on the plus-circle orders of a reconstruction."""
        if not self.check_genus:
            raise PreconditionError(f"{self.name} is reconstructed from relators; genus and boundary "
                                    f"invariants need the original plus-circle orders")


def collect_files(paths: List[str], recursive: bool = False) -> List[Path]:
    collected_files = []

    for path_str in paths:
        expanded_paths = glob.glob(path_str, recursive=recursive)
        if not expanded_paths and Path(path_str).exists():
            expanded_paths = [path_str]

        for p in expanded_paths:
            path = Path(p)
            if path.is_file() and path.suffix.lower() == DIAGRAM_SUFFIX:
                collected_files.append(path)
            elif path.is_dir():
                pattern = f"**/*{DIAGRAM_SUFFIX}" if recursive else f"*{DIAGRAM_SUFFIX}"
                collected_files.extend(path.glob(pattern))

    return sorted(set(collected_files))


def load_source(source: str) -> LoadedDiagram:
    """Load `@name` as a builtin example, anything else as a diagram file."""
    if source.startswith("@"):
        name = source[1:]
        info = example_info(name)
        d, deco = builtin_example(name)
        return LoadedDiagram(name, d, deco, example=info)
    path = Path(source)
    try:
        text = path.read_text(encoding="utf-8")
    except UnicodeDecodeError as e:
        raise ParseError(f"{path.name}: not UTF-8 text ({e.reason})") from None
    d, deco = parse(text)
    return LoadedDiagram(path.name, d, deco, path=path)


class DiagramLoader:
    def __init__(self, sources: List[str], recursive: bool = False):
        self.sources = sources
        self.recursive = recursive
        self.diagrams: List[LoadedDiagram] = []
        self.errors: List[Tuple[str, str]] = []

    def expand(self) -> List[str]:
        names = [s for s in self.sources if s.startswith("@")]
        paths = [s for s in self.sources if not s.startswith("@")]
        return names + [str(p) for p in collect_files(paths, self.recursive)]

    def load(self) -> None:
        for source in self.expand():
            try:
                self.diagrams.append(load_source(source))
            except (GaussDiagramError, OSError) as e:
                logger.error("Error loading %s: %s", source, e)
                self.errors.append((source, str(e)))
