import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from .algebra import h1, intersection_matrix, is_homology_sphere, pi1_closed, pi1_general, symmetric_intersection_form
from .diagram import GaussDiagramError, validate
from .examples import DEFAULT_SEED, builtin_example, list_examples, random_diagram
from .export import export_heegaard, export_svg, to_dot
from .loader import DiagramLoader, LoadedDiagram, load_source
from .moves import normalize_colors, run_script
from .textformat import format_script, parse_script, serialize
from .topology import summary
from .tracing import check_chord_color_equalities


def write_output(text: str, output: Optional[str]) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
        print(f"Wrote {output}")
    else:
        print(text, end="")


def cmd_validate(args) -> int:
    loader = DiagramLoader(args.sources, args.recursive)
    sources = loader.expand()
    if not sources:
        print("Error: No diagram files found in the specified paths.", file=sys.stderr)
        return 1
    loader.load()
    failed = bool(loader.errors)
    for loaded in loader.diagrams:
        violations = validate(loaded.diagram, loaded.decoration).violations
        violations += check_chord_color_equalities(loaded.diagram, loaded.decoration).violations
        if violations:
            failed = True
            print(f"{loaded.name}: invalid: {'; '.join(violations)}")
        else:
            print(f"{loaded.name}: valid")
    for source, error in loader.errors:
        print(f"{source}: {error}", file=sys.stderr)
    return 1 if failed else 0


def cmd_info(args) -> int:
    loaded = load_source(args.source)
    loaded.require_ordered()
    for key, value in summary(loaded.diagram, loaded.decoration).items():
        print(f"{key}: {value}")
    return 0


def cmd_cycles(args) -> int:
    loaded = load_source(args.source)
    loaded.require_ordered()
    deco = loaded.decoration
    for i, (cycle, color) in enumerate(zip(deco.cycles, deco.colors), 1):
        print(f"cycle {i} [color {color}]: {' '.join(str(side) for side in cycle)}")
    return 0


def cmd_pi1(args) -> int:
    loaded = load_source(args.source)
    if args.general:
        d, deco = loaded.diagram, loaded.decoration
        if deco.num_colors != deco.num_cycles:
            d, deco, _ = normalize_colors(d, deco)
        print(pi1_general(d, deco))
    else:
        print(pi1_closed(loaded.diagram, check_genus=loaded.check_genus))
    return 0


def cmd_h1(args) -> int:
    loaded = load_source(args.source)
    print(h1(loaded.diagram, loaded.decoration, check_genus=loaded.check_genus))
    return 0


def cmd_homology_sphere(args) -> int:
    loaded = load_source(args.source)
    print("yes" if is_homology_sphere(loaded.diagram, check_genus=loaded.check_genus) else "no")
    return 0


def cmd_matrix(args) -> int:
    loaded = load_source(args.source)
    if args.symmetric:
        print(symmetric_intersection_form(loaded.diagram))
    else:
        print(intersection_matrix(loaded.diagram))
    return 0


def cmd_move(args) -> int:
    loaded = load_source(args.source)
    text = Path(args.script).read_text(encoding="utf-8") if args.script else "\n".join(args.spec or [])
    script = parse_script(text)
    if not script:
        print("Error: no moves given (use --spec or --script)", file=sys.stderr)
        return 2
    d, deco = run_script(loaded.diagram, loaded.decoration, script)
    write_output(serialize(d, deco), args.output)
    return 0


def cmd_normalize(args) -> int:
    loaded = load_source(args.source)
    d, deco, script = normalize_colors(loaded.diagram, loaded.decoration)
    write_output(serialize(d, deco), args.output)
    if script:
        print(f"# {len(script)} move(s)", file=sys.stderr)
        print(format_script(script), end="", file=sys.stderr)
    return 0


def cmd_example(args) -> int:
    d, deco = builtin_example(args.name)
    write_output(serialize(d, deco), args.output)
    return 0


def cmd_examples(args) -> int:
    for info in list_examples():
        tag = " (reconstructed)" if info.reconstructed else ""
        print(f"{info.name:<20} {info.description}{tag}")
    return 0


def cmd_export(args) -> int:
    loaded = load_source(args.source)
    if args.format == "dot":
        loaded.require_ordered()
        text = to_dot(loaded.diagram, loaded.decoration)
    elif args.format == "svg":
        text = export_svg(loaded.diagram, check_genus=loaded.check_genus)
    else:
        text = export_heegaard(loaded.diagram, check_genus=loaded.check_genus)
    write_output(text, args.output)
    return 0


def cmd_explore(args) -> int:
    from .app import GaussExplorerApp
    loader = DiagramLoader(args.sources, args.recursive)
    if not loader.expand():
        print("Error: No diagram files found in the specified paths.", file=sys.stderr)
        return 1
    app = GaussExplorerApp(args.sources, args.recursive)
    app.run()
    return 0


def cmd_chart(args) -> int:
    from .visualizer import visualize_diagram
    loaded: LoadedDiagram = load_source(args.source)
    loaded.require_ordered()
    visualize_diagram(loaded, args.output)
    return 0


def cmd_random(args) -> int:
    d, deco = random_diagram(args.seed, args.max_circles, args.max_chords, args.random_colors)
    write_output(serialize(d, deco), args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="Gauss diagrams of 3-manifolds: invariants, moves and exports"
    )
    parser.add_argument(
        "-v", "--verbose",
        action="store_true",
        help="Log library diagnostics to stderr"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def source_command(name: str, func, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("source", help="Diagram file, or @name for a builtin example")
        p.set_defaults(func=func)
        return p

    def output_option(p: argparse.ArgumentParser) -> None:
        p.add_argument("-o", "--output", help="Write to this file instead of stdout")

    p = sub.add_parser("validate", help="Check diagram files, directories or glob patterns")
    p.add_argument("sources", nargs="+", help="Diagram files, directories, glob patterns or @names")
    p.add_argument("-r", "--recursive", action="store_true", help="Recursively search directories")
    p.set_defaults(func=cmd_validate)

    source_command("info", cmd_info, "Print genus, boundary genera and verdict")
    source_command("cycles", cmd_cycles, "List the traced cycles and their colours")
    p = source_command("pi1", cmd_pi1, "Print a fundamental group presentation")
    p.add_argument("--general", action="store_true", help="Use the spanning-tree presentation")
    source_command("h1", cmd_h1, "Print the first homology group")
    source_command("homology-sphere", cmd_homology_sphere, "Decide whether H1 is trivial")
    p = source_command("matrix", cmd_matrix, "Print the intersection matrix")
    p.add_argument("--symmetric", action="store_true", help="Print the doubled symmetric form")

    p = source_command("move", cmd_move, "Apply moves and print the resulting diagram")
    p.add_argument("--spec", action="append", help="One move, e.g. 'eps plus:0' (repeatable)")
    p.add_argument("--script", help="File with one move per line")
    output_option(p)

    p = source_command("normalize", cmd_normalize, "Give every cycle its own colour using R-moves")
    output_option(p)

    p = sub.add_parser("example", help="Print a builtin example")
    p.add_argument("name", help="Example name, e.g. s3 or lens:5:2")
    output_option(p)
    p.set_defaults(func=cmd_example)

    p = sub.add_parser("examples", help="List builtin examples")
    p.set_defaults(func=cmd_examples)

    p = source_command("export", cmd_export, "Export as DOT, SVG or Heegaard layout text")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--dot", dest="format", action="store_const", const="dot")
    group.add_argument("--svg", dest="format", action="store_const", const="svg")
    group.add_argument("--heegaard", dest="format", action="store_const", const="heegaard")
    output_option(p)

    p = sub.add_parser("explore", help="Browse diagrams interactively")
    p.add_argument("sources", nargs="+", help="Diagram files, directories, glob patterns or @names")
    p.add_argument("-r", "--recursive", action="store_true", help="Recursively search directories")
    p.set_defaults(func=cmd_explore)

    p = source_command("chart", cmd_chart, "Chart colours and cycles as an interactive sunburst")
    output_option(p)

    p = sub.add_parser("random", help="Print a random valid diagram")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--max-circles", type=int, default=4)
    p.add_argument("--max-chords", type=int, default=12)
    p.add_argument("--random-colors", action="store_true", help="Draw cycle colours at random")
    output_option(p)
    p.set_defaults(func=cmd_random)
    return parser


def main(argv: Optional[List[str]] = None) -> None:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)

    try:
        code = args.func(args)
    except GaussDiagramError as e:
        print(f"Error: {e}", file=sys.stderr)
        sys.exit(1)
    except OSError as e:
        print(f"Error: {e}", file=sys.stderr)
        sys.exit(1)
    sys.exit(code)


if __name__ == "__main__":
    main()
