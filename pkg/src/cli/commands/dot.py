import argparse

from src.cli.dependencies import load_any
from src.models.triangulation import Triangulation
from src.schemas.run_config import OutputFormat, RunConfig
from src.utils.export import (
    quiver_to_dot,
    quiver_to_svg,
    triangulation_to_dot,
    triangulation_to_svg,
)

NAME = "dot"


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(NAME, help="export a quiver or triangulation")
    parser.add_argument("file", help="quiver, seed or triangulation file")
    parser.add_argument("--format", dest="output_format", default="dot")
    parser.set_defaults(handler=run)


def run(config: RunConfig) -> None:
    value = load_any(config.inputs[0])
    svg = config.output_format == OutputFormat.SVG
    if isinstance(value, Triangulation):
        text = triangulation_to_svg(value) if svg else triangulation_to_dot(value)
    else:
        text = quiver_to_svg(value) if svg else quiver_to_dot(value)
    print(text, end="")
