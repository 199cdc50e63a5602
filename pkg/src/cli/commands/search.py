import argparse
import json

from src.cli.dependencies import load_quiver
from src.schemas.run_config import OutputFormat, RunConfig, SearchMode
from src.services.decomposition import count_three_cycles, is_type_a
from src.services.search import search_report

NAME = "search"


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(
        NAME, help="exhaustive search over green mutations"
    )
    parser.add_argument("file", help="quiver, seed or triangulation file")
    modes = parser.add_mutually_exclusive_group()
    for mode in (
        SearchMode.SHORTEST,
        SearchMode.LONGEST,
        SearchMode.SPECTRUM,
        SearchMode.COUNT,
    ):
        modes.add_argument(
            f"--{mode.value}",
            dest="search_mode",
            action="store_const",
            const=mode.value,
        )
    parser.add_argument("--format", dest="output_format", default="json")
    parser.set_defaults(handler=run, search_mode=SearchMode.ALL.value)


def run(config: RunConfig) -> None:
    """Print a report with the requested fields; the others stay null."""
    q, _ = load_quiver(config.inputs[0])
    mode = config.search_mode
    report = search_report(
        q,
        t=count_three_cycles(q) if is_type_a(q) else None,
        shortest=mode in (SearchMode.SHORTEST, SearchMode.ALL),
        longest=mode in (SearchMode.LONGEST, SearchMode.ALL),
        spectrum=mode in (SearchMode.SPECTRUM, SearchMode.ALL),
        count=mode in (SearchMode.COUNT, SearchMode.ALL),
    )
    data = report.model_dump(by_alias=True)
    if config.output_format == OutputFormat.JSON:
        print(json.dumps(data))
    else:
        for key, value in data.items():
            if value is not None:
                print(f"{key}: {value}")
