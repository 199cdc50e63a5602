import argparse
import json
import sys

from src.cli.exceptions import VerificationFailed
from src.schemas.run_config import OutputFormat, RunConfig
from src.services.census import census_frame, run_census

NAME = "census"

DEFAULT_LIMIT_M = 8


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(
        NAME, help="check every triangulation of a range of polygons"
    )
    parser.add_argument("--min-m", dest="min_m", type=int, default=3)
    parser.add_argument(
        "--limit-m", dest="limit_m", type=int, default=DEFAULT_LIMIT_M
    )
    parser.add_argument("--jobs", type=int, default=None)
    parser.add_argument(
        "--samples",
        type=int,
        default=0,
        help="random maximal green sequences per triangulation for the extra checks",
    )
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument("--format", dest="output_format", default="csv")
    parser.set_defaults(handler=run)


def run(config: RunConfig) -> None:
    """
    Write one row per triangulation.

    Raises:
    - **VerificationFailed**: If any row fails a check.
    """
    rows = run_census(
        range(config.min_m, config.limit_m + 1),
        jobs=config.jobs,
        samples=config.samples,
        seed=config.seed,
    )
    if config.output_format == OutputFormat.JSON:
        print(json.dumps([row.model_dump(mode="json") for row in rows]))
    else:
        census_frame(rows).to_csv(sys.stdout, index=False)

    failed = [row for row in rows if not row.ok]
    if failed:
        raise VerificationFailed(NAME, f"{len(failed)} of {len(rows)} rows failed")
