import argparse
import json

from src.cli.dependencies import load_quiver
from src.cli.exceptions import VerificationFailed
from src.config import get_settings
from src.logger import cli_logger
from src.schemas.run_config import OutputFormat, RunConfig
from src.services.decomposition import count_three_cycles
from src.services.procedures import minimal_mgs
from src.services.search import shortest_mgs

settings = get_settings()

NAME = "generate"


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(
        NAME, help="build a minimal-length maximal green sequence"
    )
    parser.add_argument("file", help="quiver, seed or triangulation file")
    parser.add_argument(
        "--oracle",
        action="store_true",
        help="also run exhaustive search and require the same length",
    )
    parser.add_argument("--format", dest="output_format", default="text")
    parser.set_defaults(handler=run)


def run(config: RunConfig) -> None:
    """
    Print the sequence produced by the minimal procedure.

    Raises:
    - **VerificationFailed**: If ``--oracle`` finds a shorter sequence.
    """
    q, _ = load_quiver(config.inputs[0])
    cli_logger.info(f"generate: n={q.n} from {config.inputs[0]}")
    sequence = minimal_mgs(q)
    t = count_three_cycles(q)

    oracle_length = None
    if config.oracle:
        oracle_length = shortest_mgs(q).length
        if oracle_length != sequence.length:
            raise VerificationFailed(
                NAME,
                f"procedure length {sequence.length} != shortest length {oracle_length}",
            )

    if config.output_format == OutputFormat.JSON:
        payload = {
            "schema": settings.REPORT_SCHEMA_VERSION,
            "n": q.n,
            "t": t,
            "length": sequence.length,
            "sequence": list(sequence.steps),
        }
        if oracle_length is not None:
            payload["oracle_length"] = oracle_length
        print(json.dumps(payload))
        return

    print(str(sequence))
    print(f"length {sequence.length} (n={q.n}, t={t})")
    if oracle_length is not None:
        print(f"oracle shortest length {oracle_length}")
