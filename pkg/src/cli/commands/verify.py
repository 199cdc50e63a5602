import argparse
import json

from src.cli.dependencies import load_quiver
from src.cli.exceptions import VerificationFailed
from src.models.quiver import VertexColor
from src.schemas.run_config import OutputFormat, RunConfig
from src.services.green_sequences import apply_sequence

NAME = "verify"


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(
        NAME, help="check that a sequence is a maximal green sequence"
    )
    parser.add_argument("file", help="quiver, seed or triangulation file")
    parser.add_argument(
        "sequence",
        nargs="?",
        default="",
        help="vertices in application order, e.g. '1 2 3 1' or '1,2,3,1'",
    )
    parser.add_argument("--format", dest="output_format", default="text")
    parser.set_defaults(handler=run)


def run(config: RunConfig) -> None:
    """
    Print the per-step trace and the verdict.

    Raises:
    - **VerificationFailed**: If the sequence is not a maximal green sequence.
    """
    q, _ = load_quiver(config.inputs[0])
    _, report = apply_sequence(q, config.sequence or [])
    verdict = "VALID" if report.is_maximal else "INVALID"

    if config.output_format == OutputFormat.JSON:
        print(json.dumps({"verdict": verdict, **report.model_dump(mode="json")}))
    else:
        for step in report.steps:
            color = step.color.value if step.color else "-"
            note = f"  <- {step.reason}" if step.reason else ""
            print(f"{step.index:>3}  mutate {step.vertex:>3}  {color}{note}")
        red = sum(
            1 for color in report.final_colors.values() if color == VertexColor.RED
        )
        print(f"red vertices at the end: {red}/{q.n}")
        print(verdict)

    if not report.is_maximal:
        reason = (
            f"step {report.first_invalid_step} is not green"
            if not report.valid
            else "not every vertex is red at the end"
        )
        raise VerificationFailed(NAME, reason)
