import argparse
from pathlib import Path

from src.cli import add_commands
from src.config import get_settings
from src.schemas.run_config import RunConfig
from src.utils.parser.text_parser import parse_sequence

settings = get_settings()

_CONFIG_FIELDS = (
    "output_format",
    "min_m",
    "limit_m",
    "jobs",
    "seed",
    "samples",
    "oracle",
    "search_mode",
)


def build_run_config(namespace: argparse.Namespace) -> RunConfig:
    """
    Validates parsed arguments into a `RunConfig`.

    Args:
        namespace (argparse.Namespace): Result of `ArgumentParser.parse_args`.

    Raises:
        ParseError: If the sequence argument is malformed.
        ValidationError: If an option is out of range.

    Returns:
        RunConfig: The validated run configuration.
    """
    values = {
        name: getattr(namespace, name)
        for name in _CONFIG_FIELDS
        if getattr(namespace, name, None) is not None
    }
    inputs = [Path(namespace.file)] if getattr(namespace, "file", None) else []
    sequence = getattr(namespace, "sequence", None)
    if sequence is not None:
        values["sequence"] = parse_sequence(sequence)
    return RunConfig(command=namespace.command, inputs=inputs, **values)


def create_application() -> argparse.ArgumentParser:
    """
    Creates the command-line parser with every subcommand registered.

    Returns:
        argparse.ArgumentParser: The configured parser; each subcommand sets
        a ``handler`` default taking a `RunConfig`.
    """
    parser = argparse.ArgumentParser(
        prog=settings.APP_TITLE, description=settings.APP_DESCRIPTION
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {settings.APP_VERSION}"
    )
    add_commands(parser)
    return parser
