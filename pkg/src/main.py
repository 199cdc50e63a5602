import sys
from collections.abc import Sequence

from src.application import build_run_config, create_application
from src.cli.exceptions import ExitCode, exit_code_for
from src.logger import cli_logger


def run(argv: Sequence[str] | None = None) -> int:
    parser = create_application()
    namespace = parser.parse_args(argv)
    try:
        config = build_run_config(namespace)
        namespace.handler(config)
    except Exception as e:
        code = exit_code_for(e)
        cli_logger.warning(f"{namespace.command} exited with {code.name}: {e}")
        print(f"error: {e}", file=sys.stderr)
        return int(code)
    return int(ExitCode.SUCCESS)


def main(argv: Sequence[str] | None = None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
