import enum

from pydantic import ValidationError

import src.services.exceptions as service_exceptions
from src.utils.parser.exceptions import ParseError


class ExitCode(enum.IntEnum):
    SUCCESS = 0
    VERIFICATION_FAILED = 1
    STRUCTURE_ERROR = 2
    PARSE_ERROR = 64


class VerificationFailed(Exception):
    """Raised by a command whose check ran to completion and failed."""

    def __init__(self, command: str, reason: str):
        super().__init__(f"{command} verification failed. Reason: {reason}")


def exit_code_for(error: Exception) -> ExitCode:
    """Exit status for an exception escaping a command; unknown errors propagate."""
    if isinstance(error, (ParseError, ValidationError)):
        return ExitCode.PARSE_ERROR
    if isinstance(
        error,
        (
            service_exceptions.StructureError,
            service_exceptions.PreconditionError,
            service_exceptions.MutationArgumentError,
            service_exceptions.ResourceLimitError,
        ),
    ):
        return ExitCode.STRUCTURE_ERROR
    if isinstance(
        error,
        (
            VerificationFailed,
            service_exceptions.IntegrityError,
            service_exceptions.NoMaximalGreenSequenceError,
        ),
    ):
        return ExitCode.VERIFICATION_FAILED
    raise error
