class ServiceError(Exception):
    """Base exception class for service errors."""

    pass


class MutationArgumentError(ServiceError):
    """Raised when a mutation is requested at a vertex that cannot be mutated."""

    def __init__(self, service_name: str, reason: str):
        super().__init__(f"{service_name} rejected mutation. Reason: {reason}")


class IntegrityError(ServiceError):
    """Raised when a state breaks an invariant that mutation should preserve."""

    def __init__(self, service_name: str, reason: str):
        super().__init__(f"{service_name} integrity check failed. Reason: {reason}")


class SignCoherenceError(IntegrityError):
    """Raised when a c-matrix column has entries of both signs."""


class SearchIntegrityError(IntegrityError):
    """Raised when the green-mutation graph has a cycle or a bad all-red endpoint."""


class NoMaximalGreenSequenceError(ServiceError):
    """Raised when the green-mutation graph has no all-red state."""

    def __init__(self, service_name: str, reason: str):
        super().__init__(
            f"{service_name} found no maximal green sequence. Reason: {reason}"
        )


class ResourceLimitError(ServiceError):
    """Raised when a computation would exceed a configured limit."""

    def __init__(self, service_name: str, reason: str):
        super().__init__(f"{service_name} exceeded a resource limit. Reason: {reason}")


class SearchLimitError(ResourceLimitError):
    pass


class EnumerationLimitError(ResourceLimitError):
    pass


class StructureError(ServiceError):
    """Raised when the input does not have the shape an operation requires."""

    def __init__(self, service_name: str, reason: str):
        super().__init__(f"{service_name} rejected input structure. Reason: {reason}")


class PreconditionError(ServiceError):
    """Raised when an operation's precondition does not hold for its input."""

    def __init__(self, service_name: str, reason: str):
        super().__init__(f"{service_name} precondition violated. Reason: {reason}")
