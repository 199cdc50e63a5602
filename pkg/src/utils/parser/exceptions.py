class ParseError(Exception):
    """Raised when an input file or argument does not follow its text format."""

    def __init__(self, source: str, line_no: int | None, reason: str):
        self.source = source
        self.line_no = line_no
        self.reason = reason
        where = source if line_no is None else f"{source}:{line_no}"
        super().__init__(f"Failed to parse {where}. Reason: {reason}")
