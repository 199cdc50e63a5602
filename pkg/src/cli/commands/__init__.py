from . import census, dot, generate, search, verify  # noqa: F401

COMMANDS = (generate, verify, search, census, dot)
