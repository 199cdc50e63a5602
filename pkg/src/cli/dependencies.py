from pathlib import Path

from src.models.quiver import Quiver, Seed
from src.models.triangulation import Triangulation
from src.services.triangulations import quiver_from_triangulation
from src.utils.parser.text_parser import load_file


def load_quiver(path: Path) -> tuple[Quiver, Triangulation | None]:
    """
    Quiver of a quiver, seed or triangulation file; the triangulation is
    returned as well when the file holds one.
    """
    value = load_file(path)
    if isinstance(value, Triangulation):
        return quiver_from_triangulation(value), value
    if isinstance(value, Seed):
        return value.quiver, None
    return value, None


def load_any(path: Path) -> Quiver | Seed | Triangulation:
    return load_file(path)
