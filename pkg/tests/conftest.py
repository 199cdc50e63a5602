import pytest

from src.models.quiver import Quiver
from src.models.triangulation import Triangulation
from src.services.search import _build_search_graph


@pytest.fixture(autouse=True)
def clear_search_cache():
    """Drops memoized search graphs so every test starts from a cold cache."""
    yield
    _build_search_graph.cache_clear()


@pytest.fixture
def a2() -> Quiver:
    return Quiver.from_arrows(2, [(1, 2)])


@pytest.fixture
def a3_linear() -> Quiver:
    return Quiver.from_arrows(3, [(1, 2), (2, 3)])


@pytest.fixture
def three_cycle() -> Quiver:
    return Quiver.from_arrows(3, [(1, 2), (2, 3), (3, 1)])


@pytest.fixture
def four_cycle() -> Quiver:
    return Quiver.from_arrows(4, [(1, 2), (2, 3), (3, 4), (4, 1)])


@pytest.fixture
def zigzag_fan_quiver() -> Quiver:
    """Acyclic quiver on 11 vertices: three sources, three sinks and two fans."""
    return Quiver.from_arrows(
        11,
        [
            (1, 2),
            (3, 2),
            (3, 4),
            (5, 4),
            (6, 5),
            (7, 6),
            (8, 7),
            (8, 9),
            (9, 10),
            (10, 11),
        ],
    )


@pytest.fixture
def triangle_tree_quiver() -> Quiver:
    """A single configuration of six 3-cycles on 13 vertices."""
    return Quiver.from_arrows(
        13,
        [
            (1, 2), (2, 3), (3, 1),
            (3, 4), (4, 5), (5, 3),
            (4, 6), (6, 7), (7, 4),
            (5, 8), (8, 9), (9, 5),
            (8, 10), (10, 11), (11, 8),
            (10, 12), (12, 13), (13, 10),
        ],
    )  # fmt: skip


@pytest.fixture
def mixed_quiver() -> Quiver:
    """25 vertices, two configurations joined through fans, five 3-cycles."""
    return Quiver.from_arrows(
        25,
        [
            (1, 2), (2, 3), (3, 5),
            (4, 5), (5, 6), (6, 4),
            (8, 4), (8, 7),
            (6, 9), (9, 10), (10, 11), (11, 12), (12, 13),
            (13, 14), (14, 15), (15, 13),
            (14, 22), (22, 23),
            (15, 16), (16, 17), (17, 15),
            (16, 25), (25, 24), (24, 16),
            (17, 18), (18, 19), (19, 17),
            (21, 20), (18, 20),
        ],
    )  # fmt: skip


@pytest.fixture
def chain_of_cycles() -> Quiver:
    """Four 3-cycles glued in a chain, each sharing one vertex with the next."""
    return Quiver.from_arrows(
        9,
        [
            (1, 2), (2, 3), (3, 1),
            (3, 4), (4, 5), (5, 3),
            (5, 6), (6, 7), (7, 5),
            (7, 8), (8, 9), (9, 7),
        ],
    )  # fmt: skip


@pytest.fixture
def chain_of_cycles_turned() -> Quiver:
    """The same four 3-cycles with the second one attached the other way round."""
    return Quiver.from_arrows(
        9,
        [
            (1, 2), (2, 3), (3, 1),
            (5, 4), (4, 3), (3, 5),
            (5, 6), (6, 7), (7, 5),
            (7, 8), (8, 9), (9, 7),
        ],
    )  # fmt: skip


@pytest.fixture
def hexagon_triangle() -> Triangulation:
    """Hexagon with one interior triangle."""
    return Triangulation(6, ((0, 2), (0, 4), (2, 4)))


@pytest.fixture
def pentagon_fan() -> Triangulation:
    return Triangulation(5, ((0, 2), (0, 3)))
