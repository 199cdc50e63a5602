import pytest

from src.models.quiver import Quiver
from src.services.decomposition import (
    connected_components,
    count_three_cycles,
    cycle_configs,
    decompose,
    is_type_a,
    maximal_directed_runs,
    region_decomposition,
    require_type_a,
    three_cycles,
    triangle_graph,
)
from src.services.exceptions import StructureError
from src.services.mutations import mutate


def test_three_cycles_are_normalized(triangle_tree_quiver: Quiver):
    assert three_cycles(triangle_tree_quiver) == [
        (1, 2, 3),
        (3, 4, 5),
        (4, 6, 7),
        (5, 8, 9),
        (8, 10, 11),
        (10, 12, 13),
    ]
    assert three_cycles(triangle_tree_quiver, [1, 2, 3, 4]) == [(1, 2, 3)]


@pytest.mark.parametrize(
    "fixture_name,expected",
    [
        ("a2", True),
        ("a3_linear", True),
        ("three_cycle", True),
        ("four_cycle", False),
        ("zigzag_fan_quiver", True),
        ("triangle_tree_quiver", True),
        ("mixed_quiver", True),
        ("chain_of_cycles", True),
    ],
)
def test_is_type_a(request: pytest.FixtureRequest, fixture_name: str, expected: bool):
    assert is_type_a(request.getfixturevalue(fixture_name)) is expected


@pytest.mark.parametrize(
    "n,arrows",
    [
        # double arrow
        (2, [(1, 2), (1, 2)]),
        # non-oriented triangle
        (3, [(1, 2), (2, 3), (1, 3)]),
        # three neighbours, no 3-cycle
        (4, [(1, 2), (1, 3), (1, 4)]),
        # five neighbours
        (6, [(1, 2), (1, 3), (1, 4), (1, 5), (1, 6)]),
        # two 3-cycles sharing an arrow
        (4, [(1, 2), (2, 3), (3, 1), (3, 4), (4, 2)]),
    ],
)
def test_is_not_type_a(n: int, arrows: list[tuple[int, int]]):
    q = Quiver.from_arrows(n, arrows)
    assert not is_type_a(q)
    with pytest.raises(StructureError):
        require_type_a(q)


def test_type_a_is_closed_under_mutation(mixed_quiver: Quiver):
    for k in mixed_quiver.vertices:
        assert is_type_a(mutate(mixed_quiver, k))


def test_connected_components():
    q = Quiver.from_arrows(5, [(4, 2), (3, 5)])
    assert connected_components(q) == [[1], [2, 4], [3, 5]]


def test_maximal_directed_runs(zigzag_fan_quiver: Quiver):
    runs = maximal_directed_runs(zigzag_fan_quiver, set(zigzag_fan_quiver.arrows))
    assert runs == [
        [1, 2],
        [3, 2],
        [3, 4],
        [8, 7, 6, 5, 4],
        [8, 9, 10, 11],
    ]


def test_decompose_acyclic(zigzag_fan_quiver: Quiver):
    decomposition = decompose(zigzag_fan_quiver)
    assert decomposition.sources == [1, 3, 8]
    assert decomposition.sinks == [2, 4, 11]
    assert decomposition.fan_interiors == [[7, 6, 5], [9, 10]]
    assert decomposition.cycle_configs == []
    assert decomposition.t == 0
    assert decomposition.labels == {
        1: "C_1",
        3: "C_2",
        8: "C_3",
        2: "K_1",
        4: "K_2",
        11: "K_3",
        7: "F_1_1",
        6: "F_1_2",
        5: "F_1_3",
        9: "F_2_1",
        10: "F_2_2",
    }


def test_decompose_mixed(mixed_quiver: Quiver):
    decomposition = decompose(mixed_quiver)
    assert [cfg.vertices for cfg in decomposition.cycle_configs] == [
        [4, 5, 6],
        [13, 14, 15, 16, 17, 18, 19, 24, 25],
    ]
    assert decomposition.t == count_three_cycles(mixed_quiver) == 5
    assert "shared" in decomposition.roles[15]
    assert decomposition.roles[19] == ["cycle"]
    assert decomposition.roles[5] == ["cycle", "fan"]


def test_decompose_rejects_non_type_a(four_cycle: Quiver):
    with pytest.raises(StructureError):
        decompose(four_cycle)


def test_cycle_config_tree(triangle_tree_quiver: Quiver):
    (cfg,) = cycle_configs(triangle_tree_quiver)
    assert cfg.t == 6
    assert cfg.n == 13
    assert cfg.shared_vertices == [3, 4, 5, 8, 10]
    graph = triangle_graph(cfg)
    assert graph.number_of_edges() == 5
    assert graph.edges[0, 1]["shared"] == 3


def test_region_decomposition(triangle_tree_quiver: Quiver):
    (cfg,) = cycle_configs(triangle_tree_quiver)
    cfg = region_decomposition(cfg)

    assert cfg.innermost.triangle == (1, 2, 3)
    assert cfg.innermost.s == 3
    assert (cfg.innermost.v_m1, cfg.innermost.v_m2) == (2, 1)
    assert [region.leaders for region in cfg.regions] == [[7, 13], [11], [9], [5]]
    assert [
        [cycle.follower for cycle in region.cycles] for region in cfg.regions
    ] == [[6, 12], [10], [8], [4]]

    labels = cfg.labels()
    assert labels[7] == "L_1_1"
    assert labels[12] == "F_1_2"
    assert labels[5] == "L_4_1"
    assert labels[3] == "S_4_1"


def test_region_decomposition_of_single_cycle(three_cycle: Quiver):
    (cfg,) = cycle_configs(three_cycle)
    cfg = region_decomposition(cfg)
    assert cfg.regions == []
    assert cfg.innermost.s is None
    assert (cfg.innermost.v_m1, cfg.innermost.v_m2) == (2, 1)
