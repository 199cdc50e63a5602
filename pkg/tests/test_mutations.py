import numpy as np
import pytest

from src.models.quiver import Quiver, Seed, VertexColor
from src.services.exceptions import MutationArgumentError, SignCoherenceError
from src.services.mutations import (
    canonical_key,
    color,
    colors,
    coframe,
    disjoint_union,
    frame,
    full_subquiver,
    green_vertices,
    is_admissible_source_sequence,
    is_all_green,
    is_all_red,
    is_isomorphic_fixing_frozen,
    is_sink,
    is_source,
    mutate,
    mutate_seed,
    mutate_sequence,
)


def test_quiver_rejects_non_skew_symmetric_matrix():
    with pytest.raises(ValueError):
        Quiver([[0, 1], [1, 0]])


def test_seed_rejects_arrows_between_frozen_vertices():
    matrix = np.zeros((4, 4), dtype=np.int64)
    matrix[2, 3], matrix[3, 2] = 1, -1
    with pytest.raises(ValueError):
        Seed(matrix)


def test_mutation_reverses_arrows_at_vertex(three_cycle: Quiver):
    mutated = mutate(three_cycle, 1)
    assert mutated.b(2, 1) == 1
    assert mutated.b(1, 3) == 1
    # 3 -> 1 -> 2 composes to 3 -> 2, cancelling 2 -> 3
    assert mutated.b(2, 3) == 0


def test_mutation_is_involution(triangle_tree_quiver: Quiver):
    for k in triangle_tree_quiver.vertices:
        assert mutate(mutate(triangle_tree_quiver, k), k) == triangle_tree_quiver


def test_mutation_leaves_argument_unchanged(a3_linear: Quiver):
    before = a3_linear.matrix.copy()
    mutate(a3_linear, 2)
    assert np.array_equal(a3_linear.matrix, before)


def test_mutation_creates_double_arrow():
    q = Quiver.from_arrows(3, [(1, 2), (2, 3), (1, 3)])
    assert mutate(q, 2).b(1, 3) == 2
    assert not mutate(q, 2).is_simply_laced()


@pytest.mark.parametrize("k", [0, 4, -1])
def test_mutation_rejects_vertex_out_of_range(a3_linear: Quiver, k: int):
    with pytest.raises(MutationArgumentError):
        mutate(a3_linear, k)
    with pytest.raises(MutationArgumentError):
        mutate_seed(frame(a3_linear), k)


def test_framed_seed_is_all_green(triangle_tree_quiver: Quiver):
    seed = frame(triangle_tree_quiver)
    assert np.array_equal(seed.c, -np.eye(13, dtype=np.int64))
    assert is_all_green(seed)
    assert green_vertices(seed) == list(range(1, 14))


def test_coframed_seed_is_all_red(a3_linear: Quiver):
    seed = coframe(a3_linear)
    assert is_all_red(seed)
    assert green_vertices(seed) == []


def test_mutation_flips_color(a2: Quiver):
    seed = mutate_seed(frame(a2), 1)
    assert color(seed, 1) == VertexColor.RED
    assert color(seed, 2) == VertexColor.GREEN
    assert seed.frozen_arrows == [("1'", "1"), ("2", "2'")]


def test_sign_coherence_violation_raises(a2: Quiver):
    seed = Seed.from_blocks(a2, [[-1, 0], [1, -1]])
    with pytest.raises(SignCoherenceError):
        color(seed, 1)
    with pytest.raises(SignCoherenceError):
        colors(seed)


def test_three_cycle_sequence_ends_all_red(three_cycle: Quiver):
    seed = mutate_sequence(frame(three_cycle), [1, 2, 3, 1])
    assert is_all_red(seed)
    assert seed.frozen_arrows == [("1'", "3"), ("2'", "2"), ("3'", "1")]


def test_all_red_seed_is_isomorphic_to_coframed(three_cycle: Quiver):
    seed = mutate_sequence(frame(three_cycle), [1, 2, 3, 1])
    assert is_isomorphic_fixing_frozen(seed, coframe(three_cycle))
    assert is_isomorphic_fixing_frozen(frame(three_cycle), frame(three_cycle))
    assert not is_isomorphic_fixing_frozen(seed, frame(three_cycle))


def test_canonical_key_distinguishes_labelled_seeds(a3_linear: Quiver):
    first = mutate_seed(frame(a3_linear), 1)
    second = mutate_seed(frame(a3_linear), 3)
    assert canonical_key(first) != canonical_key(second)
    assert canonical_key(first) == canonical_key(mutate_seed(frame(a3_linear), 1))


def test_canonical_key_of_large_entries_uses_wide_encoding():
    q = Quiver([[0, 200], [-200, 0]])
    assert canonical_key(frame(q))[:1] == b"\x08"
    assert canonical_key(frame(Quiver.from_arrows(2, [(1, 2)])))[:1] == b"\x01"


def test_sources_and_sinks(zigzag_fan_quiver: Quiver):
    assert [v for v in zigzag_fan_quiver.vertices if is_source(zigzag_fan_quiver, v)] == [
        1,
        3,
        8,
    ]
    assert [v for v in zigzag_fan_quiver.vertices if is_sink(zigzag_fan_quiver, v)] == [
        2,
        4,
        11,
    ]


def test_admissible_source_sequence(zigzag_fan_quiver: Quiver):
    assert is_admissible_source_sequence(
        zigzag_fan_quiver, [1, 3, 8, 7, 6, 5, 9, 10, 2, 4, 11]
    )
    assert not is_admissible_source_sequence(
        zigzag_fan_quiver, [2, 1, 3, 8, 7, 6, 5, 9, 10, 4, 11]
    )
    assert not is_admissible_source_sequence(zigzag_fan_quiver, [1, 3, 8])


def test_full_subquiver_relabels_in_given_order(triangle_tree_quiver: Quiver):
    sub = full_subquiver(triangle_tree_quiver, [3, 4, 5])
    assert sub == Quiver.from_arrows(3, [(1, 2), (2, 3), (3, 1)])
    assert full_subquiver(triangle_tree_quiver, [5, 4, 3]) == Quiver.from_arrows(
        3, [(3, 2), (2, 1), (1, 3)]
    )


def test_disjoint_union_with_bridge(a2: Quiver, three_cycle: Quiver):
    joined = disjoint_union(a2, three_cycle, [(2, 3)])
    assert joined.n == 5
    assert joined.arrows == [(1, 2), (2, 3), (3, 4), (4, 5), (5, 3)]
