import itertools

import numpy as np
import pytest

from src.models.quiver import Quiver
from src.services.decomposition import (
    count_three_cycles,
    cycle_configs,
    region_decomposition,
)
from src.services.green_sequences import is_mgs
from src.services.mutations import (
    coframe,
    colors,
    frame,
    is_isomorphic_fixing_frozen,
    is_source_mutation,
    mutate,
    mutate_seed,
    mutate_sequence,
)
from src.services.procedures import is_eligible, isolate
from src.services.search import enumerate_mgs, mgs_length_spectrum
from src.services.triangulations import (
    enumerate_triangulations,
    quiver_from_triangulation,
)


def _small_quivers(n: int):
    pairs = list(itertools.combinations(range(n), 2))
    for entries in itertools.product((-1, 0, 1), repeat=len(pairs)):
        matrix = np.zeros((n, n), dtype=np.int64)
        for (i, j), value in zip(pairs, entries):
            matrix[i, j], matrix[j, i] = value, -value
        yield Quiver(matrix)


def _triangulation_quivers(m: int):
    for t in enumerate_triangulations(m):
        yield quiver_from_triangulation(t)


@pytest.mark.parametrize("n", [2, 3, 4, pytest.param(5, marks=pytest.mark.slow)])
def test_quiver_mutation_is_an_involution(n: int):
    for q in _small_quivers(n):
        for k in q.vertices:
            assert mutate(mutate(q, k), k) == q


@pytest.mark.parametrize("m", [4, 5, 6, 7])
def test_seed_mutation_is_an_involution(m: int):
    for q in _triangulation_quivers(m):
        start = frame(q)
        for k in q.vertices:
            assert mutate_seed(mutate_seed(start, k), k) == start


@pytest.mark.exhaustive
@pytest.mark.parametrize("m", [4, 5, 6, 7])
def test_length_spectrum_is_an_interval_starting_at_n_plus_t(m: int):
    for q in _triangulation_quivers(m):
        spectrum = mgs_length_spectrum(q)
        shortest, longest = min(spectrum), max(spectrum)
        assert spectrum == set(range(shortest, longest + 1))
        assert shortest == q.n + count_three_cycles(q)
        assert shortest >= q.n


@pytest.mark.exhaustive
@pytest.mark.parametrize("m", [4, 5, 6, 7])
def test_every_mgs_ends_at_the_coframe(m: int):
    for q in _triangulation_quivers(m):
        target = coframe(q)
        for sequence in enumerate_mgs(q):
            assert sequence.length >= q.n
            seed = frame(q)
            for k in sequence.steps:
                colors(seed)
                seed = mutate_seed(seed, k)
            assert is_isomorphic_fixing_frozen(seed, target)
            assert is_isomorphic_fixing_frozen(
                mutate_sequence(frame(q), sequence.steps), target
            )


def test_commuting_cycles_of_one_region(triangle_tree_quiver: Quiver):
    (cfg,) = cycle_configs(triangle_tree_quiver)
    cfg = region_decomposition(cfg)
    a, b, c = cfg.innermost.triangle

    leader_orders = [list(itertools.permutations(r.leaders)) for r in cfg.regions]
    cycle_orders = [list(itertools.permutations(r.cycles)) for r in cfg.regions]
    checked = 0
    for leaders in itertools.product(*leader_orders):
        for cycles in itertools.product(*cycle_orders):
            steps = [v for region in leaders for v in region]
            steps.extend([a, b, c, a])
            for region in reversed(cycles):
                for cycle in region:
                    steps.extend([cycle.follower, cycle.leader])
            assert is_mgs(triangle_tree_quiver, steps)
            checked += 1
    assert checked == 4


def _assert_isolation_uses_sources(q: Quiver) -> int:
    isolated = 0
    for cfg in cycle_configs(q):
        if not is_eligible(q, cfg):
            continue
        seed = frame(q)
        for k in isolate(q, cfg).steps:
            assert is_source_mutation(seed, k)
            seed = mutate_seed(seed, k)
        isolated += 1
    return isolated


def test_isolation_mutates_sources(mixed_quiver: Quiver):
    assert _assert_isolation_uses_sources(mixed_quiver) == 1


@pytest.mark.parametrize("m", [5, 6, 7, 8])
def test_isolation_mutates_sources_in_triangulation_quivers(m: int):
    for q in _triangulation_quivers(m):
        _assert_isolation_uses_sources(q)
