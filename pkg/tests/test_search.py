import numpy as np
import pytest

from src.models.quiver import Quiver
from src.services.exceptions import SearchIntegrityError, SearchLimitError
from src.services.green_sequences import is_mgs
from src.services.search import (
    _build_search_graph,
    build_search_graph,
    count_mgs,
    enumerate_mgs,
    longest_mgs,
    longest_mgs_length,
    mgs_length_spectrum,
    random_mgs,
    search_report,
    shortest_mgs,
)


def test_a2_search(a2: Quiver):
    assert shortest_mgs(a2).steps == [1, 2]
    assert longest_mgs(a2).steps == [2, 1, 2]
    assert mgs_length_spectrum(a2) == {2, 3}
    assert count_mgs(a2) == 2


def test_a2_enumeration_is_lexicographic(a2: Quiver):
    assert [sequence.steps for sequence in enumerate_mgs(a2)] == [[1, 2], [2, 1, 2]]
    assert len(list(enumerate_mgs(a2, limit=1))) == 1


def test_a3_linear_spectrum(a3_linear: Quiver):
    assert mgs_length_spectrum(a3_linear) == {3, 4, 5, 6}
    assert longest_mgs_length(a3_linear) == 6


def test_three_cycle_shortest(three_cycle: Quiver):
    sequence = shortest_mgs(three_cycle)
    assert sequence.length == 4
    assert sequence.is_green
    assert is_mgs(three_cycle, sequence)


def test_count_matches_enumeration(three_cycle: Quiver):
    sequences = list(enumerate_mgs(three_cycle))
    assert len(sequences) == count_mgs(three_cycle)
    assert {sequence.length for sequence in sequences} == mgs_length_spectrum(
        three_cycle
    )
    assert all(is_mgs(three_cycle, sequence) for sequence in sequences)


def test_empty_quiver_has_the_empty_sequence():
    empty = Quiver.empty(0)
    assert shortest_mgs(empty).steps == []
    assert count_mgs(empty) == 1


def test_search_is_deterministic(three_cycle: Quiver):
    first = shortest_mgs(three_cycle)
    _build_search_graph.cache_clear()
    second = shortest_mgs(three_cycle)
    assert first.steps == second.steps
    assert list(enumerate_mgs(three_cycle)) == list(enumerate_mgs(three_cycle))


def test_search_limit(a3_linear: Quiver):
    with pytest.raises(SearchLimitError):
        build_search_graph(a3_linear, max_states=3)


def test_search_graph_counts(a2: Quiver):
    graph = build_search_graph(a2)
    assert graph.node_count == len(graph.parents)
    assert graph.edge_count >= graph.node_count - 1
    assert graph.path_to(graph.source) == []


def test_random_mgs_is_maximal(a3_linear: Quiver):
    rng = np.random.default_rng(7)
    for _ in range(10):
        assert is_mgs(a3_linear, random_mgs(a3_linear, rng))


def test_search_report(a2: Quiver):
    report = search_report(a2, t=0)
    assert report.length_min == 2
    assert report.length_max == 3
    assert report.spectrum == [2, 3]
    assert report.count == 2
    assert report.witness_sequence == [1, 2]
    assert report.model_dump(by_alias=True)["schema"] == 1


def test_search_report_only_count(a2: Quiver):
    report = search_report(a2, shortest=False, longest=False, spectrum=False)
    assert report.count == 2
    assert report.length_min is None
    assert report.spectrum is None


@pytest.mark.slow
@pytest.mark.parametrize(
    "fixture_name,longest",
    [("chain_of_cycles", 35), ("chain_of_cycles_turned", 37)],
)
def test_longest_length_depends_on_arrangement(
    request: pytest.FixtureRequest, fixture_name: str, longest: int
):
    q = request.getfixturevalue(fixture_name)
    assert longest_mgs_length(q) == longest
    assert longest <= q.n * (q.n + 1) // 2
    assert shortest_mgs(q).length == 13


def test_endpoints_are_checked_once_per_all_red_state(three_cycle: Quiver):
    graph = build_search_graph(three_cycle)
    shortest_mgs(three_cycle, graph)
    longest_mgs(three_cycle, graph)
    sequences = list(enumerate_mgs(three_cycle, graph=graph))

    assert sequences
    assert graph.checked_sinks == set(graph.sinks)


@pytest.mark.parametrize(
    "search",
    [
        shortest_mgs,
        longest_mgs,
        lambda q: next(enumerate_mgs(q)),
    ],
)
def test_endpoint_not_isomorphic_to_coframe_is_rejected(
    a3_linear: Quiver, monkeypatch: pytest.MonkeyPatch, search
):
    monkeypatch.setattr(
        "src.services.search.is_isomorphic_fixing_frozen", lambda a, b: False
    )
    with pytest.raises(SearchIntegrityError):
        search(a3_linear)
