"""
Constructive minimal-length maximal green sequences for type A quivers.

Every procedure returns a :class:`MutationSequence` in application order
(first element mutated first). Ties in ordering are broken by ascending
vertex label.
"""

from collections.abc import Collection, Iterable, Sequence

import src.services.exceptions as service_exceptions
from src.logger import procedures_logger
from src.models.quiver import Quiver, Seed
from src.schemas.decomposition import CycleConfig
from src.schemas.sequence import MutationSequence
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
)

SERVICE_NAME = "TypeAProcedures"


def _sequence(steps: Iterable[int]) -> MutationSequence:
    return MutationSequence(steps=list(steps))


def fan_mgs(fan: Sequence[int], q: Quiver | None = None) -> MutationSequence:
    """
    Sweep a fan from its source to its sink; every step is a source mutation.

    :param fan: Vertices of the directed path, source first.
    :param q: When given, the path is checked against its arrows.
    :raises service_exceptions.StructureError: If ``fan`` is not a directed path.
    """
    if not fan or len(set(fan)) != len(fan):
        raise service_exceptions.StructureError(
            SERVICE_NAME, f"{list(fan)} is not a simple path"
        )
    if q is not None:
        for u, v in zip(fan, fan[1:]):
            if q.b(u, v) != 1:
                raise service_exceptions.StructureError(
                    SERVICE_NAME, f"no arrow {u}->{v}, {list(fan)} is not a fan"
                )
    return _sequence(fan)


def zigzag_mgs(
    sources: Collection[int], sinks: Collection[int], q: Quiver | None = None
) -> MutationSequence:
    """
    All sources, then all sinks, each in ascending order.

    :param q: When given, every vertex must be one of the listed sources or
        sinks and every arrow must run from a source to a sink.
    :raises service_exceptions.StructureError: If the split is not a zigzag.
    """
    if set(sources) & set(sinks):
        raise service_exceptions.StructureError(
            SERVICE_NAME, "a vertex cannot be both a source and a sink of a zigzag"
        )
    if q is not None:
        stray = set(q.vertices) - set(sources) - set(sinks)
        if stray:
            raise service_exceptions.StructureError(
                SERVICE_NAME, f"vertices {sorted(stray)} are neither sources nor sinks"
            )
        for u, v in q.arrows:
            if u not in sources or v not in sinks:
                raise service_exceptions.StructureError(
                    SERVICE_NAME, f"arrow {u}->{v} does not run from a source to a sink"
                )
    return _sequence([*sorted(sources), *sorted(sinks)])


def _acyclic_steps(q: Quiver, active: Collection[int]) -> list[int]:
    """Sources, then fan interiors source to sink, then sinks, on the full subquiver ``active``."""
    active = set(active)
    arrows = {(u, v) for u, v in q.arrows if u in active and v in active}
    has_in = {v for _, v in arrows}
    has_out = {u for u, _ in arrows}

    sources = sorted(v for v in active if v not in has_in)
    sinks = sorted(v for v in active if v in has_in and v not in has_out)
    interiors = [
        v
        for run in maximal_directed_runs(q, arrows)
        for v in run[1:-1]
    ]
    return [*sources, *interiors, *sinks]


def zigzag_fan_mgs(q: Quiver) -> MutationSequence:
    """
    Source sequence, fan sequence, sink sequence for an acyclic type A quiver.
    The result is an admissible sequence of sources, hence an MGS of length n.

    :raises service_exceptions.StructureError: If ``q`` has a 3-cycle or is
        not of type A.
    """
    require_type_a(q)
    if three_cycles(q):
        raise service_exceptions.StructureError(
            SERVICE_NAME, "zigzag-fan procedure needs an acyclic quiver"
        )
    decomposition = decompose(q)
    steps = [
        *decomposition.sources,
        *(v for interior in decomposition.fan_interiors for v in interior),
        *decomposition.sinks,
    ]
    return _sequence(steps)


def cycle_config_mgs(cfg: CycleConfig) -> MutationSequence:
    """
    Leaders of regions ``1..m'``, four steps around the innermost 3-cycle,
    then follower and leader of every 3-cycle for regions ``m'..1``.

    The innermost cycle starts at its smallest vertex and follows the arrows.
    Every leader is mutated twice and every other vertex once.
    """
    if not cfg.has_regions:
        cfg = region_decomposition(cfg)

    steps: list[int] = []
    for region in cfg.regions:
        steps.extend(region.leaders)

    a, b, c = cfg.innermost.triangle
    steps.extend([a, b, c, a])

    for region in reversed(cfg.regions):
        for cycle in region.cycles:
            steps.extend([cycle.follower, cycle.leader])

    procedures_logger.info(
        f"3-cycle configuration on {cfg.n} vertices: sequence of length {len(steps)}"
    )
    return _sequence(steps)


def _plain_state(state: Quiver | Seed) -> Quiver:
    return state.quiver if isinstance(state, Seed) else state


def isolating_fans(
    state: Quiver | Seed, cfg: CycleConfig, active: Collection[int] | None = None
) -> list[list[int]]:
    """
    For every non-isolating vertex ``v`` of ``cfg`` (ascending), the maximal
    directed path of non-cycle arrows ending at ``v``, source first.

    :raises service_exceptions.PreconditionError: If ``v`` lies in another
        configuration (connecting arrow) or its path reaches one (connecting fan).
    """
    q = _plain_state(state)
    active = set(q.vertices if active is None else active)
    members = set(cfg.vertices)
    in_cycles = {v for t in three_cycles(q, active) for v in t}

    non_isolating = sorted(
        {
            v
            for c in members
            for v in q.predecessors(c)
            if v in active and v not in members
        }
    )

    fans = []
    for v in non_isolating:
        if v in in_cycles:
            raise service_exceptions.PreconditionError(
                SERVICE_NAME, f"vertex {v} joins two configurations by an arrow"
            )
        path = [v]
        current = v
        while True:
            before = [p for p in q.predecessors(current) if p in active]
            if not before:
                break
            if len(before) > 1:
                raise service_exceptions.StructureError(
                    SERVICE_NAME, f"vertex {current} has two incoming fan arrows"
                )
            current = before[0]
            if current in in_cycles or current in path:
                raise service_exceptions.PreconditionError(
                    SERVICE_NAME,
                    f"fan ending at {v} connects to another configuration at {current}",
                )
            path.insert(0, current)
        fans.append(path)
    return fans


def isolate(
    state: Quiver | Seed, cfg: CycleConfig, active: Collection[int] | None = None
) -> MutationSequence:
    """
    Fan sequences that turn every external neighbour of ``cfg`` into an
    isolating vertex. All steps are source mutations.

    :param state: The quiver (or the mutable part of a seed) being processed.
    :param active: Vertices not yet removed; defaults to all.
    """
    steps: list[int] = []
    for fan in isolating_fans(state, cfg, active):
        steps.extend(fan_mgs(fan).steps)
    return _sequence(steps)


def is_eligible(
    q: Quiver, cfg: CycleConfig, active: Collection[int] | None = None
) -> bool:
    try:
        isolating_fans(q, cfg, active)
    except service_exceptions.PreconditionError:
        return False
    return True


def _connected_minimal_steps(q: Quiver, vertices: Collection[int]) -> list[int]:
    active = set(vertices)
    pending = cycle_configs(q, active)
    steps: list[int] = []

    while pending:
        for cfg in pending:
            try:
                fans = isolating_fans(q, cfg, active)
            except service_exceptions.PreconditionError as e:
                procedures_logger.info(f"Skipping configuration {cfg.vertices}: {e}")
                continue
            break
        else:
            procedures_logger.error("No configuration can be isolated")
            raise service_exceptions.StructureError(
                SERVICE_NAME, "no configuration can be isolated"
            )

        for fan in fans:
            steps.extend(fan)
            active.difference_update(fan)
        steps.extend(cycle_config_mgs(cfg).steps)
        active.difference_update(cfg.vertices)
        pending.remove(cfg)

    steps.extend(_acyclic_steps(q, active))
    return steps


def minimal_mgs(q: Quiver) -> MutationSequence:
    """
    A maximal green sequence of length ``n + t``.

    Configurations are processed smallest-vertex first among those that can
    be isolated: the isolating fans, then the configuration's own sequence.
    The acyclic remainder finishes with sources, fan interiors and sinks.
    Disconnected quivers are handled one component at a time.

    :raises service_exceptions.StructureError: If ``q`` is not of type A.
    :raises service_exceptions.IntegrityError: If the result is not of length
        ``n + t``.
    """
    require_type_a(q)
    procedures_logger.info(f"Building minimal MGS for n={q.n}")

    steps: list[int] = []
    for component in connected_components(q):
        steps.extend(_connected_minimal_steps(q, component))

    expected = minimal_length(q)
    if len(steps) != expected:
        procedures_logger.error(
            f"Procedure produced {len(steps)} steps, expected {expected}"
        )
        raise service_exceptions.IntegrityError(
            SERVICE_NAME, f"sequence has {len(steps)} steps, expected n + t = {expected}"
        )
    return _sequence(steps)


def minimal_length(q: Quiver) -> int:
    """``n + t``, the number of vertices plus the number of oriented 3-cycles."""
    if not is_type_a(q):
        raise service_exceptions.StructureError(SERVICE_NAME, "quiver is not of type A")
    return q.n + count_three_cycles(q)
