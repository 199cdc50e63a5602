"""Validation of green sequences and of the single-arrow bridge behaviour."""

from collections.abc import Sequence

import numpy as np

from src.logger import search_logger
from src.models.quiver import Quiver, Seed, VertexColor
from src.schemas.sequence import MutationSequence, StepReport, ValidityReport
from src.services.mutations import (
    color,
    colors,
    disjoint_union,
    frame,
    full_subquiver,
    mutate_seed,
)


def _steps(seq: MutationSequence | Sequence[int]) -> list[int]:
    if isinstance(seq, MutationSequence):
        return list(seq.steps)
    return list(seq)


def apply_sequence(
    q: Quiver,
    seq: MutationSequence | Sequence[int],
    start: Seed | None = None,
) -> tuple[Seed, ValidityReport]:
    """
    Apply ``seq`` to the framed seed of ``q`` (or to ``start``).

    Every step is recorded with the color of its vertex before mutation. The
    first step at a red or out-of-range vertex is flagged; later steps are
    still applied when they are in range.

    :return: The final seed and the per-step report.
    """
    seed = frame(q) if start is None else start
    report = ValidityReport()
    for index, k in enumerate(_steps(seq), start=1):
        if not 1 <= k <= seed.n:
            report.steps.append(
                StepReport(
                    index=index, vertex=k, green=False, reason="vertex out of range"
                )
            )
            if report.first_invalid_step is None:
                report.first_invalid_step = index
            continue
        before = color(seed, k)
        green = before == VertexColor.GREEN
        report.steps.append(
            StepReport(
                index=index,
                vertex=k,
                color=before,
                green=green,
                reason=None if green else "vertex is red",
            )
        )
        if not green and report.first_invalid_step is None:
            report.first_invalid_step = index
        seed = mutate_seed(seed, k)
    report.final_colors = colors(seed)
    return seed, report


def traced(q: Quiver, seq: MutationSequence | Sequence[int]) -> MutationSequence:
    """The same steps with the color trace filled in."""
    _, report = apply_sequence(q, seq)
    return MutationSequence(
        steps=[step.vertex for step in report.steps],
        trace=[step.color or VertexColor.RED for step in report.steps],
    )


def is_green_sequence(q: Quiver, seq: MutationSequence | Sequence[int]) -> bool:
    _, report = apply_sequence(q, seq)
    return report.valid


def is_mgs(q: Quiver, seq: MutationSequence | Sequence[int]) -> bool:
    """True iff every step is at a green vertex and the endpoint is all red."""
    _, report = apply_sequence(q, seq)
    if not report.is_maximal:
        search_logger.info(
            "Sequence is not a maximal green sequence",
            extra={
                "first_invalid_step": report.first_invalid_step,
                "all_red": report.all_red,
            },
        )
    return report.is_maximal


def check_bridged_components(
    c: Quiver,
    components: Sequence[Quiver],
    bridges: Sequence[tuple[int, int]],
    mgs_c: MutationSequence | Sequence[int],
) -> bool:
    """
    Attach each component ``components[k]`` to ``c`` by one arrow
    ``i_k -> j_k`` (``i_k`` in ``c``, ``j_k`` in the component, both 1-based in
    their own quiver), frame the result and apply ``mgs_c``.

    Afterwards every vertex of ``c`` must be red, every component must meet
    ``c`` in exactly one arrow ``j_k -> x`` where ``x`` is the unique vertex
    of ``c`` with an arrow ``i_k' -> x``, no two components may be joined,
    and every component must still be the same full subquiver.
    """
    if len(components) != len(bridges):
        raise ValueError("one bridge per component is required")
    if len({i for i, _ in bridges}) != len(bridges):
        search_logger.warning("Bridges must start at distinct vertices of c")
        return False

    composite = c
    offsets = []
    arrows = []
    for component, (i, j) in zip(components, bridges):
        offsets.append(composite.n)
        arrows.append((i, composite.n + j))
        composite = disjoint_union(composite, component)
    composite = disjoint_union(composite, Quiver.empty(0), arrows)

    seed, report = apply_sequence(composite, mgs_c)
    if not report.valid:
        search_logger.info("mgs_c is not green on the bridged quiver")
        return False
    if any(report.final_colors[v] != VertexColor.RED for v in c.vertices):
        return False

    b = seed.matrix
    n_c = c.n
    component_blocks = []
    for component, offset, (i, j) in zip(components, offsets, bridges):
        block = list(range(offset + 1, offset + component.n + 1))
        component_blocks.append(block)
        if full_subquiver(seed.quiver, block) != component:
            return False

        # Arrows between the component and c: only j -> x
        links = b[offset : offset + component.n, :n_c]
        frozen_row = seed.c[i - 1]
        targets = np.nonzero(frozen_row[:n_c] > 0)[0]
        if np.any(frozen_row[n_c:]) or len(targets) != 1:
            return False
        if frozen_row[targets[0]] != 1:
            return False
        x = int(targets[0])
        expected = np.zeros_like(links)
        expected[j - 1, x] = 1
        if not np.array_equal(links, expected):
            return False

    for first, block in enumerate(component_blocks):
        for other in component_blocks[first + 1 :]:
            if np.any(b[np.ix_([v - 1 for v in block], [v - 1 for v in other])]):
                return False
    return True


def check_single_arrow_bridge(
    c: Quiver,
    d: Quiver,
    bridge: tuple[int, int],
    mgs_c: MutationSequence | Sequence[int],
) -> bool:
    """Bridge check for one component ``d`` joined by the arrow ``bridge = (i, j)``."""
    return check_bridged_components(c, [d], [bridge], mgs_c)
