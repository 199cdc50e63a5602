"""Exhaustive census over the triangulations of a range of polygons."""

from collections.abc import Iterable
from concurrent.futures import ProcessPoolExecutor

import numpy as np
import pandas as pd

from src.config import get_settings
from src.logger import triangulation_logger
from src.models.triangulation import Triangulation
from src.schemas.report import CensusRow
from src.services.decomposition import count_three_cycles
from src.services.green_sequences import is_mgs
from src.services.procedures import minimal_mgs
from src.services.search import (
    build_search_graph,
    count_mgs,
    enumerate_mgs,
    mgs_length_spectrum,
    random_mgs,
)
from src.services.triangulations import (
    double_flip_witness,
    enumerate_triangulations,
    mgs_endpoint_is_tau,
    quiver_from_triangulation,
)

settings = get_settings()


def census_row(
    triangulation_id: int, t: Triangulation, samples: int = 0, seed: int | None = None
) -> CensusRow:
    """
    Minimal procedure, exhaustive search and geometric checks for one triangulation.

    Repeated-flip witnesses are checked on every MGS up to
    ``CENSUS_WITNESS_MAX_POLYGON``; above it, on the procedure's sequence and
    ``samples`` random ones. The rotation check always covers the procedure's
    sequence and the random samples.
    """
    q = quiver_from_triangulation(t)
    cycles = count_three_cycles(q)
    minimal = minimal_mgs(q)
    graph = build_search_graph(q)
    spectrum = sorted(mgs_length_spectrum(q, graph))

    rng = np.random.default_rng(
        (settings.RANDOM_SEED if seed is None else seed, t.m, triangulation_id)
    )
    sampled = [random_mgs(q, rng, graph) for _ in range(samples)]

    tau_ok = all(mgs_endpoint_is_tau(t, seq) for seq in [minimal, *sampled])
    if t.m <= settings.CENSUS_WITNESS_MAX_POLYGON:
        witness_pool = enumerate_mgs(q, graph=graph)
    else:
        witness_pool = [minimal, *sampled]
    witnesses_ok = all(double_flip_witness(t, seq) for seq in witness_pool)

    return CensusRow(
        triangulation_id=triangulation_id,
        m=t.m,
        n=q.n,
        t=cycles,
        chords=list(t.chords),
        minimal_length=minimal.length,
        length_min=spectrum[0],
        length_max=spectrum[-1],
        spectrum=spectrum,
        count=count_mgs(q, graph),
        procedure_ok=is_mgs(q, minimal) and minimal.length == q.n + cycles,
        tau_endpoint_ok=tau_ok,
        witnesses_ok=witnesses_ok,
    )


def _row_task(args: tuple[int, Triangulation, int, int | None]) -> CensusRow:
    return census_row(*args)


def run_census(
    polygon_sizes: Iterable[int],
    jobs: int = 1,
    samples: int = 0,
    seed: int | None = None,
) -> list[CensusRow]:
    """
    One row per triangulation, in enumeration order for every ``m``.

    :param jobs: Worker processes; results keep input order for any value.
    """
    tasks = [
        (index, t, samples, seed)
        for m in polygon_sizes
        for index, t in enumerate(enumerate_triangulations(m), start=1)
    ]
    triangulation_logger.info(f"Census over {len(tasks)} triangulations, jobs={jobs}")
    if jobs <= 1:
        rows = [_row_task(task) for task in tasks]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            rows = list(executor.map(_row_task, tasks, chunksize=8))

    failed = [row for row in rows if not row.ok]
    if failed:
        triangulation_logger.error(
            f"{len(failed)} census rows failed: "
            f"{[(row.m, row.triangulation_id) for row in failed]}"
        )
    return rows


def census_frame(rows: list[CensusRow]) -> pd.DataFrame:
    columns = list(CensusRow.model_fields)
    return pd.DataFrame([row.model_dump() for row in rows], columns=columns)
