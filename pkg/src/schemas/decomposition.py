from typing import Optional

from pydantic import BaseModel, Field

Triple = tuple[int, int, int]


class RegionCycle(BaseModel):
    """A 3-cycle peeled off in some region, with its leader and follower."""

    triangle: Triple
    shared: int
    leader: int
    follower: int


class Region(BaseModel):
    index: int
    cycles: list[RegionCycle] = Field(default_factory=list)

    @property
    def leaders(self) -> list[int]:
        return sorted(cycle.leader for cycle in self.cycles)


class InnermostRegion(BaseModel):
    """The 3-cycle mutated around last; ``s`` is shared with the last peeled region."""

    triangle: Triple
    v_m1: int
    v_m2: int
    s: Optional[int] = None


class CycleConfig(BaseModel):
    """
    A maximal connected union of oriented 3-cycles.

    ``triangles`` are written ``(a, b, c)`` with arrows ``a -> b -> c -> a`` and
    ``a`` the smallest vertex. ``tree_edges`` index into ``triangles`` and form
    the graph with one node per 3-cycle and an edge per shared vertex.
    """

    vertices: list[int]
    triangles: list[Triple]
    shared_vertices: list[int] = Field(default_factory=list)
    tree_edges: list[tuple[int, int]] = Field(default_factory=list)
    regions: list[Region] = Field(default_factory=list)
    innermost: Optional[InnermostRegion] = None

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def t(self) -> int:
        return len(self.triangles)

    @property
    def has_regions(self) -> bool:
        return self.innermost is not None

    def labels(self) -> dict[int, str]:
        """Region notation for every vertex, once regions are filled."""
        result: dict[int, str] = {}
        for region in self.regions:
            for j, cycle in enumerate(
                sorted(region.cycles, key=lambda c: c.leader), start=1
            ):
                result[cycle.leader] = f"L_{region.index}_{j}"
                result[cycle.follower] = f"F_{region.index}_{j}"
        if self.innermost is not None:
            result[self.innermost.v_m1] = "V_m1"
            result[self.innermost.v_m2] = "V_m2"
            if self.innermost.s is not None:
                result[self.innermost.s] = f"S_{len(self.regions)}_1"
        return result


class Decomposition(BaseModel):
    """
    Structural parse of a type A quiver.

    ``fans`` are the maximal directed paths of at least three vertices whose
    arrows lie in no 3-cycle. ``sources`` and ``sinks`` are the acyclic
    vertices labeled ``C_i`` and ``K_j``; ``labels`` holds that notation
    together with the fan interiors ``F_i_j``.
    """

    n: int
    fans: list[list[int]] = Field(default_factory=list)
    sources: list[int] = Field(default_factory=list)
    sinks: list[int] = Field(default_factory=list)
    cycle_configs: list[CycleConfig] = Field(default_factory=list)
    labels: dict[int, str] = Field(default_factory=dict)
    roles: dict[int, list[str]] = Field(default_factory=dict)

    @property
    def t(self) -> int:
        return sum(cfg.t for cfg in self.cycle_configs)

    @property
    def fan_interiors(self) -> list[list[int]]:
        return [fan[1:-1] for fan in self.fans]
