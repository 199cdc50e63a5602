from typing import Annotated, Optional

from pydantic import BaseModel, ConfigDict, Field, computed_field

from src.models.quiver import VertexColor

Vertex = Annotated[int, Field(ge=1)]


class MutationSequence(BaseModel):
    """Mutable vertices in application order; ``trace`` holds each vertex's color before its step."""

    steps: list[Vertex] = Field(default_factory=list)
    trace: list[VertexColor] = Field(default_factory=list)

    model_config = ConfigDict(frozen=True)

    @computed_field
    @property
    def length(self) -> int:
        return len(self.steps)

    @property
    def is_green(self) -> bool:
        return len(self.trace) == len(self.steps) and all(
            color == VertexColor.GREEN for color in self.trace
        )

    def __add__(self, other: "MutationSequence") -> "MutationSequence":
        return MutationSequence(steps=[*self.steps, *other.steps])

    def __len__(self) -> int:
        return len(self.steps)

    def __str__(self) -> str:
        return " ".join(str(step) for step in self.steps)


class StepReport(BaseModel):
    index: Annotated[int, Field(ge=1)]
    vertex: int
    color: Optional[VertexColor] = None
    green: bool
    reason: Optional[str] = None


class ValidityReport(BaseModel):
    steps: list[StepReport] = Field(default_factory=list)
    first_invalid_step: Optional[int] = None
    final_colors: dict[int, VertexColor] = Field(default_factory=dict)

    @computed_field
    @property
    def valid(self) -> bool:
        return self.first_invalid_step is None

    @computed_field
    @property
    def all_red(self) -> bool:
        return all(color == VertexColor.RED for color in self.final_colors.values())

    @property
    def is_maximal(self) -> bool:
        return self.valid and self.all_red
