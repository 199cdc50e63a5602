import enum
from pathlib import Path
from typing import Annotated, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.config import get_settings

settings = get_settings()


class OutputFormat(str, enum.Enum):
    TEXT = "text"
    JSON = "json"
    DOT = "dot"
    SVG = "svg"
    CSV = "csv"


class SearchMode(str, enum.Enum):
    SHORTEST = "shortest"
    LONGEST = "longest"
    SPECTRUM = "spectrum"
    COUNT = "count"
    ALL = "all"


COMMAND_FORMATS: dict[str, tuple[OutputFormat, ...]] = {
    "generate": (OutputFormat.TEXT, OutputFormat.JSON),
    "verify": (OutputFormat.TEXT, OutputFormat.JSON),
    "search": (OutputFormat.TEXT, OutputFormat.JSON),
    "census": (OutputFormat.CSV, OutputFormat.JSON),
    "dot": (OutputFormat.DOT, OutputFormat.SVG),
}


class RunConfig(BaseModel):
    command: str
    inputs: list[Path] = Field(default_factory=list)
    output_format: OutputFormat = OutputFormat.TEXT
    min_m: Annotated[int, Field(gt=0)] = 3
    limit_m: Optional[Annotated[int, Field(gt=0)]] = None
    jobs: Annotated[int, Field(ge=1)] = settings.CENSUS_DEFAULT_JOBS
    seed: int = settings.RANDOM_SEED
    samples: Annotated[int, Field(ge=0)] = 0
    oracle: bool = False
    search_mode: SearchMode = SearchMode.ALL
    sequence: Optional[list[Annotated[int, Field(ge=1)]]] = None

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def check_polygon_range(self) -> "RunConfig":
        if self.limit_m is not None and self.limit_m < self.min_m:
            raise ValueError("limit_m must not be smaller than min_m")
        return self

    @model_validator(mode="after")
    def check_format_for_command(self) -> "RunConfig":
        allowed = COMMAND_FORMATS.get(self.command)
        if allowed is not None and self.output_format not in allowed:
            names = ", ".join(f.value for f in allowed)
            raise ValueError(
                f"{self.command} writes {names}, not {self.output_format.value}"
            )
        return self
