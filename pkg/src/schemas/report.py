from typing import Optional

from pydantic import BaseModel, Field, field_serializer

from src.config import get_settings

settings = get_settings()


class SearchReport(BaseModel):
    schema_version: int = Field(
        default=settings.REPORT_SCHEMA_VERSION, serialization_alias="schema"
    )
    n: int
    t: Optional[int] = None
    length_min: Optional[int] = None
    length_max: Optional[int] = None
    spectrum: Optional[list[int]] = None
    count: Optional[int] = None
    witness_sequence: Optional[list[int]] = None


class CensusRow(BaseModel):
    triangulation_id: int
    m: int
    n: int
    t: int
    chords: list[tuple[int, int]]
    minimal_length: int
    length_min: int
    length_max: int
    spectrum: list[int]
    count: int
    procedure_ok: bool
    tau_endpoint_ok: bool
    witnesses_ok: bool

    @field_serializer("spectrum")
    def serialize_spectrum(self, spectrum: list[int]) -> str:
        return " ".join(str(length) for length in spectrum)

    @field_serializer("chords")
    def serialize_chords(self, chords: list[tuple[int, int]]) -> str:
        return " ".join(f"{u}-{v}" for u, v in chords)

    @property
    def ok(self) -> bool:
        return (
            self.procedure_ok
            and self.tau_endpoint_ok
            and self.witnesses_ok
            and self.length_min == self.n + self.t == self.minimal_length
        )
