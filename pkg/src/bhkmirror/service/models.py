"""Pydantic request/response models for the service and the CLI client.

The input document pins the wire format for an orbifold: an exponent matrix
plus group generators as exact root-of-unity phases {num, den}.  Reports
serialize every rational exactly (strings like "3/4"; no floats) with a
stable field order, so identical requests produce byte-identical JSON.
"""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator


class GeneratorIn(BaseModel):
    model_config = ConfigDict(extra="forbid")

    num: list[int]
    den: int = Field(ge=1)


class GroupIn(BaseModel):
    model_config = ConfigDict(extra="forbid")

    generators: list[GeneratorIn] = Field(default_factory=list)


class OrbifoldInput(BaseModel):
    """One orbifold: exponent matrix and symmetry group generators."""

    model_config = ConfigDict(extra="forbid")

    n: int = Field(ge=0, description="projective dimension; the matrix is (n+1) x (n+1)")
    matrix: list[list[int]]
    group: GroupIn = Field(default_factory=GroupIn)
    scale: Optional[int] = Field(default=None, ge=1,
                                 description="optional non-minimal degree multiplier")

    @model_validator(mode="after")
    def _check_shape(self) -> "OrbifoldInput":
        size = self.n + 1
        if len(self.matrix) != size or any(len(row) != size for row in self.matrix):
            raise ValueError(f"matrix must be {size} x {size}")
        if any(e < 0 for row in self.matrix for e in row):
            raise ValueError("matrix entries must be nonnegative")
        for gen in self.group.generators:
            if len(gen.num) != size:
                raise ValueError(f"generator length must be {size}")
        return self


class ModelRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    orbifold: OrbifoldInput
    side: Literal["direct", "mirror"] = "direct"
    scale: int = Field(default=1, ge=1)


class CompareRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    first: OrbifoldInput
    second: OrbifoldInput


class HodgeRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    orbifold: OrbifoldInput
    cr: bool = False
    invariant: bool = False
    check_mirror: bool = False
    limit: int = Field(default=100_000, ge=1)


class PhaseOut(BaseModel):
    num: list[int]
    den: int


class PieceOut(BaseModel):
    kind: str
    variables: list[int]
    exponents: list[int]


class PotentialOut(BaseModel):
    variables: int
    monomials: list[list[int]]
    degree: int
    weights: list[int]
    reduced_weights: list[int]
    reduced_degree: int
    calabi_yau: bool
    gorenstein: bool
    aut_order: int
    pieces: list[PieceOut]


class GroupOut(BaseModel):
    name: str
    order: int
    denominator: int
    generators: list[PhaseOut]


class ModelOut(BaseModel):
    side: str
    fermat_degree: int
    quotient_order: int
    group: GroupOut


class DiamondEntryOut(BaseModel):
    p: str
    q: str
    h: int


class DiamondOut(BaseModel):
    name: str
    dimension: int
    entries: list[DiamondEntryOut]


class SectorOut(BaseModel):
    element: PhaseOut
    fixed_indices: list[int]
    age: str
    locus: str


class Report(BaseModel):
    """Uniform response document; ``exit_code`` drives the CLI."""

    command: str
    status: str
    exit_code: int
    message: Optional[str] = None
    potential: Optional[PotentialOut] = None
    transpose: Optional[PotentialOut] = None
    groups: list[GroupOut] = Field(default_factory=list)
    checks: list[str] = Field(default_factory=list)
    models: list[ModelOut] = Field(default_factory=list)
    sectors: list[SectorOut] = Field(default_factory=list)
    diamonds: list[DiamondOut] = Field(default_factory=list)
    mirror_input: Optional[OrbifoldInput] = None

    def to_json(self) -> str:
        return self.model_dump_json(indent=2, exclude_none=True) + "\n"
