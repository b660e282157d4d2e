"""Pydantic request/response models: the wire format of the service and the
on-disk problem/solution file formats.

Numbers travel as strings to keep them unambiguous: exact rationals as
"p/q", floats in round-tripping decimal form, complex values as [re, im]
pairs of such strings.
"""

from __future__ import annotations

from typing import Optional, Union

from pydantic import BaseModel, Field, field_validator

SCHEMA_TAG = "supergaudin/1"


ComplexPair = Union[list, str, int, float]


class SiteSpec(BaseModel):
    z: ComplexPair
    module: Union[str, list, dict] = "box"


class SolverConfig(BaseModel):
    seed: int = 0
    tol: float = 1e-12
    eps0: float = 1e-2
    max_dim: int = 4096
    c_param: Union[str, int, float] = "1"


class ProblemFile(BaseModel):
    schema_tag: str = Field(default=SCHEMA_TAG, alias="schema")
    m: int
    n: int
    parities: str = "distinguished"
    sites: list[SiteSpec]
    l: list[int]
    solver: SolverConfig = Field(default_factory=SolverConfig)

    model_config = {"populate_by_name": True}

    @field_validator("sites")
    @classmethod
    def _nonempty(cls, v):
        if not v:
            raise ValueError("need at least one site")
        return v


class RootsFile(BaseModel):
    schema_tag: str = Field(default=SCHEMA_TAG, alias="schema")
    roots: dict[str, list] = Field(default_factory=dict)

    model_config = {"populate_by_name": True}


class StructureRequest(BaseModel):
    m: int
    n: int
    parities: str = "distinguished"


class StructureReport(BaseModel):
    schema_tag: str = Field(default=SCHEMA_TAG, alias="schema")
    m: int
    n: int
    parities: str
    simple_root_parities: list[int]
    cartan: list[list[int]]
    symmetrized: list[list[int]]
    dynkin: str

    model_config = {"populate_by_name": True}


class SolutionRecord(BaseModel):
    label: list
    roots: dict[str, list]
    residual: float
    eigenvalues: list
    norm_sq: ComplexPair
    zero_vector: bool
    singular_ok: bool
    eigen_ok: bool
    all_ok: bool


class SolveRequest(BaseModel):
    problem: ProblemFile


class SolveReport(BaseModel):
    schema_tag: str = Field(default=SCHEMA_TAG, alias="schema")
    method: str
    l: list[int]
    solutions: list[SolutionRecord]
    unresolved: list
    note: str = ""
    all_ok: bool

    model_config = {"populate_by_name": True}


class VerifyRequest(BaseModel):
    problem: ProblemFile
    roots: RootsFile


class VerifyReport(BaseModel):
    schema_tag: str = Field(default=SCHEMA_TAG, alias="schema")
    residual_norm: float
    zero_vector: bool
    singular_ok: bool
    singular_residual: float
    eigen_ok: bool
    eigen_residual: float
    eigenvalues: list
    norm_sq: ComplexPair
    all_ok: bool

    model_config = {"populate_by_name": True}


class CompleteRequest(BaseModel):
    m: int
    n: int
    parities: str = "distinguished"
    N: int
    z: Optional[list] = None
    seed: int = 0
    eps0: float = 1e-2
    tol: float = 1e-12
    max_dim: int = 4096


class StratumCount(BaseModel):
    weight: list
    count: int


class CompleteReport(BaseModel):
    schema_tag: str = Field(default=SCHEMA_TAG, alias="schema")
    m: int
    n: int
    parities: str
    N: int
    z: list
    seed: int
    solutions: list[SolutionRecord]
    count: int
    singular_dimension: int
    strata: list[StratumCount]
    unresolved: list
    duplicates: list
    simple_spectrum: bool
    brute_match: bool
    all_ok: bool

    model_config = {"populate_by_name": True}


class Gl11Request(BaseModel):
    h: list
    z: list


class Gl11Report(BaseModel):
    schema_tag: str = Field(default=SCHEMA_TAG, alias="schema")
    h: list
    z: list
    roots: list
    reduced_degree: bool
    norm_factors: list
    residual_max: float
    singular_dimension: int
    strata: list[StratumCount]

    model_config = {"populate_by_name": True}


class Gl21Request(BaseModel):
    r1: int
    r2: int
    l1: int
    l2: int
    c_param: Union[str, int, float] = "1"


class Gl21FamilyRecord(BaseModel):
    t_roots: list
    s_roots: list
    c_param: str
    exact: bool
    collinear: bool


class Gl21Report(BaseModel):
    schema_tag: str = Field(default=SCHEMA_TAG, alias="schema")
    r1: int
    r2: int
    l1: int
    l2: int
    admissible: bool
    families: list[Gl21FamilyRecord]

    model_config = {"populate_by_name": True}


class ErrorReport(BaseModel):
    schema_tag: str = Field(default=SCHEMA_TAG, alias="schema")
    error: str
    kind: str
    exit_code: int

    model_config = {"populate_by_name": True}
