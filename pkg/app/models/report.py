from __future__ import annotations

from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator


class SearchReport(BaseModel):
    r: int
    m: int
    bound: int
    solutions: List[int]
    count: int
    exclusions: List[str] = Field(default_factory=list)
    unit_index_counted: bool
    workers: int = 1
    visited: int = 0

    @model_validator(mode="after")
    def _check_solutions(self) -> "SearchReport":
        if self.count != len(self.solutions):
            raise ValueError("count must equal the number of solutions")
        if any(b <= a for a, b in zip(self.solutions, self.solutions[1:])):
            raise ValueError("solutions must be strictly increasing")
        if self.solutions and (self.solutions[-1] > self.bound or any(n % 2 == 0 for n in self.solutions)):
            raise ValueError("solutions must be odd and within the bound")
        return self


class Counterexample(BaseModel):
    params: Dict[str, Any]
    lhs: List[str] = Field(default_factory=list)
    rhs: List[str] = Field(default_factory=list)
    detail: Optional[str] = None


class IdentityReport(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    identity: str
    params: Dict[str, Any] = Field(default_factory=dict)
    passed: bool = Field(alias="pass")
    counterexample: Optional[Counterexample] = None
    notes: List[str] = Field(default_factory=list)

    @model_validator(mode="after")
    def _failure_has_evidence(self) -> "IdentityReport":
        if not self.passed and self.counterexample is None:
            raise ValueError("a failed identity must carry a counterexample")
        return self


class SweepReport(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    identity: str
    range: Dict[str, str] = Field(default_factory=dict)
    cells: int
    passed: bool = Field(alias="pass")
    failures: List[IdentityReport] = Field(default_factory=list)
    notes: List[str] = Field(default_factory=list)


class ConjectureCell(BaseModel):
    params: Dict[str, int]
    observation: Any
    consistent: Optional[bool] = None


class ConjectureReport(BaseModel):
    conjecture: str
    grid: Dict[str, str] = Field(default_factory=dict)
    cells: List[ConjectureCell] = Field(default_factory=list)
    notes: List[str] = Field(default_factory=list)

    @property
    def inconsistent_cells(self) -> List[ConjectureCell]:
        return [c for c in self.cells if c.consistent is False]


class MinedTriple(BaseModel):
    quadruple: List[int]
    p: str
    q: str
    u: str
    trivial: bool = False
    accepted: bool
    validated_through: int = 3
    failure_index: Optional[int] = None
    failure_value: Optional[str] = None
    failure_reason: Optional[str] = None


class MiningReport(BaseModel):
    r: int
    m: int
    input_size: int
    validation_depth: int
    quadruple_count: int
    triples_checked: int
    triples: List[MinedTriple] = Field(default_factory=list)

    @property
    def accepted(self) -> List[MinedTriple]:
        return [t for t in self.triples if t.accepted]

    @property
    def rejected(self) -> List[MinedTriple]:
        return [t for t in self.triples if not t.accepted]


class CheckpointState(BaseModel):
    spec: Dict[str, int]
    bound: int
    depth: int
    exclusions: List[str] = Field(default_factory=list)
    completed_subtrees: List[int] = Field(default_factory=list)
    partial_solutions: List[int] = Field(default_factory=list)
    visited: int = 0


class TypoEntry(BaseModel):
    name: str
    location: str
    printed: str
    computed: str
    confirmed: bool
    evidence: Dict[str, Any] = Field(default_factory=dict)


class TableRow(BaseModel):
    cells: Dict[str, Any]
    expected: Optional[Any] = None
    matches: Optional[bool] = None
