from pydantic import BaseModel, Field, model_validator
from typing import List, Optional, Dict
from enum import Enum


class Verdict(str, Enum):
    MATCH = "match"
    MISMATCH = "mismatch"


class SuiteStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"


class MatrixKind(str, Enum):
    DL = "dl"
    L = "l"


class OutputFormat(str, Enum):
    TEXT = "text"
    JSON = "json"
    CSV = "csv"


class VerifyKind(str, Enum):
    THM33 = "thm33"
    REMARK45 = "remark45"
    FORMULAS = "formulas"
    PROPERTIES = "properties"
    COSPECTRAL = "cospectral"
    EXTREMAL = "extremal"


class FamilyTag(str, Enum):
    """Named graph families; the CLI accepts the values."""
    COMPLETE = "complete"
    PATH = "path"
    CYCLE = "cycle"
    STAR = "star"
    COMPLETE_MULTIPARTITE = "complete-multipartite"
    # the six classified families
    COMPLETE_BIPARTITE_2 = "k2-bipartite"
    STAR_PLUS_EDGE = "star-plus-edge"
    BALANCED_BIPARTITE_PLUS_EDGE = "balanced-bipartite-plus-edge"
    K2_JOIN_EMPTY = "k2-join-empty"
    K1_JOIN_BALANCED_BIPARTITE = "k1-join-balanced-bipartite"
    BALANCED_TRIPARTITE = "balanced-tripartite"
    J_GRAPH = "j-graph"


class FamilySpec(BaseModel):
    tag: FamilyTag
    n: Optional[int] = Field(None, ge=1, le=64)
    parts: Optional[List[int]] = None
    a: Optional[int] = Field(None, ge=1)
    b: Optional[int] = Field(None, ge=1)

    @model_validator(mode="after")
    def check_parameters(self) -> "FamilySpec":
        if self.tag == FamilyTag.J_GRAPH:
            if self.a is None or self.b is None:
                raise ValueError("j-graph needs both a and b")
        elif self.tag == FamilyTag.COMPLETE_MULTIPARTITE:
            if not self.parts or any(p < 1 for p in self.parts):
                raise ValueError("complete-multipartite needs positive part sizes")
        elif self.n is None:
            raise ValueError(f"{self.tag.value} needs n")
        return self

    def label(self) -> str:
        if self.tag == FamilyTag.J_GRAPH:
            return f"J({self.a},{self.b})"
        if self.tag == FamilyTag.COMPLETE_MULTIPARTITE:
            return "K_{" + ",".join(str(p) for p in self.parts) + "}"
        return f"{self.tag.value}(n={self.n})"


class RootDescriptorModel(BaseModel):
    exact: Optional[int] = None
    lo: Optional[str] = None
    hi: Optional[str] = None
    approx: float


class SpectrumEntryModel(BaseModel):
    root: RootDescriptorModel
    multiplicity: int = Field(..., ge=1)


class SpectrumModel(BaseModel):
    graph6: Optional[str] = None
    matrix: MatrixKind
    n: int
    text: str
    entries: List[SpectrumEntryModel]


class GraphRecord(BaseModel):
    graph6: str
    largest: RootDescriptorModel
    multiplicity: int
    distinct: int
    diameter: int
    p5_free: bool
    complement_components: int
    max_transmission: int
    char_poly: List[int]


class SuiteResult(BaseModel):
    name: str
    status: SuiteStatus
    checked: int = 0
    counterexamples: List[str] = []
    details: List[str] = []


class ClassificationReport(BaseModel):
    n: int
    count: int
    class_size: int
    verdict: Verdict
    members: List[str] = []
    expected: List[str] = []
    missing: List[str] = []
    unexpected: List[str] = []
    multiplicity_distribution: Dict[int, int] = {}
    suites: List[SuiteResult] = []
    records: List[GraphRecord] = Field(default_factory=list, exclude=True)


class CospectralGroup(BaseModel):
    char_poly: List[int]
    members: List[str]


class CospectralReport(BaseModel):
    n: int
    count: int
    groups: List[CospectralGroup] = []
    ds_verdicts: Dict[str, bool] = {}
    verdict: Verdict


class SuiteReport(BaseModel):
    n: int
    min_n: Optional[int] = None
    seed: int
    samples: int
    verdict: Verdict
    suites: List[SuiteResult] = []


class SmallCaseReport(BaseModel):
    verdict: Verdict
    reports: List[ClassificationReport] = []


class FormulaReport(BaseModel):
    min_n: int
    max_n: int
    verdict: Verdict
    suites: List[SuiteResult] = []
