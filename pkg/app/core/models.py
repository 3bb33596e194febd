from __future__ import annotations

from enum import Enum
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, PrivateAttr, field_validator, model_validator

from .errors import (
    BadColorCountError,
    DisconnectedError,
    FixedPointError,
    NotInvolutionError,
    OddVertexCountError,
)
from .unionfind import count_components

ColorSet = Tuple[int, ...]


# ========================================
# 색칠 그래프
# ========================================
class ColoredGraph(BaseModel):
    """(d+1)-정규 변-색칠 멀티그래프: 색마다 고정점 없는 involution 하나.

    matchings[c][v] 는 정점 v 의 색 c 이웃. 생성 시 모든 불변식을 검사하고,
    이후에는 불변(frozen)이다.
    """

    model_config = ConfigDict(frozen=True)

    dim: int
    num_vertices: int
    matchings: Tuple[Tuple[int, ...], ...]

    # residue 개수 메모 (equality / 직렬화에 포함되지 않음)
    _counts: Dict[ColorSet, int] = PrivateAttr(default_factory=dict)

    @model_validator(mode="after")
    def _check_regular_colored_graph(self) -> "ColoredGraph":
        d, nu = self.dim, self.num_vertices
        if d < 2:
            raise BadColorCountError(f"dim must be >= 2 (got {d})")
        if len(self.matchings) != d + 1:
            raise BadColorCountError(
                f"dim {d} needs {d + 1} color matchings, got {len(self.matchings)}"
            )
        if nu <= 0 or nu % 2:
            raise OddVertexCountError(f"vertex count must be even and positive (got {nu})")
        for c, partner in enumerate(self.matchings):
            if len(partner) != nu:
                raise NotInvolutionError(
                    f"color {c}: expected {nu} entries, got {len(partner)}"
                )
            for v, w in enumerate(partner):
                if not 0 <= w < nu:
                    raise NotInvolutionError(f"color {c}: vertex {v} maps outside 0..{nu - 1} ({w})")
                if w == v:
                    raise FixedPointError(f"color {c}: vertex {v} is matched to itself")
            for v, w in enumerate(partner):
                if partner[w] != v:
                    raise NotInvolutionError(
                        f"color {c}: {v}->{w} but {w}->{partner[w]} (not an involution)"
                    )
        if count_components(self.matchings, nu) != 1:
            raise DisconnectedError("graph on all colors is not connected")
        return self

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ColoredGraph):
            return NotImplemented
        return (self.dim, self.num_vertices, self.matchings) == (
            other.dim,
            other.num_vertices,
            other.matchings,
        )

    def __hash__(self) -> int:
        return hash((self.dim, self.num_vertices, self.matchings))

    @property
    def colors(self) -> ColorSet:
        return tuple(range(self.dim + 1))


class Residue(BaseModel):
    model_config = ConfigDict(frozen=True)

    colors: ColorSet
    vertices: Tuple[int, ...]


# ========================================
# K(Γ) 불변량
# ========================================
class FVector(BaseModel):
    model_config = ConfigDict(frozen=True)

    entries: Tuple[int, ...]

    def __getitem__(self, i: int) -> int:
        return self.entries[i]

    @property
    def dim(self) -> int:
        return len(self.entries) - 1


class HVector(BaseModel):
    model_config = ConfigDict(frozen=True)

    entries: Tuple[int, ...]

    def __getitem__(self, i: int) -> int:
        return self.entries[i]


class BettiVector(BaseModel):
    """사용자 입력 Betti 수 (계산하지 않는다)"""

    model_config = ConfigDict(frozen=True)

    entries: Tuple[int, int, int, int, int]

    @field_validator("entries")
    @classmethod
    def _nonnegative(cls, v):
        if any(b < 0 for b in v):
            raise ValueError("Betti numbers must be nonnegative")
        if v[0] < 1:
            raise ValueError("beta_0 must be >= 1")
        return v

    @property
    def alternating_sum(self) -> int:
        return sum((-1) ** i * b for i, b in enumerate(self.entries))


class ManifoldState(str, Enum):
    VERIFIED = "Verified"
    UNVERIFIED = "Unverified"
    NOT_MANIFOLD = "NotManifold"


class ManifoldStatus(BaseModel):
    state: ManifoldState
    diagnostic: str = ""
    witness: Optional[Residue] = None


class DehnSommervilleResult(BaseModel):
    holds: bool
    euler_characteristic: int
    residuals: Tuple[int, int]


class NovikSwartzResult(BaseModel):
    bound_holds: bool
    equality: bool
    vertex_bound_triggered: bool
    betti_weighted_sum: int
    num_vertices: int
    vertex_bound: int


class TripleCheck(BaseModel):
    holds: bool
    residuals: Dict[str, int] = {}


# ========================================
# Regular genus
# ========================================
class CyclicPermutation(BaseModel):
    """색 집합의 순환 배열 ε (회전/반사 몫의 대표원)"""

    model_config = ConfigDict(frozen=True)

    order: Tuple[int, ...]

    @property
    def label(self) -> str:
        return "(" + ",".join(str(c) for c in self.order) + ")"

    def __len__(self) -> int:
        return len(self.order)

    def __getitem__(self, i: int) -> int:
        return self.order[i % len(self.order)]


class PermutationGenus(BaseModel):
    permutation: CyclicPermutation
    chi: int
    rho_times_two: int

    @property
    def rho(self) -> Fraction:
        return Fraction(self.rho_times_two, 2)


class GenusReport(BaseModel):
    dim: int
    num_vertices: int
    entries: List[PermutationGenus]
    regular_genus_times_two: int
    argmin: CyclicPermutation
    orientable: bool


class ClassificationKind(str, Enum):
    SIMPLE = "Simple"
    SEMI_SIMPLE = "SemiSimple"
    WEAK_SEMI_SIMPLE = "WeakSemiSimple"
    NONE = "None"


class Classification(BaseModel):
    kind: ClassificationKind
    rank_m: int
    # t_ijk = g_ijk - (m+1), "i,j,k" 키
    triple_excess: Dict[str, int] = {}
    # weak semi-simple 증거: 연속 triple 이 모두 m+1 인 순환 배열 δ
    witness_order: Optional[CyclicPermutation] = None
    # δ_i -> i 색 재배치 (relabeling[c] = 새 색)
    witness_relabeling: Optional[Tuple[int, ...]] = None
    # ρ_ε 가 하한을 달성하는 배열 (δ0, δ2, δ4, δ1, δ3)
    genus_permutation: Optional[CyclicPermutation] = None

    @property
    def is_weak_semi_simple(self) -> bool:
        return self.kind != ClassificationKind.NONE


class CertificateRoute(str, Enum):
    WEAK_SEMI_SIMPLE = "WeakSemiSimple"
    VERTEX_BOUND = "VertexBound"
    NOVIK_SWARTZ_EQUALITY = "NovikSwartzEquality"


class Certificate(BaseModel):
    route: CertificateRoute
    routes: List[CertificateRoute]
    genus: int
    chi: int
    rank_m: int
    num_vertices: int


class AdditivityReport(BaseModel):
    first: Certificate
    second: Certificate
    summed: Certificate
    chi_additive: bool
    holds: bool


class LinearSystemRecord(BaseModel):
    rank_m: int
    chi: int
    p_bar: int
    q: int
    a: List[List[int]]
    a_inverse: List[List[str]]
    x: List[int]
    b: List[int]
    m_vector: List[int]
    t_vector: List[int]
    coefficient_table: Dict[str, List[str]]
    checks: Dict[str, bool]

    @property
    def passed(self) -> bool:
        return all(self.checks.values())


# ========================================
# Catalog / Enumerator
# ========================================
class CatalogEntry(BaseModel):
    name: str
    chi: int
    rank_m: int
    known_genus: Optional[int] = None
    source: str = ""
    graph: Optional[ColoredGraph] = None
    cgf_path: Optional[str] = None


class CatalogRowCheck(BaseModel):
    name: str
    has_graph: bool
    checks: Dict[str, bool] = {}
    message: str = ""

    @property
    def passed(self) -> bool:
        return all(self.checks.values())


class SearchConfig(BaseModel):
    num_vertices: int
    dim: int = 4
    require_contracted: bool = True
    require_level3_spheres: bool = True
    require_bipartite: bool = False
    max_results: Optional[int] = None
    jobs: int = Field(default=1)


class CensusEntry(BaseModel):
    graph: ColoredGraph
    canonical_form: str
    manifold_status: ManifoldState
    bipartite: bool


# ========================================
# JSON 리포트
# ========================================
class ComplexReport(BaseModel):
    f_vector: List[int]
    h_vector: List[int]
    euler_characteristic: int
    dehn_sommerville: Optional[DehnSommervilleResult] = None
    manifold_status: ManifoldStatus
    novik_swartz: Optional[NovikSwartzResult] = None


class GenusReportPayload(BaseModel):
    rho_by_permutation: Dict[str, int]
    regular_genus_times_two: int
    argmin_permutation: str
    orientable: bool
    classification: Optional[Classification] = None
    certificate: Optional[Certificate] = None
    linear_system: Optional[Dict[str, bool]] = None
