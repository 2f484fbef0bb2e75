"""
Pydantic models for everything the command line emits as JSON. Each model
mirrors a library value (polynomials, D-sets, monomials) or a verification
result, so reports can be validated and read back.
"""
from __future__ import annotations

from enum import Enum
from typing import Any, Dict, List, Optional, Union

from pydantic import BaseModel, Field, RootModel

from chowlab.chow.boolean import NormalMonomial
from chowlab.chow.dsets import DSet
from chowlab.polyalg.polynomial import IntPolynomial


class PolynomialModel(BaseModel):
    """``{"coeffs": [c0, c1, ...]}``; the zero polynomial has no coefficients."""
    coeffs: List[int] = Field(default_factory=list)

    @classmethod
    def of(cls, p: IntPolynomial) -> "PolynomialModel":
        return cls(coeffs=list(p.coeffs))

    def to_polynomial(self) -> IntPolynomial:
        return IntPolynomial(tuple(self.coeffs))


class DSetModel(BaseModel):
    """``{"n": ..., "k": ..., "elements": [[...], ...]}`` sorted lexicographically."""
    n: int
    k: int
    elements: List[List[int]]

    @classmethod
    def of(cls, d: DSet) -> "DSetModel":
        return cls(n=d.n, k=d.k, elements=[list(e) for e in d.sorted_elements()])


class MonomialModel(RootModel[List[List[int]]]):
    """A monomial as the list of its parts' label lists, in ``⊲`` order."""

    @classmethod
    def of(cls, m: NormalMonomial) -> "MonomialModel":
        return cls(m.label_lists())


class CheckStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIP = "skip"


class CheckResult(BaseModel):
    """One check of a verification suite."""
    name: str
    status: CheckStatus
    n: Optional[int] = None
    k: Optional[int] = None
    message: Optional[str] = None
    details: Dict[str, Any] = Field(default_factory=dict)


class Report(BaseModel):
    """
    Outcome of a verification suite. ``wall_time`` stays ``None`` unless
    timings were requested, so that default reports are reproducible.
    """
    suite: str
    max_n: int
    status: CheckStatus
    checks: List[CheckResult] = Field(default_factory=list)
    events: List[Dict[str, Any]] = Field(default_factory=list)
    wall_time: Optional[float] = None

    @property
    def passed(self) -> bool:
        return self.status is not CheckStatus.FAIL


class InterlaceRow(BaseModel):
    """One value of ``n`` in an interlacing experiment."""
    n: int
    labels: List[str]
    polynomials: List[PolynomialModel]
    real_rooted: List[bool]
    matrix: List[List[bool]]
    interlacing: bool
    failure: Optional[List[int]] = None


class InterlaceReport(BaseModel):
    """
    An interlacing experiment over a range of ``n``.

    ``claimed`` says whether the family is expected to interlace; for an
    unclaimed family the interesting outcome is ``witness``, the first row
    that does not.
    """
    family: str
    k: Optional[int] = None
    n_from: int
    n_to: int
    claimed: bool
    status: CheckStatus
    witness: Optional[int] = None
    rows: List[InterlaceRow] = Field(default_factory=list)
    wall_time: Optional[float] = None


class ChowResult(BaseModel):
    matroid: str
    n: int
    k: Optional[int] = None
    method: str
    polynomial: PolynomialModel
    text: str
    routes: Dict[str, PolynomialModel] = Field(default_factory=dict)
    agree: Optional[bool] = None


class BijectionResult(BaseModel):
    direction: str
    permutation: List[int]
    monomial: MonomialModel
    text: str
    statistic: int


class RewriteModel(BaseModel):
    input: List[int]
    result: Union[List[int], str]
    text: str
    trace: List[Dict[str, Any]] = Field(default_factory=list)


class FamilyResult(BaseModel):
    """Result of the ``eulerian`` and ``derangement`` commands."""
    name: str
    n: int
    polynomial: PolynomialModel
    text: str
    refined: List[PolynomialModel] = Field(default_factory=list)
