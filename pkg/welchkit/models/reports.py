"""
Report models produced by the bounds and metrics services.
"""

from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field

from ..config import get_setting


def _tolerance(tol: Optional[float]) -> float:
    return float(get_setting("EQUALITY_TOL")) if tol is None else float(tol)


class BoundReport(BaseModel):
    """
    One inequality LHS ≥ RHS evaluated on concrete data.

    Reversed inequalities are stored with their sides swapped so that
    `gap = lhs - rhs ≥ 0` always means the bound holds; `statement` keeps the
    human-readable form.
    """
    model_config = ConfigDict(frozen=True)

    bound_id: str
    m_or_p: Optional[float] = None
    lhs: Optional[float] = None
    rhs: Optional[float] = None
    gap: Optional[float] = None
    satisfied: Optional[bool] = None
    equality: Optional[bool] = None
    tolerance: float = 1e-6
    applicable: bool = True
    vacuous: bool = False
    reason: Optional[str] = None
    statement: str = ""
    node_count: Optional[int] = None
    details: Dict[str, Any] = Field(default_factory=dict)

    @classmethod
    def evaluate(cls, bound_id: str, lhs: float, rhs: float, *, m_or_p: Optional[float] = None,
                 statement: str = "", tol: Optional[float] = None, vacuous: bool = False,
                 node_count: Optional[int] = None, details: Optional[Dict[str, Any]] = None) -> "BoundReport":
        """
        Compare both sides of a bound.

        Args:
            bound_id: Stable identifier such as "welch_integral"
            lhs: Measured side
            rhs: Bound side
            m_or_p: Order, exponent or power the bound is taken at
            statement: Human-readable inequality
            tol: Relative equality tolerance (WELCHKIT_EQUALITY_TOL when omitted)
            vacuous: The bound side carries no information (e.g. negative)
            node_count: Number of nodes the sup proxies were taken over
            details: Extra values to carry in the report

        Returns:
            BoundReport
        """
        tol = _tolerance(tol)
        lhs = float(lhs)
        rhs = float(rhs)
        gap = lhs - rhs
        slack = tol * max(1.0, abs(rhs))
        return cls(
            bound_id=bound_id,
            m_or_p=m_or_p,
            lhs=lhs,
            rhs=rhs,
            gap=gap,
            satisfied=gap >= -slack,
            equality=abs(gap) <= slack,
            tolerance=tol,
            vacuous=vacuous,
            statement=statement,
            node_count=node_count,
            details=details or {},
        )

    @classmethod
    def not_applicable(cls, bound_id: str, reason: str, *, m_or_p: Optional[float] = None,
                       statement: str = "", node_count: Optional[int] = None) -> "BoundReport":
        return cls(
            bound_id=bound_id,
            m_or_p=m_or_p,
            applicable=False,
            reason=reason,
            statement=statement,
            node_count=node_count,
            tolerance=_tolerance(None),
        )

    @property
    def violated(self) -> bool:
        return self.applicable and self.satisfied is False


class WelchBounds(BaseModel):
    """
    Integral/sum and sup/max Welch bounds at order m.

    For the counting measure `integral_lb` is the discrete sum bound n²/C(d+m-1, m)
    and `sup_lb` the max bound; `sum_lb`/`max_lb` are provided as aliases.
    """
    model_config = ConfigDict(frozen=True)

    m: int
    sym_dim: int
    integral_lb: float
    sup_lb: Optional[float] = None
    sup_reason: Optional[str] = None

    @property
    def sum_lb(self) -> float:
        return self.integral_lb

    @property
    def max_lb(self) -> Optional[float]:
        return self.sup_lb

    @property
    def vacuous(self) -> bool:
        return self.sup_lb is not None and self.sup_lb < 0.0


class AltBounds(BaseModel):
    """Coherence lower bounds on |⟨·,·⟩| other than Welch; None when not applicable."""
    model_config = ConfigDict(frozen=True)

    n: int
    d: int
    field: str
    bukh_cox: Optional[float] = None
    orthoplex: Optional[float] = None
    levenstein: Optional[float] = None
    exponential: Optional[float] = None
    reasons: Dict[str, str] = Field(default_factory=dict)

    def applicable(self) -> Dict[str, float]:
        values = {
            "bukh_cox": self.bukh_cox,
            "orthoplex": self.orthoplex,
            "levenstein": self.levenstein,
            "exponential": self.exponential,
        }
        return {name: value for name, value in values.items() if value is not None}


class LhsValues(BaseModel):
    """Measured sides of the order-m bounds."""
    model_config = ConfigDict(frozen=True)

    m: int
    full_integral: float
    offdiag_integral: float
    sup_offdiag: Optional[float] = None
    node_count: int


class EqualityCertificate(BaseModel):
    """Checks whether an equiangular family attains the first-order sup Welch bound."""
    model_config = ConfigDict(frozen=True)

    coherence_sq: float
    sup_lb: float
    gap: float
    equiangular: bool
    gamma: Optional[float] = None
    equality: bool
    implication_holds: bool


class MetricsReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    coherence: Optional[float] = None
    crms: Optional[float] = None
    potential: float
    tight: bool
    bound_ratio: Optional[float] = None
    equiangular: bool
    gamma: Optional[float] = None
    max_deviation: Optional[float] = None
    notes: Dict[str, str] = Field(default_factory=dict)


class FrameSummary(BaseModel):
    model_config = ConfigDict(frozen=True)

    field: str
    dim: int
    node_count: int
    total_mass: float
    diagonal_mass: float
    offdiag_mass: float
    atomic: bool
    normalized: bool


class OperatorDigest(BaseModel):
    model_config = ConfigDict(frozen=True)

    lower: float
    upper: float
    trace: float
    trace_sq: float
    tight: bool
    bound_ratio: Optional[float] = None
    eigenvalues: List[float]


class AnalysisReport(BaseModel):
    """Everything `analyze` prints and writes."""
    model_config = ConfigDict(frozen=True)

    source: str
    frame: FrameSummary
    operator: OperatorDigest
    metrics: MetricsReport
    bounds: List[BoundReport]

    @property
    def violations(self) -> List[BoundReport]:
        return [report for report in self.bounds if report.violated]

    @property
    def all_satisfied(self) -> bool:
        return not self.violations


class WelchRow(BaseModel):
    """One order of the discrete Welch bounds."""
    model_config = ConfigDict(frozen=True)

    m: int
    sym_dim: int
    sum_lb: float
    max_lb: Optional[float] = None
    max_lb_sqrt: Optional[float] = Field(default=None, description="√max(0, max_lb), a bound on coherence")


class BoundsTable(BaseModel):
    """Closed-form bounds for n unit vectors in K^d, as printed by `bounds`."""
    model_config = ConfigDict(frozen=True)

    n: int
    d: int
    field: str
    welch: List[WelchRow]
    p_welch: Dict[str, float] = Field(default_factory=dict, description="p → RHS of the p-Welch bound")
    alternatives: AltBounds
    gerzon: int
    exceeds_gerzon: bool


class ExampleCheck(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str
    measured: float
    expected: float
    tolerance: float
    passed: bool
    statement: str = ""


class CircleExampleReport(BaseModel):
    """Checks on the (cos α, sin α) frame over [0, 2π]."""
    model_config = ConfigDict(frozen=True)

    nodes: int
    checks: List[ExampleCheck]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)
