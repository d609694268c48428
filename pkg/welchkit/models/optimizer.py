"""
Models for the packing and frame-potential optimizer.
"""

from enum import Enum
from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from ..errors import InvalidArgumentError
from .frame import FieldTag, SampledFrame

DEFAULT_P_SCHEDULE = [2.0, 4.0, 8.0, 16.0, 32.0, 64.0]


class ObjectiveKind(str, Enum):
    COHERENCE = "coherence"
    POTENTIAL = "potential"
    POTENTIAL_ORDER_M = "potential_order_m"


class OptimizerConfig(BaseModel):
    """Search configuration over n unit vectors in K^d with the counting measure."""
    model_config = ConfigDict(frozen=True, extra="forbid")

    n: int = Field(..., ge=1, description="Number of vectors")
    d: int = Field(..., ge=1, description="Ambient dimension")
    field: FieldTag = Field(default=FieldTag.COMPLEX)
    objective: ObjectiveKind = Field(default=ObjectiveKind.COHERENCE)
    m: int = Field(default=1, ge=1, description="Order for potential_order_m")
    seed: int = Field(default=0, ge=0)
    restarts: int = Field(default=1, ge=1)
    max_iters: int = Field(default=20000, ge=1, description="Iteration budget per restart")
    p_schedule: List[float] = Field(default_factory=lambda: list(DEFAULT_P_SCHEDULE))
    step: float = Field(default=0.1, gt=0)
    tol: float = Field(default=1e-10, ge=0)
    jobs: int = Field(default=1, ge=1, description="Restarts run concurrently")

    @model_validator(mode="after")
    def _check_shape(self) -> "OptimizerConfig":
        if self.n < self.d:
            raise ValueError(f"n must be at least d (n={self.n}, d={self.d})")
        if not self.p_schedule:
            raise ValueError("p_schedule must not be empty")
        if any(p <= 1 for p in self.p_schedule):
            raise ValueError("p_schedule entries must exceed 1")
        if any(b <= a for a, b in zip(self.p_schedule, self.p_schedule[1:])):
            raise ValueError("p_schedule must be strictly ascending")
        return self

    @classmethod
    def build(cls, **kwargs) -> "OptimizerConfig":
        """Construct a config, raising InvalidArgumentError instead of ValidationError."""
        try:
            return cls(**kwargs)
        except ValidationError as e:
            messages = "; ".join(
                f"{'.'.join(str(part) for part in err['loc']) or 'config'}: {err['msg']}"
                for err in e.errors()
            )
            raise InvalidArgumentError(f"invalid optimizer config: {messages}") from e

    @property
    def order(self) -> int:
        """Tensor order of the potential objective."""
        return self.m if self.objective is ObjectiveKind.POTENTIAL_ORDER_M else 1


class Certificate(BaseModel):
    """Best applicable lower bound for the achieved objective."""
    model_config = ConfigDict(frozen=True)

    name: str
    value: float
    gap: float
    candidates: Dict[str, Optional[float]] = Field(default_factory=dict)


class OptimizerResult(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    frame: SampledFrame
    objective: ObjectiveKind
    order: int
    achieved: float
    coherence: float
    potential: float
    certificate: Certificate
    equiangular: bool
    gamma: Optional[float] = None
    tight: bool
    best_restart: int
    restart_values: List[float]
    iterations_used: List[int]


class GradientCheckEntry(BaseModel):
    model_config = ConfigDict(frozen=True)

    p: Optional[float] = None
    max_rel_error: float
    passed: bool


class GradientCheckReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    objective: ObjectiveKind
    field: FieldTag
    n: int
    d: int
    step: float
    tolerance: float
    entries: List[GradientCheckEntry]
    gradient_norm: float

    @property
    def passed(self) -> bool:
        return all(entry.passed for entry in self.entries)
