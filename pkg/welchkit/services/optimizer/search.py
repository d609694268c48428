"""
Riemannian gradient descent over products of unit spheres.

Each restart starts from seeded uniform unit vectors and runs one descent
stage per smoothing exponent (coherence) or a single stage (potential).
A stage uses backtracking: the step halves until the objective does not
increase and grows by 1.25 after each accepted step; it resets to the
configured step at every stage. A stage ends after its iteration budget or
when the objective changed by at most tol (relative) over 50 iterations.
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Optional, Tuple

import numpy as np

from ...errors import InvalidArgumentError, NotApplicableError
from ...models.frame import FieldTag, SampledFrame
from ...models.optimizer import (
    Certificate,
    GradientCheckEntry,
    GradientCheckReport,
    ObjectiveKind,
    OptimizerConfig,
    OptimizerResult,
)
from ..bounds.alternatives import alt_bounds
from ..bounds.welch import welch_discrete
from ..frames.operator import frame_operator
from ..measure.quadrature import counting_measure
from ..measure.rng import STREAM_OPTIMIZER, STREAM_PROBE, make_rng, unit_vectors
from ..metrics.quality import coherence, equiangularity, frame_potential
from .objectives import (
    finite_difference_gradient,
    potential,
    project_tangent,
    retract,
    smoothed_coherence,
)

logger = logging.getLogger(__name__)

STAGNATION_WINDOW = 50
MIN_STEP = 1e-20
STEP_GROWTH = 1.25
RESULT_EQUIANGULAR_TOL = 1e-4
TIGHT_TOL = 1e-6
GRADIENT_CHECK_STEP = 1e-6
GRADIENT_CHECK_TOL = 1e-5

StageObjective = Callable[[np.ndarray], Tuple[float, np.ndarray, float]]


def _start(config: OptimizerConfig, restart: int) -> np.ndarray:
    rng = make_rng(config.seed, STREAM_OPTIMIZER, restart)
    x = unit_vectors(rng, config.n, config.d, config.field)
    return x.real.copy() if config.field is FieldTag.REAL else x


def _coherence_sq(x: np.ndarray) -> float:
    g = np.abs(x @ x.conj().T) ** 2
    np.fill_diagonal(g, 0.0)
    return float(np.max(g)) if x.shape[0] > 1 else 0.0


class _Restart:
    """Book-keeping for one restart; tracks the best true coherence seen."""

    def __init__(self, index: int):
        self.index = index
        self.iterations = 0
        self.best_x: Optional[np.ndarray] = None
        self.best_gmax = math.inf

    def observe(self, x: np.ndarray, gmax: float) -> None:
        if gmax < self.best_gmax:
            self.best_gmax = gmax
            self.best_x = x.copy()


class PackingOptimizer:
    """
    Searches n unit vectors in K^d minimizing coherence or frame potential.

    Restarts are independent and can run on a thread pool; the winner is the
    lexicographic minimum of (achieved, restart index).
    """

    def __init__(self, config: OptimizerConfig):
        """
        Initialize the optimizer.

        Args:
            config: Validated OptimizerConfig
        """
        self.config = config
        self.logger = logging.getLogger(__name__)

    def _descend(self, x: np.ndarray, objective: StageObjective, budget: int, state: _Restart) -> np.ndarray:
        value, grad, gmax = objective(x)
        state.observe(x, gmax)
        direction = project_tangent(x, grad)
        step = self.config.step
        history = [value]
        for _ in range(budget):
            if not np.any(direction):
                break
            while True:
                candidate = retract(x - step * direction)
                cand_value, cand_grad, cand_gmax = objective(candidate)
                if cand_value <= value:
                    break
                step *= 0.5
                if step < MIN_STEP:
                    return x
            state.iterations += 1
            x, value, grad = candidate, cand_value, cand_grad
            state.observe(x, cand_gmax)
            direction = project_tangent(x, grad)
            step *= STEP_GROWTH
            history.append(value)
            if len(history) > STAGNATION_WINDOW:
                previous = history[-STAGNATION_WINDOW - 1]
                if abs(previous - value) <= self.config.tol * abs(value):
                    break
        return x

    def _stage_objectives(self) -> List[Tuple[Optional[float], StageObjective]]:
        config = self.config
        if config.objective is ObjectiveKind.COHERENCE:
            return [(p, lambda x, p=p: smoothed_coherence(x, p)) for p in config.p_schedule]
        order = config.order

        def potential_stage(x: np.ndarray) -> Tuple[float, np.ndarray, float]:
            value, grad = potential(x, order)
            return value, grad, value

        return [(None, potential_stage)]

    def run_restart(self, index: int) -> Tuple[float, np.ndarray, int]:
        """
        Run one restart.

        Returns:
            (achieved objective, best configuration, iterations used)
        """
        config = self.config
        stages = self._stage_objectives()
        budget = max(1, config.max_iters // len(stages))
        state = _Restart(index)
        x = _start(config, index)
        for p, objective in stages:
            x = self._descend(x, objective, budget, state)
            if p is not None:
                self.logger.debug(f"restart {index} stage p={p}: coherence {math.sqrt(_coherence_sq(x)):.12f}")

        if config.objective is ObjectiveKind.COHERENCE:
            best = retract(state.best_x if state.best_x is not None else x)
            achieved = math.sqrt(_coherence_sq(best))
        else:
            best = retract(x)
            achieved = potential(best, config.order)[0]
        self.logger.info(f"restart {index}: achieved {achieved!r} in {state.iterations} iterations")
        return achieved, best, state.iterations

    def _certificate(self, achieved: float) -> Certificate:
        config = self.config
        if config.objective is ObjectiveKind.COHERENCE:
            welch = welch_discrete(config.n, config.d, 1)
            candidates = {"welch": math.sqrt(max(0.0, welch.max_lb)) if welch.max_lb is not None else None}
            alternatives = alt_bounds(config.n, config.d, config.field)
            for name in ("orthoplex", "levenstein", "bukh_cox", "exponential"):
                candidates[name] = getattr(alternatives, name)
            usable = {name: value for name, value in candidates.items() if value is not None}
            name = max(usable, key=lambda key: (usable[key], key))
            return Certificate(name=name, value=usable[name], gap=achieved - usable[name], candidates=candidates)
        target = welch_discrete(config.n, config.d, config.order).sum_lb
        return Certificate(name="welch_sum", value=target, gap=achieved - target, candidates={"welch_sum": target})

    def minimize(self) -> OptimizerResult:
        """
        Run all restarts and pick the best configuration.

        Returns:
            OptimizerResult with the winning frame and its certificate
        """
        config = self.config
        self.logger.info(
            f"Optimizing {config.objective.value} for n={config.n}, d={config.d}, field={config.field.value} "
            f"({config.restarts} restarts, {config.jobs} jobs)"
        )
        indices = list(range(config.restarts))
        if config.jobs > 1 and config.restarts > 1:
            with ThreadPoolExecutor(max_workers=config.jobs) as pool:
                outcomes = list(pool.map(self.run_restart, indices))
        else:
            outcomes = [self.run_restart(index) for index in indices]

        best_index = min(indices, key=lambda i: (outcomes[i][0], i))
        achieved, best_x, _ = outcomes[best_index]
        frame = SampledFrame.create(config.field, counting_measure(config.n), best_x, require_normalized=True)

        try:
            flag, gamma, _ = equiangularity(frame, RESULT_EQUIANGULAR_TOL)
        except NotApplicableError:
            flag, gamma = False, None
        certificate = self._certificate(achieved)
        if config.objective is ObjectiveKind.COHERENCE or config.order != 1:
            operator = frame_operator(frame)
            tight = abs(operator.upper - operator.lower) <= TIGHT_TOL * operator.upper
        else:
            tight = certificate.gap <= TIGHT_TOL * certificate.value

        return OptimizerResult(
            frame=frame,
            objective=config.objective,
            order=config.order,
            achieved=achieved,
            coherence=coherence(frame) if config.n > 1 else 0.0,
            potential=frame_potential(frame),
            certificate=certificate,
            equiangular=flag,
            gamma=gamma,
            tight=tight,
            best_restart=best_index,
            restart_values=[outcome[0] for outcome in outcomes],
            iterations_used=[outcome[2] for outcome in outcomes],
        )


def minimize_coherence(config: OptimizerConfig) -> OptimizerResult:
    """
    Search for a low-coherence (Grassmannian) configuration.

    Raises:
        InvalidArgumentError: If the objective is not coherence or n < 2
    """
    if config.objective is not ObjectiveKind.COHERENCE:
        raise InvalidArgumentError(f"minimize_coherence needs objective=coherence, got {config.objective.value}")
    if config.n < 2:
        raise InvalidArgumentError("coherence needs at least two vectors")
    return PackingOptimizer(config).minimize()


def minimize_potential(config: OptimizerConfig) -> OptimizerResult:
    """
    Search for a minimizer of the order-m frame potential.

    Raises:
        InvalidArgumentError: If the objective is coherence
    """
    if config.objective is ObjectiveKind.COHERENCE:
        raise InvalidArgumentError("minimize_potential needs objective=potential or potential_order_m")
    return PackingOptimizer(config).minimize()


def optimize(config: OptimizerConfig) -> OptimizerResult:
    """Dispatch on the configured objective."""
    if config.objective is ObjectiveKind.COHERENCE:
        return minimize_coherence(config)
    return minimize_potential(config)


def gradient_check(config: OptimizerConfig, probe_seed: int = 0, probe=None) -> GradientCheckReport:
    """
    Compare analytic gradients with central finite differences.

    The relative error is normwise: max_i |a_i − f_i| / max_i |a_i|. Every
    exponent of the smoothing schedule is checked for the coherence objective.

    Args:
        config: Objective, field and shape to check
        probe_seed: Seed for the random probe configuration
        probe: Explicit probe (n×d), e.g. an orthonormal basis

    Returns:
        GradientCheckReport including the Riemannian gradient norm at the probe
        (for the last exponent of the schedule with the coherence objective)
    """
    if probe is None:
        x = unit_vectors(make_rng(probe_seed, STREAM_PROBE), config.n, config.d, config.field)
    else:
        x = np.array(probe, dtype=complex)
        if x.shape != (config.n, config.d):
            raise InvalidArgumentError(f"probe must have shape ({config.n}, {config.d}), got {x.shape}")
    if config.field is FieldTag.REAL:
        x = x.real.copy()

    if config.objective is ObjectiveKind.COHERENCE:
        checks = [(p, lambda y, p=p: smoothed_coherence(y, p)[:2]) for p in config.p_schedule]
    else:
        checks = [(None, lambda y: potential(y, config.order))]

    entries = []
    gradient_norm = 0.0
    for p, func in checks:
        analytic = func(x)[1]
        numeric = finite_difference_gradient(lambda y: func(y)[0], x, GRADIENT_CHECK_STEP)
        scale = float(np.max(np.abs(analytic)))
        error = float(np.max(np.abs(analytic - numeric)))
        relative = error / scale if scale > 0.0 else error
        entries.append(GradientCheckEntry(p=p, max_rel_error=relative, passed=relative <= GRADIENT_CHECK_TOL))
        gradient_norm = float(np.linalg.norm(project_tangent(x, analytic)))
        logger.debug(f"gradient check p={p}: relative error {relative:.3e}")

    return GradientCheckReport(
        objective=config.objective,
        field=config.field,
        n=config.n,
        d=config.d,
        step=GRADIENT_CHECK_STEP,
        tolerance=GRADIENT_CHECK_TOL,
        entries=entries,
        gradient_norm=gradient_norm,
    )
