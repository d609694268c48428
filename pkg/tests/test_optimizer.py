import math

import numpy as np
import pytest

from welchkit.errors import InvalidArgumentError
from welchkit.models import FieldTag, ObjectiveKind, OptimizerConfig
from welchkit.services.frames import builtin
from welchkit.services.measure import make_rng, unit_vectors
from welchkit.services.metrics import equiangularity
from welchkit.services.optimizer import (
    finite_difference_gradient,
    gradient_check,
    minimize_coherence,
    minimize_potential,
    optimize,
    potential,
    project_tangent,
    retract,
    smoothed_coherence,
)


def _config(**kwargs) -> OptimizerConfig:
    return OptimizerConfig.build(**kwargs)


def test_config_validation():
    """Test invalid optimizer configs raise InvalidArgumentError."""
    bad = [
        {"n": 2, "d": 3},
        {"n": 3, "d": 2, "restarts": 0},
        {"n": 3, "d": 2, "p_schedule": []},
        {"n": 3, "d": 2, "p_schedule": [4.0, 2.0]},
        {"n": 3, "d": 2, "p_schedule": [1.0, 2.0]},
        {"n": 3, "d": 2, "step": 0.0},
        {"n": 3, "d": 2, "colour": "red"},
    ]
    for kwargs in bad:
        with pytest.raises(InvalidArgumentError):
            OptimizerConfig.build(**kwargs)

    config = _config(n=4, d=2, objective="potential_order_m", m=2)
    assert config.order == 2
    assert _config(n=4, d=2, objective="potential", m=2).order == 1


def test_entry_points_check_the_objective():
    """Test each entry point rejects the other objective."""
    with pytest.raises(InvalidArgumentError):
        minimize_coherence(_config(n=3, d=2, objective="potential"))
    with pytest.raises(InvalidArgumentError):
        minimize_potential(_config(n=3, d=2))
    with pytest.raises(InvalidArgumentError):
        minimize_coherence(_config(n=1, d=1))


def test_smoothed_coherence_brackets_the_max():
    """Test M² ≤ f_p ≤ C(n,2)^{1/p}·M²."""
    x = unit_vectors(make_rng(1), 6, 3, FieldTag.COMPLEX)
    pairs = 15
    for p in (2.0, 8.0, 64.0):
        value, _, gmax = smoothed_coherence(x, p)
        assert gmax <= value <= gmax * pairs ** (1.0 / p) * (1.0 + 1e-12)


def test_tangent_projection_and_retraction():
    """Test tangent directions are orthogonal to each row and retraction renormalizes."""
    rng = make_rng(2)
    x = unit_vectors(rng, 5, 3, FieldTag.COMPLEX)
    grad = rng.standard_normal((5, 3)) + 1j * rng.standard_normal((5, 3))
    tangent = project_tangent(x, grad)
    np.testing.assert_allclose(np.real(np.sum(tangent * x.conj(), axis=1)), 0.0, atol=1e-14)

    moved = retract(x - 0.3 * tangent)
    np.testing.assert_allclose(np.linalg.norm(moved, axis=1), 1.0, atol=1e-12)


def test_finite_difference_gradient_of_quadratic():
    """Test the finite-difference helper on f = Σ|x|²."""
    x = np.array([[1.0 + 2.0j, -0.5j]])
    numeric = finite_difference_gradient(lambda y: float(np.sum(np.abs(y) ** 2)), x)
    np.testing.assert_allclose(numeric, 2.0 * x, atol=1e-8)


@pytest.mark.parametrize("field", [FieldTag.REAL, FieldTag.COMPLEX])
@pytest.mark.parametrize("objective,m", [("coherence", 1), ("potential", 1), ("potential_order_m", 2)])
def test_gradient_check(field, objective, m):
    """Test analytic gradients against central differences for both fields."""
    config = _config(n=4, d=2, field=field, objective=objective, m=m)
    report = gradient_check(config, probe_seed=3)

    # Verify results
    assert report.passed, [entry.max_rel_error for entry in report.entries]
    expected_entries = len(config.p_schedule) if objective == "coherence" else 1
    assert len(report.entries) == expected_entries
    assert report.step == 1e-6


def test_gradient_check_examples():
    """Test the documented gradient check cases."""
    assert gradient_check(_config(n=3, d=2, field="R", objective="potential")).passed
    report = gradient_check(_config(n=4, d=2, field="C", p_schedule=[4.0]))
    assert report.passed
    assert report.entries[0].p == 4.0


@pytest.mark.parametrize("m", [1, 2])
def test_onb_is_a_critical_point_of_the_potential(m):
    """Test the Riemannian gradient vanishes at an orthonormal basis."""
    objective = "potential" if m == 1 else "potential_order_m"
    config = _config(n=3, d=3, objective=objective, m=m)
    report = gradient_check(config, probe=np.eye(3))
    assert report.gradient_norm <= 1e-8

    with pytest.raises(InvalidArgumentError):
        gradient_check(config, probe=np.eye(2))


def test_potential_gradient_direction():
    """Test the potential gradient is 4·G·X at first order."""
    x = unit_vectors(make_rng(4), 4, 2, FieldTag.COMPLEX)
    value, grad = potential(x, 1)
    g = x @ x.conj().T
    assert value == pytest.approx(float(np.sum(np.abs(g) ** 2)), rel=1e-14)
    np.testing.assert_allclose(grad, 4.0 * g @ x, atol=1e-12)


def test_mercedes_benz_frame():
    """Test three lines in R² reach coherence 1/2."""
    result = minimize_coherence(_config(n=3, d=2, field="R", seed=1, restarts=4, max_iters=6000))

    # Verify results
    assert result.achieved == pytest.approx(0.5, abs=1e-3)
    assert result.certificate.value == pytest.approx(0.5, rel=1e-12)
    assert result.achieved >= result.certificate.value - 1e-6
    assert np.all(result.frame.vectors.imag == 0.0)
    assert result.frame.is_normalized
    assert len(result.iterations_used) == 4


def test_sic_by_coherence():
    """Test four vectors in C² reach 1/√3."""
    result = minimize_coherence(_config(n=4, d=2, field="C", seed=2, restarts=4, max_iters=12000))
    assert result.achieved == pytest.approx(1.0 / math.sqrt(3.0), abs=1e-3)
    assert result.certificate.value == pytest.approx(1.0 / math.sqrt(3.0), rel=1e-12)
    assert result.achieved >= result.certificate.value - 1e-6
    assert result.coherence == pytest.approx(result.achieved, rel=1e-12)


def test_orthonormal_basis_by_coherence():
    """Test n = d reaches zero coherence."""
    result = optimize(_config(n=3, d=3, field="R", seed=0, restarts=1, max_iters=6000))
    assert result.achieved <= 1e-6
    assert result.certificate.value == 0.0


def test_tight_frame_by_potential():
    """Test five vectors in C² reach FP = 25/2 and are tight."""
    result = minimize_potential(_config(n=5, d=2, field="C", objective="potential", seed=3,
                                        restarts=2, max_iters=20000))

    # Verify results
    assert result.achieved == pytest.approx(12.5, abs=1e-6)
    assert result.certificate.name == "welch_sum"
    assert result.certificate.value == 12.5
    assert result.tight
    assert result.potential == pytest.approx(result.achieved, rel=1e-12)


def test_onb_by_potential():
    """Test n = d reaches FP = d."""
    result = optimize(_config(n=3, d=3, objective="potential", seed=5, restarts=1, max_iters=20000))
    assert result.achieved == pytest.approx(3.0, abs=1e-6)
    assert result.tight


def test_sic_by_second_order_potential():
    """Test the order-2 potential of four vectors in C² reaches 16/3 at a SIC."""
    result = minimize_potential(_config(n=4, d=2, field="C", objective="potential_order_m", m=2,
                                        seed=4, restarts=8, max_iters=20000))
    assert result.order == 2
    assert result.achieved == pytest.approx(16.0 / 3.0, abs=1e-4)
    assert result.certificate.value == pytest.approx(16.0 / 3.0, rel=1e-15)

    flag, gamma, _ = equiangularity(result.frame, tol=1e-3)
    assert flag
    assert gamma ** 2 == pytest.approx(1.0 / 3.0, abs=1e-3)

    sic_value = potential(np.array(builtin("sic_d2").vectors), 2)[0]
    assert result.achieved == pytest.approx(sic_value, abs=1e-4)


def test_runs_are_deterministic():
    """Test identical configs reproduce identical results, with or without threads."""
    kwargs = {"n": 5, "d": 3, "field": "C", "seed": 11, "restarts": 3, "max_iters": 600}
    first = optimize(_config(**kwargs))
    second = optimize(_config(**kwargs))
    threaded = optimize(_config(jobs=3, **kwargs))

    # Verify results
    assert first.achieved == second.achieved == threaded.achieved
    assert np.array_equal(first.frame.vectors, second.frame.vectors)
    assert np.array_equal(first.frame.vectors, threaded.frame.vectors)
    assert first.restart_values == threaded.restart_values
    assert first.best_restart == min(range(3), key=lambda i: (first.restart_values[i], i))


def test_objective_kind_round_trip():
    """Test configs accept objective names as strings."""
    config = _config(n=3, d=2, objective="potential")
    assert config.objective is ObjectiveKind.POTENTIAL
    assert config.field is FieldTag.COMPLEX
