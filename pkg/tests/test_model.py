import math

import numpy as np
import pytest
from pydantic import ValidationError

from spinframe.core.exceptions import DegenerateDetuningError, DomainError
from spinframe.physics.model import derive, frequencies, from_frequencies
from spinframe.schemas.field import FieldParams


def test_static_transverse_field():
    """ω̄ = 1, ϑ = π/2, ω = 0 -> ω₀ = 0, ω₁ = 1, Ω = 1, Θ = π/2, Γ = 0"""
    d = derive(FieldParams(gamma=1.0, H=1.0, theta=math.pi / 2, omega=0.0))

    assert d.omega0 == pytest.approx(0.0, abs=1e-15)
    assert d.omega1 == pytest.approx(1.0)
    assert d.big_omega == pytest.approx(1.0)
    assert d.theta_cap == pytest.approx(math.pi / 2)
    assert d.gamma_cap == pytest.approx(0.0, abs=1e-15)


def test_resonance_sets_rabi_to_transverse_component():
    d = frequencies(1.3, 0.2, 1.3)
    assert d.big_omega == pytest.approx(0.2, rel=1e-12)
    assert d.theta_cap == pytest.approx(math.pi / 2, rel=1e-12)


def test_generic_derivation():
    """ω̄ = 2, ϑ = π/3, ω = 1.7"""
    d = derive(FieldParams(gamma=0.5, H=4.0, theta=math.pi / 3, omega=1.7))

    assert d.omega_bar == pytest.approx(2.0)
    assert d.omega0 == pytest.approx(1.0, rel=1e-12)
    assert d.omega1 == pytest.approx(math.sqrt(3), rel=1e-12)
    assert d.big_omega == pytest.approx(math.sqrt(0.49 + 3), rel=1e-12)
    assert d.theta_cap == pytest.approx(math.atan2(math.sqrt(3), -0.7), rel=1e-12)
    assert d.gamma_cap == pytest.approx(d.theta_cap - math.pi / 3, rel=1e-12)


def test_degenerate_detuning():
    """ω = ω₀ com ω₁ = 0 deixa Θ indefinido"""
    with pytest.raises(DegenerateDetuningError):
        derive(FieldParams(gamma=1.0, H=2.0, theta=0.0, omega=2.0))
    with pytest.raises(DomainError):
        frequencies(1.0, 0.0, 1.0)


def test_derived_invariants(rng):
    for _ in range(1000):
        params = FieldParams(
            gamma=float(rng.uniform(0.1, 3)),
            H=float(rng.uniform(0.1, 5)),
            theta=float(rng.uniform(0, math.pi)),
            omega=float(rng.uniform(0, 10)),
        )
        d = derive(params)

        assert d.omega_bar**2 == pytest.approx(d.omega0**2 + d.omega1**2, rel=1e-12)
        assert d.big_omega**2 == pytest.approx((d.omega0 - d.omega) ** 2 + d.omega1**2, rel=1e-12)
        assert math.sin(d.theta_cap) == pytest.approx(d.omega1 / d.big_omega, abs=1e-12)
        assert math.cos(d.theta_cap) == pytest.approx((d.omega0 - d.omega) / d.big_omega, abs=1e-12)
        assert 0 <= d.theta_cap <= math.pi
        assert d.omega1 >= 0
        if abs(math.cos(d.theta_cap)) > 1e-8:
            assert math.tan(d.theta_cap) * (d.omega0 - d.omega) == pytest.approx(
                d.omega1, rel=1e-10, abs=1e-10
            )


@pytest.mark.parametrize(
    "omega0,omega1,omega,H,theta",
    [
        (1.0, 0.0, 0.0, 1.0, 0.0),
        (0.0, 1.0, 0.5, 1.0, math.pi / 2),
        (3.0, 4.0, 2.0, 5.0, math.atan2(4, 3)),
    ],
)
def test_from_frequencies_examples(omega0, omega1, omega, H, theta):
    params = from_frequencies(omega0, omega1, omega)
    assert params.gamma == 1.0
    assert params.H == pytest.approx(H)
    assert params.theta == pytest.approx(theta)

    d = derive(params)
    assert d.omega0 == pytest.approx(omega0, abs=1e-12)
    assert d.omega1 == pytest.approx(omega1, abs=1e-12)


def test_round_trip(rng):
    for _ in range(1000):
        omega0 = float(rng.uniform(-10, 10))
        omega1 = float(rng.uniform(0, 10))
        omega = float(rng.uniform(0, 10))
        d = frequencies(omega0, omega1, omega)
        scale = math.hypot(omega0, omega1)

        assert d.omega0 == pytest.approx(omega0, abs=1e-12 * scale)
        assert d.omega1 == pytest.approx(omega1, abs=1e-12 * scale)
        assert d.omega == omega


def test_negative_zero_transverse_component():
    assert from_frequencies(-1.0, -0.0, 0.3).theta == pytest.approx(math.pi)


@pytest.mark.parametrize(
    "args",
    [
        (1.0, -0.1, 1.0),
        (1.0, 0.5, -1.0),
        (0.0, 0.0, 1.0),
        (math.nan, 0.5, 1.0),
        (1.0, math.inf, 1.0),
    ],
)
def test_from_frequencies_rejects(args):
    with pytest.raises(DomainError):
        from_frequencies(*args)


@pytest.mark.parametrize(
    "fields",
    [
        {"H": -1.0, "theta": 0.5, "omega": 1.0},
        {"H": 1.0, "theta": 3.5, "omega": 1.0},
        {"H": 1.0, "theta": 0.5, "omega": -1.0},
        {"gamma": 0.0, "H": 1.0, "theta": 0.5, "omega": 1.0},
        {"H": np.nan, "theta": 0.5, "omega": 1.0},
    ],
)
def test_field_params_invariants(fields):
    with pytest.raises(ValidationError):
        FieldParams(**fields)


def test_metadata_order():
    d = frequencies(1.0, 0.5, 1.0)
    assert list(d.as_metadata()) == [
        "omega0",
        "omega1",
        "omega",
        "omega_bar",
        "theta",
        "big_omega",
        "theta_cap",
        "gamma_cap",
    ]
