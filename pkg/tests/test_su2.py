import math

import hypothesis.strategies as st
import numpy as np
import pytest
from hypothesis import given, settings

from spinframe.core.exceptions import DomainError
from spinframe.physics.su2 import (
    IDENTITY,
    SPIN_DOWN,
    SPIN_UP,
    Spinor,
    Unitary2,
    apply,
    basis_state,
    dagger,
    multiply,
    product,
    rot_x,
    rot_y,
    rot_z,
    transition_probability,
)

angles = st.floats(min_value=-50.0, max_value=50.0, allow_nan=False, allow_infinity=False)


def test_rot_z_special_values():
    """rot_z(0) = I, rot_z(2π) = −I (dupla cobertura), rot_z(π) = diag(−i, i)"""
    assert rot_z(0.0).allclose(IDENTITY)
    assert rot_z(2 * math.pi).allclose(Unitary2(-np.eye(2)))
    assert rot_z(math.pi).allclose(Unitary2(np.diag([-1j, 1j])))


def test_rot_y_special_values():
    """rot_y(0) = I, rot_y(π)|↑⟩ = |↓⟩, rot_y(π/2) real com √2/2"""
    assert rot_y(0.0).allclose(IDENTITY)

    flipped = apply(rot_y(math.pi), SPIN_UP)
    assert abs(flipped.up) == pytest.approx(0.0, abs=1e-15)
    assert abs(flipped.down) == pytest.approx(1.0, abs=1e-15)

    h = math.sqrt(2) / 2
    assert rot_y(math.pi / 2).allclose(Unitary2([[h, -h], [h, h]]))


def test_rot_x_flips_spin_up():
    assert transition_probability(SPIN_DOWN, rot_x(math.pi), SPIN_UP) == pytest.approx(1.0)


@pytest.mark.parametrize("constructor", [rot_x, rot_y, rot_z])
@pytest.mark.parametrize("bad", [math.nan, math.inf, -math.inf])
def test_rotations_reject_non_finite_angles(constructor, bad):
    with pytest.raises(DomainError):
        constructor(bad)


@settings(max_examples=200, deadline=None)
@given(a=angles, b=angles)
def test_group_law(a, b):
    """R_j(a)·R_j(b) = R_j(a+b)"""
    for constructor in (rot_x, rot_y, rot_z):
        assert multiply(constructor(a), constructor(b)).allclose(constructor(a + b), tol=1e-12)


@settings(max_examples=200, deadline=None)
@given(a=angles, b=angles, c=angles)
def test_products_are_unitary(a, b, c):
    u = product(rot_z(a), rot_y(b), rot_x(c), rot_z(-b))
    assert u.is_unitary(tol=1e-12)
    assert abs(u.det()) == pytest.approx(1.0, abs=1e-12)


def test_double_cover_of_rot_y():
    assert multiply(rot_y(math.pi), rot_y(math.pi)).allclose(Unitary2(-np.eye(2)))


@settings(max_examples=100, deadline=None)
@given(a=angles)
def test_dagger_is_inverse_rotation(a):
    assert dagger(rot_z(a)).allclose(rot_z(-a), tol=1e-12)
    assert dagger(rot_y(a)).allclose(rot_y(-a), tol=1e-12)
    assert multiply(dagger(rot_y(a)), rot_y(a)).allclose(IDENTITY, tol=1e-12)


def test_identity_products():
    u = product(rot_z(0.3), rot_y(1.1))
    assert multiply(IDENTITY, u).allclose(u)
    assert dagger(IDENTITY).allclose(IDENTITY)
    assert product().allclose(IDENTITY)


def test_product_order_is_left_to_right():
    a, b = rot_y(0.4), rot_z(1.3)
    assert product(a, b).allclose(Unitary2(a.entries @ b.entries))
    assert (a @ b).allclose(product(a, b))


def test_transition_probability_examples():
    assert transition_probability(SPIN_UP, IDENTITY, SPIN_UP) == pytest.approx(1.0)
    assert transition_probability(SPIN_DOWN, IDENTITY, SPIN_UP) == pytest.approx(0.0)
    assert transition_probability(SPIN_DOWN, rot_y(math.pi / 2), SPIN_UP) == pytest.approx(0.5)


def test_transition_probability_rejects_unnormalized():
    with pytest.raises(DomainError):
        transition_probability(Spinor(1.0, 1.0), IDENTITY, SPIN_UP)
    with pytest.raises(DomainError):
        transition_probability(SPIN_UP, IDENTITY, Spinor(0.0, 0.0))


amplitudes = st.complex_numbers(max_magnitude=10, allow_nan=False, allow_infinity=False)


@settings(max_examples=100, deadline=None)
@given(a=angles, b=angles, up=amplitudes, down=amplitudes)
def test_probabilities_sum_to_one(a, b, up, down):
    """Σ_m |⟨m|U|ψ⟩|² = 1 na base {|↑⟩, |↓⟩}"""
    if abs(up) ** 2 + abs(down) ** 2 < 1e-6:
        return
    psi = Spinor(up, down).normalize()
    u = product(rot_y(a), rot_z(b))
    total = transition_probability(SPIN_UP, u, psi) + transition_probability(SPIN_DOWN, u, psi)
    assert total == pytest.approx(1.0, abs=1e-12)


def test_spinor_helpers():
    psi = Spinor(3.0, 4.0j)
    assert psi.norm2 == pytest.approx(25.0)
    assert not psi.is_normalized()

    unit = psi.normalize()
    assert unit.is_normalized()
    assert unit.inner(unit) == pytest.approx(1.0)
    assert SPIN_UP.inner(SPIN_DOWN) == 0

    with pytest.raises(DomainError):
        Spinor(0.0, 0.0).normalize()
    with pytest.raises(DomainError):
        Spinor(math.nan, 0.0)


def test_basis_state_labels():
    assert basis_state(0.5) is SPIN_UP
    assert basis_state(-0.5) is SPIN_DOWN
    with pytest.raises(DomainError):
        basis_state(1.0)


def test_matrix_validation():
    with pytest.raises(DomainError):
        Unitary2(np.eye(3))
    with pytest.raises(DomainError):
        Unitary2([[math.inf, 0], [0, 1]])


def test_entries_are_read_only():
    u = rot_z(0.5)
    with pytest.raises(ValueError):
        u.entries[0, 0] = 2.0


def test_equals_up_to_phase():
    u = product(rot_y(0.7), rot_z(1.9))
    assert Unitary2(np.exp(0.37j) * u.entries).equals_up_to_phase(u)
    assert not rot_y(0.7).equals_up_to_phase(rot_y(0.8))
