import math

import numpy as np
import pytest

from cqdirac.algebra import AT, CQ, I, J, K, isclose, max_coeff_diff, quadric, random_cq
from cqdirac.errors import NotNormal, ZeroState
from cqdirac.lagrangian import PotentialField
from cqdirac.relativity import MinkowskiVector, random_direction
from cqdirac.spin import (
    QuaternionGauge,
    RestFrameState,
    SpinOperator,
    U1Gauge,
    apply_quaternion_gauge,
    apply_spin,
    apply_u1_gauge,
    compensating_field,
    decompose_normal,
    decompose_psi0,
    fibonacci_directions,
    has_spin_direction,
    ladder,
    local_gauge_obstruction_demo,
    min_eigen_residual,
    no_escape_floor,
    spin_basis,
    subspace_residual,
)
from cqdirac.wave import LinearScalarFunction, PlaneWaveSpinorField, dirac_residual

RNG = np.random.default_rng(99)

SZ = SpinOperator((0.0, 0.0, 1.0))


def test_basis_eigenvalues_and_nullity():
    for state in spin_basis():
        acted = apply_spin(SZ, state.amplitude)
        assert isclose(acted, state.m_z * state.amplitude, tol=1e-12)
        assert abs(quadric(state.amplitude)) < 1e-14


def test_named_eigenstates():
    up = CQ(1) + AT * K
    assert isclose(apply_spin(SZ, up), 0.5 * up)
    down = AT * I + J
    assert isclose(apply_spin(SZ, down), -0.5 * down)


def test_spin_squared_is_three_quarters():
    ops = [SpinOperator(tuple(v)) for v in np.eye(3)]
    for _ in range(20):
        psi = random_cq(RNG)
        total = CQ()
        for op in ops:
            total = total + apply_spin(op, apply_spin(op, psi))
        assert isclose(total, 0.75 * psi, tol=1e-12)


def test_spin_commutators():
    ops = [SpinOperator(tuple(v)) for v in np.eye(3)]
    psi = random_cq(RNG)
    for a, b, c in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
        comm = apply_spin(ops[a], apply_spin(ops[b], psi)) - apply_spin(ops[b], apply_spin(ops[a], psi))
        assert isclose(comm, AT * apply_spin(ops[c], psi), tol=1e-12)


def test_ladder_on_basis():
    basis = spin_basis()
    # Highest weight of the first subspace is annihilated.
    assert max_coeff_diff(ladder("+", basis[0].amplitude), CQ()) < 1e-14
    # Raising the lowered state stays inside the first subspace.
    raised = ladder("+", basis[2].amplitude)
    assert float(subspace_residual(raised.coeffs, 0)) < 1e-12
    assert isclose(apply_spin(SZ, raised), 0.5 * raised, tol=1e-12)


def test_casimir_identity():
    for _ in range(20):
        psi = random_cq(RNG)
        value = ladder("-", ladder("+", psi)) + apply_spin(SZ, apply_spin(SZ, psi)) + apply_spin(SZ, psi)
        assert isclose(value, 0.75 * psi, tol=1e-12)


def test_right_multiplication_relations():
    basis = spin_basis()
    assert isclose(basis[0].amplitude * I, basis[1].amplitude)
    assert isclose(basis[2].amplitude * I, basis[3].amplitude)


def test_right_multiplication_stays_in_span():
    basis = spin_basis()
    matrix = np.stack([s.amplitude.coeffs for s in basis])
    for unit in (I, J, K):
        for state in basis:
            coeffs = (state.amplitude * unit).coeffs
            sol, res, *_ = np.linalg.lstsq(matrix.T, coeffs, rcond=None)
            assert np.linalg.norm(matrix.T @ sol - coeffs) < 1e-12


def test_has_spin_direction_examples():
    n, sign = has_spin_direction(CQ(1) + AT * K)
    np.testing.assert_allclose(n, [0, 0, 1], atol=1e-12)
    assert sign == 0.5
    assert has_spin_direction(CQ(1)) is None
    with pytest.raises(ZeroState):
        has_spin_direction(CQ())


def test_has_spin_direction_standard_form_family():
    # psi = a + @ d m' with a^2 = d^2 is null; the constructive proof picks
    # n = +-m', and the eigen-relation must hold for the returned direction.
    for _ in range(20):
        mvec = random_direction(RNG)
        mprime = CQ(0, *mvec)
        a = float(RNG.standard_normal())
        psi = CQ(a) + a * AT * mprime
        assert abs(quadric(psi)) < 1e-10
        n, sign = has_spin_direction(psi)
        assert abs(abs(float(np.dot(n, mvec))) - 1.0) < 1e-9
        op = SpinOperator(tuple(n))
        assert isclose(apply_spin(op, psi), sign * psi, tol=1e-9)


def test_has_spin_direction_random_null_states():
    for _ in range(50):
        u = RNG.standard_normal(2) + 1j * RNG.standard_normal(2)
        v = RNG.standard_normal(2) + 1j * RNG.standard_normal(2)
        from cqdirac.algebra import from_matrix

        psi = from_matrix(np.outer(u, v))
        n, sign = has_spin_direction(psi)
        op = SpinOperator(tuple(n))
        assert isclose(apply_spin(op, psi), sign * psi, tol=1e-9)


def test_non_null_states_have_no_direction():
    directions = fibonacci_directions(2000)
    for _ in range(10):
        psi = random_cq(RNG)
        if abs(quadric(psi)) < 1e-2:
            continue
        assert has_spin_direction(psi) is None
        assert min_eigen_residual(psi, directions) > 1e-6


def test_decompose_psi0():
    coeffs = decompose_psi0(CQ(1))
    np.testing.assert_allclose(coeffs, [0.5, 0, 0, 0.5j], atol=1e-14)
    basis = spin_basis()
    np.testing.assert_allclose(decompose_psi0(basis[0].amplitude), [1, 0, 0, 0], atol=1e-14)
    for _ in range(20):
        psi = random_cq(RNG)
        rebuilt = CQ()
        for coeff, state in zip(decompose_psi0(psi), basis):
            rebuilt = rebuilt + complex(coeff) * state.amplitude
        assert isclose(rebuilt, psi, tol=1e-12)


def test_quaternion_gauge_example():
    gauge = QuaternionGauge((1.0, 0.0, 0.0), math.pi / 2)
    assert isclose(gauge.element, -1 * I, tol=1e-12)
    moved = apply_quaternion_gauge(gauge, CQ(1) + AT * K)
    assert isclose(moved, -1 * (I + AT * J), tol=1e-12)
    # The gauged state lands in the second subspace.
    assert float(subspace_residual(moved.coeffs, 1)) < 1e-12


def test_quaternion_gauge_identity_and_invariants():
    identity = QuaternionGauge((0.0, 1.0, 0.0), 0.0)
    psi = random_cq(RNG)
    assert isclose(apply_quaternion_gauge(identity, psi), psi)
    for _ in range(20):
        gauge = QuaternionGauge(tuple(random_direction(RNG)), float(RNG.uniform(0, 2 * math.pi)))
        assert abs(quadric(psi * gauge.element) - quadric(psi)) < 1e-10 * max(1.0, abs(quadric(psi)))
        up = spin_basis()[0].amplitude * gauge.element
        assert isclose(apply_spin(SZ, up), 0.5 * up, tol=1e-12)


def test_quaternion_gauge_on_rest_frame_state():
    state = RestFrameState(CQ(1) + AT * K)
    gauge = QuaternionGauge((1.0, 0.0, 0.0), math.pi / 2)
    moved = apply_quaternion_gauge(gauge, state)
    assert isclose(moved.amplitude, -1 * (I + AT * J), tol=1e-12)
    # Gauging preserves the Dirac solution property.
    for r in dirac_residual(moved.field):
        assert max_coeff_diff(r, CQ()) < 1e-12


def test_u1_gauge_constant_alpha():
    field = RestFrameState(random_cq(RNG)).field
    A = PotentialField(CQ(0.4j, 0.1, -0.2, 0.3))
    gauge = U1Gauge(1.5, LinearScalarFunction(MinkowskiVector(), offset=0.8))
    moved, A2 = apply_u1_gauge(gauge, field, A)
    factor = complex(np.exp(-1j * 1.5 * 0.8))
    assert isclose(moved.psi1, field.psi1 * factor, tol=1e-12)
    assert moved.momentum == field.momentum
    assert isclose(A2.constant, A.constant)


def test_u1_gauge_preserves_coupled_residual():
    for _ in range(20):
        field = PlaneWaveSpinorField(
            random_cq(RNG), random_cq(RNG), MinkowskiVector(*RNG.standard_normal(4)), -1, 1.0
        )
        A = PotentialField(CQ(1j * RNG.standard_normal(), *RNG.standard_normal(3)))
        e = float(RNG.uniform(-2, 2))
        gauge = U1Gauge(e, LinearScalarFunction(MinkowskiVector(*RNG.standard_normal(4)), float(RNG.standard_normal())))
        moved, A2 = apply_u1_gauge(gauge, field, A)
        factor = complex(np.exp(-1j * e * gauge.alpha.offset))
        for rb, ra in zip(dirac_residual(field, A.constant, e), dirac_residual(moved, A2.constant, e)):
            assert isclose(ra, rb * factor, tol=1e-10)


def test_decompose_normal_examples():
    c, q = decompose_normal(AT)
    assert abs(c - 1j) < 1e-12
    assert isclose(q, CQ(1))
    c, q = decompose_normal(I)
    assert abs(c - 1.0) < 1e-12
    assert isclose(q, I)


def test_decompose_normal_round_trips():
    for _ in range(50):
        theta = float(RNG.uniform(0, 2 * math.pi))
        beta = float(RNG.uniform(0, 2 * math.pi))
        n = CQ(0, *random_direction(RNG))
        sigma = CQ(complex(np.exp(1j * theta))) * (CQ(math.cos(beta)) + math.sin(beta) * n)
        c, q = decompose_normal(sigma)
        assert isclose(c * q, sigma, tol=1e-10)
        assert abs(abs(c) - 1.0) < 1e-10
        assert abs(float(np.linalg.norm(q.coeffs)) - 1.0) < 1e-10
        assert np.max(np.abs(q.coeffs.imag)) < 1e-10


def test_decompose_normal_rejects_non_normal():
    with pytest.raises(NotNormal):
        decompose_normal(CQ(2))
    with pytest.raises(NotNormal):
        decompose_normal(CQ(1, 0.5))


def test_compensating_field_matches_gauge_term():
    # B psi = i psi n by construction, for each individual state.
    n = CQ(0, *random_direction(RNG))
    for _ in range(10):
        psi = random_cq(RNG)
        if abs(quadric(psi)) < 1e-3:
            continue
        b = compensating_field(psi, n)
        assert isclose(b * psi, I * psi * n, tol=1e-9)


def test_obstruction_demo():
    report = local_gauge_obstruction_demo(seed=3)
    rows = dict(report.rows)
    assert rows["identical pair"] == 0.0
    assert rows["complex-scaled pair"] < 1e-12
    generic = [v for label, v in report.rows if label.startswith("generic")]
    assert len(generic) == 8
    assert all(v > 1e-3 for v in generic)
    assert report.generic_floor == min(generic)


def test_no_escape_floor_positive():
    # The analytic floor for psi = 1 is 1/sqrt(2); a coarse grid must stay
    # well above the acceptance threshold and never exceed the exact value.
    floor = no_escape_floor(grid=(8, 8, 8, 16))
    assert 1e-3 < floor <= 1 / math.sqrt(2) + 1e-9


def test_subspace_residual_on_basis():
    basis = spin_basis()
    assert float(subspace_residual(basis[0].amplitude.coeffs, 0)) < 1e-12
    assert abs(float(subspace_residual(basis[0].amplitude.coeffs, 1)) - 1.0) < 1e-12


def test_rest_frame_state_field():
    psi = random_cq(RNG)
    particle = RestFrameState(psi, "particle", 2.0).field
    assert isclose(particle.psi2, psi)
    anti = RestFrameState(psi, "antiparticle", 2.0).field
    assert isclose(anti.psi2, -psi)
    for state in (particle, anti):
        for r in dirac_residual(state):
            assert max_coeff_diff(r, CQ()) < 1e-12
