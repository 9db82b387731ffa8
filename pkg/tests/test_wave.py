import math

import numpy as np
import pytest

from cqdirac.algebra import AT, CQ, I, J, K, isclose, max_coeff_diff, quat_conj, random_cq, trace
from cqdirac.errors import MasslessUnsupported, OffShell, UnsupportedField
from cqdirac.relativity import MinkowskiVector, apply_lorentz, random_direction, rotor_boost, rotor_rotation
from cqdirac.wave import (
    ANTIPARTICLE,
    PARTICLE,
    LinearScalarFunction,
    PlaneWaveField,
    PlaneWaveScalarField,
    PlaneWaveSpinorField,
    apply_D,
    apply_Dbar,
    coordinate_field,
    dirac_residual,
    is_on_shell,
    klein_gordon_residual,
    make_solution,
    on_shell_momentum,
    transform_spinor,
)

RNG = np.random.default_rng(2024)


def fd_operator(field, q, h=1e-5, conjugated=False):
    """Central-difference oracle, assembled from the operator definition."""

    def value(point):
        v = field.evaluate(point) if hasattr(field, "evaluate") else field(point)
        return v if isinstance(v, CQ) else CQ(v)

    units = [AT, I, J, K]
    signs = [1.0] * 4 if conjugated else [1.0, -1.0, -1.0, -1.0]
    out = CQ()
    for axis, (unit, s) in enumerate(zip(units, signs)):
        delta = np.zeros(4)
        delta[axis] = h
        plus = MinkowskiVector(*(q.components + delta))
        minus = MinkowskiVector(*(q.components - delta))
        out = out + s * unit * ((value(plus) - value(minus)) / (2 * h))
    return out


def test_coordinate_divergence_identity():
    assert isclose(-1 * apply_Dbar(coordinate_field()), CQ(4))


def test_derivative_of_constant_vanishes():
    const = LinearScalarFunction(MinkowskiVector(), offset=3.7)
    assert isclose(apply_D(const), CQ())


def test_linear_function_derivative():
    a = MinkowskiVector(1.0, -0.5, 2.0, 0.25)
    alpha = LinearScalarFunction(a, offset=1.0)
    expected = AT * a.t + I * a.x + J * a.y + K * a.z
    assert isclose(apply_D(alpha), expected)
    q = MinkowskiVector(0.3, -0.1, 0.7, 0.2)
    assert isclose(fd_operator(alpha, q), expected, tol=1e-7)


def test_plane_wave_derivative_matches_finite_differences():
    for _ in range(20):
        p = MinkowskiVector(*RNG.standard_normal(4))
        sign = PARTICLE if RNG.random() < 0.5 else ANTIPARTICLE
        field = PlaneWaveField(random_cq(RNG), p, sign)
        q = MinkowskiVector(*RNG.standard_normal(4))
        analytic = apply_D(field).evaluate(q)
        numeric = fd_operator(field, q)
        assert max_coeff_diff(analytic, numeric) < 1e-8
        analytic_bar = apply_Dbar(field).evaluate(q)
        numeric_bar = fd_operator(field, q, conjugated=True)
        assert max_coeff_diff(analytic_bar, numeric_bar) < 1e-8


def test_unsupported_field_rejected():
    with pytest.raises(UnsupportedField):
        apply_D(lambda q: 0.0)


def test_klein_gordon_zero_iff_on_shell():
    m = 1.0
    assert abs(klein_gordon_residual(PlaneWaveScalarField(1.0, MinkowskiVector(t=m)), m)) < 1e-14
    e = 2.0
    res = klein_gordon_residual(PlaneWaveScalarField(1.0, MinkowskiVector(t=e)), m)
    assert abs(res - (m * m - e * e)) < 1e-12


def test_klein_gordon_residual_lorentz_invariant():
    m = 1.0
    p = MinkowskiVector(*RNG.standard_normal(4))
    before = klein_gordon_residual(PlaneWaveScalarField(1.0, p), m)
    rotor = rotor_boost(random_direction(RNG), 0.9)
    after = klein_gordon_residual(PlaneWaveScalarField(1.0, apply_lorentz(rotor, p)), m)
    assert abs(after - before) < 1e-10 * max(1.0, abs(before))


def test_on_shell_momentum():
    m = 1.3
    p = on_shell_momentum((0.5, -0.2, 0.9), m)
    assert is_on_shell(p, m)
    assert p.t > 0
    neg = on_shell_momentum((0.5, -0.2, 0.9), m, energy_sign=-1)
    assert neg.t < 0 and is_on_shell(neg, m)


def test_rest_frame_pairings():
    m = 1.0
    psi = random_cq(RNG)
    good = PlaneWaveSpinorField(psi, psi, MinkowskiVector(t=m), PARTICLE, m)
    r1, r2 = dirac_residual(good)
    assert max_coeff_diff(r1, CQ()) < 1e-12
    assert max_coeff_diff(r2, CQ()) < 1e-12
    anti = PlaneWaveSpinorField(psi, -psi, MinkowskiVector(t=m), ANTIPARTICLE, m)
    ra1, ra2 = dirac_residual(anti)
    assert max_coeff_diff(ra1, CQ()) < 1e-12
    assert max_coeff_diff(ra2, CQ()) < 1e-12
    # Wrong sign pairing does not solve.
    bad = PlaneWaveSpinorField(psi, psi, MinkowskiVector(t=m), ANTIPARTICLE, m)
    assert max(max_coeff_diff(r, CQ()) for r in dirac_residual(bad)) > 0.1


def test_make_solution_rest_frame():
    m = 2.0
    psi = random_cq(RNG)
    particle = make_solution(MinkowskiVector(t=m), m, "particle", psi)
    assert isclose(particle.psi2, psi)
    anti = make_solution(MinkowskiVector(t=-m), m, "antiparticle", psi)
    assert isclose(anti.psi2, psi)


def test_make_solution_residuals():
    m = 1.0
    for idx in range(50):
        spatial = RNG.uniform(-1, 1, size=3)
        spatial *= RNG.uniform(0, 10 * m) / max(float(np.linalg.norm(spatial)), 1e-9)
        kind = "particle" if idx % 2 == 0 else "antiparticle"
        field = make_solution(on_shell_momentum(spatial, m), m, kind, random_cq(RNG))
        r1, r2 = dirac_residual(field)
        assert max_coeff_diff(r1, CQ()) < 1e-10
        assert max_coeff_diff(r2, CQ()) < 1e-10


def test_make_solution_error_paths():
    m = 1.0
    with pytest.raises(OffShell):
        make_solution(MinkowskiVector(t=2 * m), m, "particle", CQ(1))
    with pytest.raises(MasslessUnsupported):
        make_solution(MinkowskiVector(t=1), 0.0, "particle", CQ(1))
    with pytest.raises(ValueError):
        make_solution(MinkowskiVector(t=m), m, "tachyon", CQ(1))


def test_transform_preserves_solutions():
    m = 1.0
    for _ in range(20):
        field = make_solution(on_shell_momentum(RNG.uniform(-2, 2, size=3), m), m, "particle", random_cq(RNG))
        rotor = rotor_boost(random_direction(RNG), float(RNG.uniform(-2, 2)))
        moved = transform_spinor(rotor, field)
        scale = max(1.0, float(np.max(np.abs(moved.psi1.coeffs))))
        for r in dirac_residual(moved):
            assert max_coeff_diff(r, CQ()) < 1e-10 * scale


def test_boosted_rest_solution_equals_direct_construction():
    m = 1.0
    phi = random_cq(RNG)
    rest = make_solution(MinkowskiVector(t=m), m, "particle", phi)
    rotor = rotor_boost((0, 0, 1), 0.85)
    moved = transform_spinor(rotor, rest)
    direct = make_solution(apply_lorentz(rotor, rest.momentum), m, "particle", rotor.omega * phi)
    assert isclose(moved.psi1, direct.psi1, tol=1e-10)
    assert isclose(moved.psi2, direct.psi2, tol=1e-10)


def test_full_turn_flips_spinor():
    m = 1.0
    field = make_solution(on_shell_momentum((0.3, -0.2, 0.5), m), m, "particle", random_cq(RNG))
    turned = transform_spinor(rotor_rotation(random_direction(RNG), 2 * math.pi), field)
    assert isclose(turned.psi1, -1 * field.psi1, tol=1e-12)
    assert isclose(turned.psi2, -1 * field.psi2, tol=1e-12)


def test_iteration_reproduces_klein_gordon():
    # Eliminating the lower component leaves the Klein-Gordon factor on the
    # upper one; the lower residual vanishes identically, even off shell.
    m = 1.0
    for _ in range(20):
        p = MinkowskiVector(*RNG.standard_normal(4))
        psi1 = random_cq(RNG)
        sign = PARTICLE if RNG.random() < 0.5 else ANTIPARTICLE
        psi2 = (1j * sign / m) * quat_conj(p.cq) * psi1
        field = PlaneWaveSpinorField(psi1, psi2, p, sign, m)
        r1, r2 = dirac_residual(field)
        kg = trace(p.cq * quat_conj(p.cq)) + m * m
        assert isclose(r1, (-kg / m) * psi1, tol=1e-10)
        assert max_coeff_diff(r2, CQ()) < 1e-12


def test_coupled_residual_requires_constant_potential():
    m = 1.0
    field = make_solution(MinkowskiVector(t=m), m, "particle", CQ(1))
    with pytest.raises(UnsupportedField):
        dirac_residual(field, A=PlaneWaveField(CQ(1), MinkowskiVector(t=1)), e=1.0)


def test_spinor_component_accessors():
    field = PlaneWaveSpinorField(CQ(1), CQ(0, 1), MinkowskiVector(t=1), PARTICLE, 1.0)
    assert isclose(field.component(1).amplitude, CQ(1))
    assert isclose(field.component(2).amplitude, CQ(0, 1))
    v1, v2 = field.evaluate(MinkowskiVector())
    assert isclose(v1, CQ(1))
    assert isclose(v2, CQ(0, 1))
