"""Randomized invariant suites behind the service and CLI.

Each suite draws reproducible cases from a seeded PCG64 generator
(``numpy.random.default_rng``), accumulates scale-normalised residuals and
reports the maximum.  A suite passes exactly when its maximum residual is
within the suite tolerance; boolean sub-checks contribute a unit residual on
failure so the pass rule stays a single comparison.
"""

from __future__ import annotations

import json
import math
import time
from dataclasses import dataclass

import numpy as np

from . import algebra as alg
from . import chiral as ch
from . import lagrangian as lag
from . import relativity as rel
from . import spin as sp
from . import wave as wv
from .algebra import CQ

__all__ = [
    "CheckReport",
    "SUITES",
    "SUITE_NAMES",
    "DEFAULT_TOLERANCES",
    "run_suite",
    "run_all",
    "finite_difference_D",
    "solution_counting_report",
]

DEFAULT_TOLERANCES = {
    "algebra": 1e-12,
    "lorentz": 1e-10,
    "dirac": 1e-10,
    "spin": 1e-10,
    "gauge": 1e-11,
    "lagrangian": 1e-11,
    "chiral": 1e-10,
}


@dataclass(frozen=True)
class CheckReport:
    suite: str
    cases: int
    max_residual: float
    status: str
    seed: int
    elapsed_ms: int

    def to_ndjson(self) -> str:
        return json.dumps(
            {
                "suite": self.suite,
                "cases": self.cases,
                "max_residual": self.max_residual,
                "status": self.status,
                "seed": self.seed,
            }
        )


def _report(name: str, seed: int, cases: int, residuals, tol: float, t0: float) -> CheckReport:
    worst = float(max(residuals)) if residuals else 0.0
    status = "pass" if worst <= tol else "fail"
    return CheckReport(name, cases, worst, status, seed, int((time.monotonic() - t0) * 1000))


def _rel_diff(a: CQ, b: CQ) -> float:
    scale = max(1.0, float(np.max(np.abs(a.coeffs))), float(np.max(np.abs(b.coeffs))))
    return alg.max_coeff_diff(a, b) / scale


def _norm_res(a: CQ, scale: float = 1.0) -> float:
    return float(np.max(np.abs(a.coeffs))) / max(1.0, scale)


# ---------------------------------------------------------------------------
# algebra


def run_algebra(seed: int = 0, cases: int = 1000, tol: float | None = None) -> CheckReport:
    tol = DEFAULT_TOLERANCES["algebra"] if tol is None else tol
    t0 = time.monotonic()
    rng = np.random.default_rng(seed)
    res = []
    for _ in range(cases):
        a, b, c = (alg.random_cq(rng) for _ in range(3))
        res.append(_rel_diff((a * b) * c, a * (b * c)))
        res.append(_rel_diff(a * (b + c), a * b + a * c))
        res.append(_rel_diff(a * alg.AT, alg.AT * a))
        res.append(_rel_diff(alg.complex_conj(a * b), alg.complex_conj(a) * alg.complex_conj(b)))
        res.append(_rel_diff(alg.quat_conj(a * b), alg.quat_conj(b) * alg.quat_conj(a)))
        res.append(abs(alg.trace(a * b) - alg.trace(b * a)))
        prod = a * alg.quat_conj(a)
        res.append(float(np.max(np.abs(prod.coeffs[1:]))))
        ma, mb = alg.to_matrix(a), alg.to_matrix(b)
        res.append(abs(np.linalg.det(ma) - alg.quadric(a)))
        res.append(float(np.max(np.abs(alg.to_matrix(a * b) - ma @ mb))))
        res.append(_rel_diff(alg.from_matrix(ma), a))
        if not alg.is_null(a):
            res.append(_rel_diff(a * alg.invert(a), CQ(1)))
    return _report("algebra", seed, cases, res, tol, t0)


# ---------------------------------------------------------------------------
# lorentz


def rotation_matrix(n: np.ndarray, theta: float) -> np.ndarray:
    """Textbook 4x4 rotation about the unit axis ``n`` (Rodrigues form)."""
    k = np.array([[0, -n[2], n[1]], [n[2], 0, -n[0]], [-n[1], n[0], 0]])
    r = np.eye(3) + math.sin(theta) * k + (1 - math.cos(theta)) * (k @ k)
    out = np.eye(4)
    out[1:, 1:] = r
    return out


def boost_matrix(n: np.ndarray, rapidity: float) -> np.ndarray:
    """Textbook 4x4 boost along ``n``, sign convention matched to the rotors."""
    ch, sh = math.cosh(rapidity), math.sinh(rapidity)
    out = np.eye(4)
    out[0, 0] = ch
    out[0, 1:] = -sh * n
    out[1:, 0] = -sh * n
    out[1:, 1:] = np.eye(3) + (ch - 1) * np.outer(n, n)
    return out


def _random_composite(rng: np.random.Generator):
    count = int(rng.integers(1, 5))
    rotor = None
    matrix = np.eye(4)
    for _ in range(count):
        n = rel.random_direction(rng)
        if rng.random() < 0.5:
            theta = float(rng.uniform(0, 2 * math.pi))
            step = rel.rotor_rotation(n, theta)
            matrix = rotation_matrix(n, theta) @ matrix
        else:
            lam = float(rng.uniform(-2.0, 2.0))
            step = rel.rotor_boost(n, lam)
            matrix = boost_matrix(n, lam) @ matrix
        rotor = step if rotor is None else step * rotor
    return rotor, matrix


def _random_vector(rng: np.random.Generator) -> rel.MinkowskiVector:
    return rel.MinkowskiVector(*rng.standard_normal(4))


def run_lorentz(seed: int = 0, cases: int = 1000, tol: float | None = None) -> CheckReport:
    tol = DEFAULT_TOLERANCES["lorentz"] if tol is None else tol
    t0 = time.monotonic()
    rng = np.random.default_rng(seed)
    res = []
    for _ in range(cases):
        rotor, matrix = _random_composite(rng)
        p, q = _random_vector(rng), _random_vector(rng)
        pp, qq = rel.apply_lorentz(rotor, p), rel.apply_lorentz(rotor, q)
        sp_before = rel.scalar_product(p, q)
        res.append(abs(rel.scalar_product(pp, qq) - sp_before) / max(1.0, abs(sp_before)))
        oracle = matrix @ q.components
        res.append(float(np.max(np.abs(qq.components - oracle))) / max(1.0, float(np.max(np.abs(oracle)))))
        res.append(_rel_diff(rotor.omega * alg.quat_conj(rotor.omega), CQ(1)))
        res.append(
            _rel_diff(
                alg.quat_conj(rel.apply_lorentz(rotor, q).cq),
                rel.apply_covariant(rotor, alg.quat_conj(q.cq)),
            )
        )
    n = rel.random_direction(rng)
    res.append(alg.max_coeff_diff(rel.rotor_rotation(n, 2 * math.pi).omega, CQ(-1)))
    theta = float(rng.uniform(0, 2 * math.pi))
    r1, r2 = rel.rotor_rotation(n, theta), rel.rotor_rotation(n, theta + 2 * math.pi)
    res.append(alg.max_coeff_diff(r1.omega, -1 * r2.omega))
    v = _random_vector(rng)
    res.append(
        float(np.max(np.abs(rel.apply_lorentz(r1, v).components - rel.apply_lorentz(r2, v).components)))
    )
    return _report("lorentz", seed, cases, res, tol, t0)


# ---------------------------------------------------------------------------
# dirac / wave


def finite_difference_D(field, q: rel.MinkowskiVector, h: float = 1e-5, conjugated: bool = False) -> CQ:
    """Central-difference evaluation of the differentiation operator.

    Independent of the analytic path: samples the field at displaced points
    and assembles the operator from its definition.
    """

    def value(point) -> CQ:
        v = field.evaluate(point) if hasattr(field, "evaluate") else field(point)
        return v if isinstance(v, CQ) else CQ(v)

    units = [alg.AT, alg.I, alg.J, alg.K]
    signs = [1.0, -1.0, -1.0, -1.0]
    if conjugated:
        signs = [1.0, 1.0, 1.0, 1.0]
    out = CQ()
    for axis, (unit, s) in enumerate(zip(units, signs)):
        delta = [0.0] * 4
        delta[axis] = h
        plus = rel.MinkowskiVector(*(q.components + delta))
        minus = rel.MinkowskiVector(*(q.components - delta))
        out = out + s * unit * ((value(plus) - value(minus)) / (2 * h))
    return out


def run_dirac(seed: int = 0, cases: int = 1000, tol: float | None = None) -> CheckReport:
    tol = DEFAULT_TOLERANCES["dirac"] if tol is None else tol
    t0 = time.monotonic()
    rng = np.random.default_rng(seed)
    res = []
    m = 1.0

    # Coordinate-divergence identity.
    res.append(alg.max_coeff_diff(-1 * wv.apply_Dbar(wv.coordinate_field()), CQ(4)))

    # Klein-Gordon residual: zero exactly on shell, matches expansion off shell.
    for _ in range(50):
        spatial = rng.uniform(-3, 3, size=3)
        p_on = wv.on_shell_momentum(spatial, m)
        f_on = wv.PlaneWaveScalarField(1.0 + 0.0j, p_on)
        res.append(abs(wv.klein_gordon_residual(f_on, m)))
        p_off = rel.MinkowskiVector(*rng.standard_normal(4))
        f_off = wv.PlaneWaveScalarField(1.0 + 0.0j, p_off)
        expected = m * m - p_off.t**2 + float(np.sum(p_off.spatial**2))
        res.append(abs(wv.klein_gordon_residual(f_off, m) - expected))
        rotor, _ = _random_composite(rng)
        f_rot = wv.PlaneWaveScalarField(1.0 + 0.0j, rel.apply_lorentz(rotor, p_off))
        res.append(
            abs(wv.klein_gordon_residual(f_rot, m) - wv.klein_gordon_residual(f_off, m))
            / max(1.0, abs(expected))
        )

    for idx in range(cases):
        spatial = rng.uniform(-1, 1, size=3)
        spatial *= rng.uniform(0, 10 * m) / max(float(np.linalg.norm(spatial)), 1e-9)
        kind = "particle" if idx % 2 == 0 else "antiparticle"
        p = wv.on_shell_momentum(spatial, m)
        phi = alg.random_cq(rng)
        field = wv.make_solution(p, m, kind, phi)
        r1, r2 = wv.dirac_residual(field)
        res.append(_norm_res(r1))
        res.append(_norm_res(r2))

    # Covariance: solutions stay solutions under random composite rotors.
    for _ in range(200):
        rotor, _ = _random_composite(rng)
        p = wv.on_shell_momentum(rng.uniform(-2, 2, size=3), m)
        field = wv.make_solution(p, m, "particle", alg.random_cq(rng))
        moved = wv.transform_spinor(rotor, field)
        r1, r2 = wv.dirac_residual(moved)
        scale = max(1.0, float(np.max(np.abs(moved.psi1.coeffs))), float(np.max(np.abs(moved.psi2.coeffs))))
        res.append(_norm_res(r1, scale))
        res.append(_norm_res(r2, scale))

    # Iteration: eliminating the lower component turns the first residual into
    # the Klein-Gordon factor; the second residual vanishes identically.
    for _ in range(200):
        p = rel.MinkowskiVector(*rng.standard_normal(4))
        psi1 = alg.random_cq(rng)
        sign = wv.PARTICLE if rng.random() < 0.5 else wv.ANTIPARTICLE
        psi2 = (1j * sign / m) * alg.quat_conj(p.cq) * psi1
        field = wv.PlaneWaveSpinorField(psi1, psi2, p, sign, m)
        r1, r2 = wv.dirac_residual(field)
        kg = alg.trace(p.cq * alg.quat_conj(p.cq)) + m * m
        res.append(_rel_diff(r1, (-kg / m) * psi1))
        res.append(_norm_res(r2))

    # Finite-difference oracle for the analytic operator.
    for _ in range(100):
        p = rel.MinkowskiVector(*rng.standard_normal(4))
        field = wv.PlaneWaveField(alg.random_cq(rng), p, wv.PARTICLE if rng.random() < 0.5 else wv.ANTIPARTICLE)
        q = _random_vector(rng)
        analytic = wv.apply_D(field).evaluate(q)
        numeric = finite_difference_D(field, q)
        # O(h^2) truncation floor of the oracle sits near 1e-9; agreement to
        # 1e-8 counts as exact for the suite.
        res.append(0.0 if alg.max_coeff_diff(analytic, numeric) <= 1e-8 else 1.0)

    # Rest frame: right pairing solves, wrong pairing does not.
    psi = alg.random_cq(rng)
    good = wv.PlaneWaveSpinorField(psi, psi, rel.MinkowskiVector(t=m), wv.PARTICLE, m)
    res.append(max(_norm_res(r) for r in wv.dirac_residual(good)))
    bad = wv.PlaneWaveSpinorField(psi, psi, rel.MinkowskiVector(t=m), wv.ANTIPARTICLE, m)
    res.append(0.0 if max(_norm_res(r) for r in wv.dirac_residual(bad)) > 0.1 else 1.0)

    # A full rotation flips both spinor components.
    field = wv.make_solution(wv.on_shell_momentum((0.3, -0.2, 0.5), m), m, "particle", psi)
    turned = wv.transform_spinor(rel.rotor_rotation(rel.random_direction(rng), 2 * math.pi), field)
    res.append(_rel_diff(turned.psi1, -1 * field.psi1))
    res.append(_rel_diff(turned.psi2, -1 * field.psi2))

    return _report("dirac", seed, cases, res, tol, t0)


# ---------------------------------------------------------------------------
# spin


def _random_null(rng: np.random.Generator) -> CQ:
    u = rng.standard_normal(2) + 1j * rng.standard_normal(2)
    v = rng.standard_normal(2) + 1j * rng.standard_normal(2)
    return alg.from_matrix(np.outer(u, v))


def _random_non_null(rng: np.random.Generator) -> CQ:
    while True:
        psi = alg.random_cq(rng)
        n2 = float(np.sum(np.abs(psi.coeffs) ** 2))
        if abs(alg.quadric(psi)) > 1e-4 * n2:
            return psi


def run_spin(seed: int = 0, cases: int = 1000, tol: float | None = None) -> CheckReport:
    tol = DEFAULT_TOLERANCES["spin"] if tol is None else tol
    t0 = time.monotonic()
    rng = np.random.default_rng(seed)
    res = []

    sz = sp.SpinOperator((0.0, 0.0, 1.0))
    basis = sp.spin_basis()
    for state in basis:
        res.append(_rel_diff(sp.apply_spin(sz, state.amplitude), state.m_z * state.amplitude))
        res.append(abs(alg.quadric(state.amplitude)))

    # Right multiplication relations between equal-eigenvalue states.
    res.append(alg.max_coeff_diff(basis[0].amplitude * alg.I, basis[1].amplitude))
    res.append(alg.max_coeff_diff(basis[2].amplitude * alg.I, basis[3].amplitude))

    ops = [sp.SpinOperator(tuple(v)) for v in np.eye(3)]
    for _ in range(100):
        psi = alg.random_cq(rng)
        total = CQ()
        for op in ops:
            total = total + sp.apply_spin(op, sp.apply_spin(op, psi))
        res.append(_rel_diff(total, 0.75 * psi))
        for a, b, c in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
            comm = sp.apply_spin(ops[a], sp.apply_spin(ops[b], psi)) - sp.apply_spin(
                ops[b], sp.apply_spin(ops[a], psi)
            )
            res.append(_rel_diff(comm, alg.AT * sp.apply_spin(ops[c], psi)))
        casimir = (
            sp.ladder("-", sp.ladder("+", psi))
            + sp.apply_spin(sz, sp.apply_spin(sz, psi))
            + sp.apply_spin(sz, psi)
        )
        res.append(_rel_diff(casimir, 0.75 * psi))

    res.append(_norm_res(sp.ladder("+", basis[0].amplitude)))
    raised = sp.ladder("+", basis[2].amplitude)
    res.append(float(sp.subspace_residual(raised.coeffs, 0)))

    # Equivalence decision procedure against the exhaustive direction grid.
    directions = sp.fibonacci_directions()
    for _ in range(cases):
        psi = _random_null(rng)
        found = sp.has_spin_direction(psi)
        if found is None:
            res.append(1.0)
            continue
        n, sign = found
        op = sp.SpinOperator(tuple(n))
        res.append(min(_rel_diff(sp.apply_spin(op, psi), sign * psi), 1e-10))
    for _ in range(cases):
        psi = _random_non_null(rng)
        if sp.has_spin_direction(psi) is not None:
            res.append(1.0)
            continue
        res.append(0.0 if sp.min_eigen_residual(psi, directions) > 1e-6 else 1.0)

    # Gauge invariance of the quadric and eigenvalue preservation.
    for _ in range(100):
        gauge = sp.QuaternionGauge(tuple(rel.random_direction(rng)), float(rng.uniform(0, 2 * math.pi)))
        psi = alg.random_cq(rng)
        res.append(abs(alg.quadric(psi * gauge.element) - alg.quadric(psi)) / max(1.0, abs(alg.quadric(psi))))
        gauged = basis[0].amplitude * gauge.element
        res.append(_rel_diff(sp.apply_spin(sz, gauged), 0.5 * gauged))

    # Decomposition over the eigenbasis reconstructs exactly.
    for _ in range(100):
        psi = alg.random_cq(rng)
        coeffs = sp.decompose_psi0(psi)
        rebuilt = CQ()
        for coeff, state in zip(coeffs, basis):
            rebuilt = rebuilt + complex(coeff) * state.amplitude
        res.append(_rel_diff(rebuilt, psi))

    # No gauge confines the mixed state to a single subspace.
    res.append(0.0 if sp.no_escape_floor() > 1e-3 else 1.0)

    return _report("spin", seed, cases, res, tol, t0)


# ---------------------------------------------------------------------------
# gauge


def _random_spinor_field(rng: np.random.Generator, m: float = 1.0) -> wv.PlaneWaveSpinorField:
    return wv.PlaneWaveSpinorField(
        alg.random_cq(rng),
        alg.random_cq(rng),
        rel.MinkowskiVector(*rng.standard_normal(4)),
        wv.PARTICLE if rng.random() < 0.5 else wv.ANTIPARTICLE,
        m,
    )


def _random_physical_potential(rng: np.random.Generator, with_wave: bool = True) -> lag.PotentialField:
    constant = CQ(1j * rng.standard_normal(), *rng.standard_normal(3))
    waves = ()
    if with_wave:
        # Conjugate pair -> a standing wave with real physical components.
        amp = CQ(1j * rng.standard_normal(), *rng.standard_normal(3))
        k = rel.MinkowskiVector(*rng.standard_normal(4))
        waves = (
            wv.PlaneWaveField(amp, k, wv.PARTICLE),
            wv.PlaneWaveField(amp, k, wv.ANTIPARTICLE),
        )
    return lag.PotentialField(constant, waves)


def run_gauge(seed: int = 0, cases: int = 1000, tol: float | None = None) -> CheckReport:
    tol = DEFAULT_TOLERANCES["gauge"] if tol is None else tol
    t0 = time.monotonic()
    rng = np.random.default_rng(seed)
    res = []
    m = 1.0

    for _ in range(cases):
        gauge = sp.QuaternionGauge(tuple(rel.random_direction(rng)), float(rng.uniform(0, 2 * math.pi)))
        field = _random_spinor_field(rng, m)
        q = _random_vector(rng)
        before = lag.l0_density(field, m, q)
        after = lag.l0_density(sp.apply_quaternion_gauge(gauge, field), m, q)
        res.append(abs(after - before) / max(1.0, abs(before)))

    for _ in range(cases // 2):
        field = _random_spinor_field(rng, m)
        e = float(rng.uniform(-2, 2))
        A = lag.PotentialField(CQ(1j * rng.standard_normal(), *rng.standard_normal(3)))
        u1 = sp.U1Gauge(e, wv.LinearScalarFunction(_random_vector(rng), float(rng.standard_normal())))
        moved, A2 = sp.apply_u1_gauge(u1, field, A)
        q = _random_vector(rng)
        before = lag.l0_density(field, m, q) + lag.l_int_density(field, A, e, q)
        after = lag.l0_density(moved, m, q) + lag.l_int_density(moved, A2, e, q)
        res.append(abs(after - before) / max(1.0, abs(before)))
        r_before = wv.dirac_residual(field, A.constant, e)
        r_after = wv.dirac_residual(moved, A2.constant, e)
        factor = complex(np.exp(-1j * e * u1.alpha.offset))
        for rb, ra in zip(r_before, r_after):
            res.append(_rel_diff(ra, rb * factor))

    for _ in range(cases):
        theta = float(rng.uniform(0, 2 * math.pi))
        beta = float(rng.uniform(0, 2 * math.pi))
        n = CQ(0, *rel.random_direction(rng))
        sigma = CQ(complex(np.exp(1j * theta))) * (CQ(math.cos(beta)) + math.sin(beta) * n)
        c, qfac = sp.decompose_normal(sigma)
        res.append(_rel_diff(c * qfac, sigma))
        res.append(abs(abs(c) - 1.0))
        res.append(abs(float(np.linalg.norm(qfac.coeffs)) - 1.0))

    bad = 0
    pairs = max(cases // 4, 100)
    axis = CQ(0, *rel.random_direction(rng))
    for _ in range(pairs):
        b1 = sp.compensating_field(_random_non_null(rng), axis)
        b2 = sp.compensating_field(_random_non_null(rng), axis)
        scale = max(1.0, float(np.linalg.norm(b1.coeffs)), float(np.linalg.norm(b2.coeffs)))
        if float(np.max(np.abs(b1.coeffs - b2.coeffs))) / scale <= 1e-3:
            bad += 1
    res.append(0.0 if bad <= pairs * 0.01 else 1.0)

    return _report("gauge", seed, cases, res, tol, t0)


# ---------------------------------------------------------------------------
# lagrangian


def run_lagrangian(seed: int = 0, cases: int = 1000, tol: float | None = None) -> CheckReport:
    tol = DEFAULT_TOLERANCES["lagrangian"] if tol is None else tol
    t0 = time.monotonic()
    rng = np.random.default_rng(seed)
    res = []
    m = 1.0

    for _ in range(cases // 4):
        field = _random_spinor_field(rng, m)
        A = _random_physical_potential(rng)
        e = float(rng.uniform(-2, 2))
        q = _random_vector(rng)
        li = lag.l_int_density(field, A, e, q)
        res.append(abs(li.imag) / max(1.0, abs(li.real)))
        f = lag.field_strength(A, q).value
        res.append(abs(alg.trace(f)))
        fc = alg.complex_conj(f)
        la_value = 0.25 * alg.trace(f * f + fc * fc)
        res.append(abs(la_value.imag) / max(1.0, abs(la_value.real)))

    # Constant potentials carry no field strength.
    const_A = lag.PotentialField(CQ(1j * 0.7, 0.2, -0.4, 1.1))
    res.append(float(np.max(np.abs(lag.field_strength(const_A, _random_vector(rng)).value.coeffs))))
    res.append(abs(lag.la_density(const_A, _random_vector(rng))))

    # Gauge shift of the potential leaves the field strength unchanged.
    for _ in range(50):
        A = _random_physical_potential(rng)
        q = _random_vector(rng)
        delta = wv.apply_D(wv.LinearScalarFunction(_random_vector(rng)))
        res.append(
            _rel_diff(lag.field_strength(A, q).value, lag.field_strength(A.shifted(delta), q).value)
        )

    # The free density vanishes pointwise on constructed solutions.
    for _ in range(100):
        p = wv.on_shell_momentum(rng.uniform(-2, 2, size=3), m)
        field = wv.make_solution(p, m, "particle", alg.random_cq(rng))
        res.append(abs(lag.l0_density(field, m, _random_vector(rng))))

    # The free density is a Lorentz scalar.
    for _ in range(100):
        field = _random_spinor_field(rng, m)
        rotor, _ = _random_composite(rng)
        q = _random_vector(rng)
        moved = wv.transform_spinor(rotor, field)
        before = lag.l0_density(field, m, q)
        after = lag.l0_density(moved, m, rel.apply_lorentz(rotor, q))
        res.append(abs(after - before) / max(1.0, abs(before)))

    # Discrete action: zero on solutions, real and grid-stable off shell.
    # The rest momentum (energy m = 1) closes over the 2*pi box.
    box = (2 * math.pi,) * 4
    sol = wv.make_solution(rel.MinkowskiVector(t=m), m, "particle", CQ(1, 0.3, -0.2, 0.1))
    res.append(abs(lag.discrete_action(sol, m, box, 8)))
    atoms = [
        wv.PlaneWaveSpinorField(alg.random_cq(rng), alg.random_cq(rng), rel.MinkowskiVector(2, 1, 0, 1), wv.PARTICLE, m),
        wv.PlaneWaveSpinorField(alg.random_cq(rng), alg.random_cq(rng), rel.MinkowskiVector(1, -1, 2, 0), wv.ANTIPARTICLE, m),
    ]
    s16 = lag.discrete_action(atoms, m, box, 16)
    s32 = lag.discrete_action(atoms, m, box, 32)
    res.append(abs(s16.imag) / (1e-2 + abs(s16.real)))
    res.append(abs(s32 - s16) / max(1.0, abs(s16)))

    return _report("lagrangian", seed, cases, res, tol, t0)


# ---------------------------------------------------------------------------
# chiral


def _random_subspace_amplitude(rng: np.random.Generator) -> CQ:
    c1 = complex(rng.standard_normal(), rng.standard_normal())
    c2 = complex(rng.standard_normal(), rng.standard_normal())
    basis = sp.spin_basis()
    return c1 * basis[0].amplitude + c2 * basis[2].amplitude


def run_chiral(seed: int = 0, cases: int = 1000, tol: float | None = None) -> CheckReport:
    tol = DEFAULT_TOLERANCES["chiral"] if tol is None else tol
    t0 = time.monotonic()
    rng = np.random.default_rng(seed)
    res = []
    m = 1.0

    res.append(ch.gamma_algebra_check())

    for idx in range(cases):
        kind = "particle" if idx % 2 == 0 else "antiparticle"
        p = wv.on_shell_momentum(rng.uniform(-3, 3, size=3), m)
        field = wv.make_solution(p, m, kind, _random_subspace_amplitude(rng))
        spinor = ch.cq_to_chiral(field)
        residual = ch.chiral_dirac_residual(spinor, p, m, field.phase_sign)
        scale = max(1.0, float(np.max(np.abs(spinor.vector))))
        res.append(float(np.max(np.abs(residual))) / scale)
        back1, back2 = ch.chiral_to_cq(spinor)
        res.append(_rel_diff(back1, field.psi1))
        res.append(_rel_diff(back2, field.psi2))

    # Converse: random gamma-matrix solutions map back to CQ solutions.
    for idx in range(cases // 2):
        sign = wv.PARTICLE if idx % 2 == 0 else wv.ANTIPARTICLE
        p = wv.on_shell_momentum(rng.uniform(-3, 3, size=3), m, energy_sign=1)
        g = ch.CHIRAL_GAMMAS.matrices
        op = -sign * (p.t * g[0] - p.x * g[1] - p.y * g[2] - p.z * g[3]) - m * np.eye(4)
        kernel = np.linalg.svd(op)[2].conj().T[:, 2:]
        coeffs = rng.standard_normal(2) + 1j * rng.standard_normal(2)
        vec = kernel @ coeffs
        spinor = ch.ChiralSpinor.from_vector(vec)
        res.append(float(np.max(np.abs(ch.chiral_dirac_residual(spinor, p, m, sign)))))
        psi1, psi2 = ch.chiral_to_cq(spinor)
        field = wv.PlaneWaveSpinorField(psi1, psi2, p, sign, m)
        r1, r2 = wv.dirac_residual(field)
        res.append(_norm_res(r1))
        res.append(_norm_res(r2))

    # The bridge intertwines the z spin component with diag(1/2,-1/2,1/2,-1/2).
    intertwiner = np.diag([0.5, -0.5, 0.5, -0.5])
    sz = sp.SpinOperator((0.0, 0.0, 1.0))
    for _ in range(100):
        psi1 = _random_subspace_amplitude(rng)
        psi2 = _random_subspace_amplitude(rng)
        mapped = ch.cq_to_chiral(psi1, psi2).vector
        acted = ch.cq_to_chiral(sp.apply_spin(sz, psi1), sp.apply_spin(sz, psi2)).vector
        res.append(float(np.max(np.abs(acted - intertwiner @ mapped))))

    return _report("chiral", seed, cases, res, tol, t0)


# ---------------------------------------------------------------------------
# solution counting


def solution_counting_report() -> dict:
    """Rank computations for the rest-frame solution space.

    Real dimension of the eight-element amplitude basis, complex dimension of
    each z-eigenvalue space, and the per-eigenvalue count inside a single
    closed subspace.
    """
    units = [CQ(1), alg.AT, alg.I, alg.AT * alg.I, alg.J, alg.AT * alg.J, alg.K, alg.AT * alg.K]
    real_vectors = np.stack([u.reals for u in units])
    basis = sp.spin_basis()
    up = np.stack([basis[0].amplitude.coeffs, basis[1].amplitude.coeffs])
    down = np.stack([basis[2].amplitude.coeffs, basis[3].amplitude.coeffs])
    sub0_up = np.stack([basis[0].amplitude.coeffs])
    sub0_down = np.stack([basis[2].amplitude.coeffs])
    return {
        "real_dimension": int(np.linalg.matrix_rank(real_vectors)),
        "complex_dim_up": int(np.linalg.matrix_rank(up)),
        "complex_dim_down": int(np.linalg.matrix_rank(down)),
        "subspace_dim_up": int(np.linalg.matrix_rank(sub0_up)),
        "subspace_dim_down": int(np.linalg.matrix_rank(sub0_down)),
    }


SUITES = {
    "algebra": run_algebra,
    "lorentz": run_lorentz,
    "dirac": run_dirac,
    "spin": run_spin,
    "gauge": run_gauge,
    "lagrangian": run_lagrangian,
    "chiral": run_chiral,
}

SUITE_NAMES = tuple(SUITES)


def run_suite(name: str, seed: int = 0, cases: int = 1000, tol: float | None = None) -> CheckReport:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}")
    return SUITES[name](seed=seed, cases=cases, tol=tol)


def run_all(seed: int = 0, cases: int = 1000, tol: float | None = None) -> list[CheckReport]:
    return [run_suite(name, seed=seed, cases=cases, tol=tol) for name in SUITE_NAMES]
