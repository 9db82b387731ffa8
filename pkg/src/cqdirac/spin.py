"""Spin operators, the spin eigenbasis, the spin-direction criterion, and
the gauge transformations of the two-component formulation.

Spin components act by left multiplication with half the commuting unit
times a quaternion unit; the z-eigenbasis splits into two complex
2-dimensional subspaces closed under the spin algebra and connected by
right quaternion multiplication (the global SU(2) gauge freedom).

A state possesses a definite spin direction exactly when its quadric
vanishes; the direction is recovered from the rank-1 structure of the 2x2
matrix image.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .algebra import (
    AT,
    CQ,
    I,
    complex_conj,
    invert,
    is_null,
    qconj,
    qmul,
    quadric,
    quat_conj,
    to_matrix,
)
from .errors import NotNormal, ZeroState
from .lagrangian import PotentialField
from .relativity import MinkowskiVector
from .wave import ANTIPARTICLE, PARTICLE, LinearScalarFunction, PlaneWaveSpinorField

__all__ = [
    "SpinOperator",
    "RestFrameState",
    "QuaternionGauge",
    "U1Gauge",
    "SpinBasisState",
    "SPIN_BASIS",
    "apply_spin",
    "ladder",
    "spin_basis",
    "has_spin_direction",
    "decompose_psi0",
    "apply_quaternion_gauge",
    "apply_u1_gauge",
    "decompose_normal",
    "local_gauge_obstruction_demo",
    "compensating_field",
    "fibonacci_directions",
    "min_eigen_residual",
    "subspace_residual",
    "no_escape_floor",
    "DIRECTION_GRID_SIZE",
    "NO_ESCAPE_GRID",
]

_SIGMA = np.array(
    [
        [[0, 1], [1, 0]],
        [[0, -1j], [1j, 0]],
        [[1, 0], [0, -1]],
    ],
    dtype=complex,
)

# Grid resolutions for the exhaustive searches; fixed for reproducibility.
DIRECTION_GRID_SIZE = 10_000
NO_ESCAPE_GRID = (32, 32, 32, 64)

# Complex coefficient vectors of the four z-eigenstates, in eigenvalue order
# +1/2, +1/2, -1/2, -1/2.  Columns 0 and 2 span the first closed subspace,
# columns 1 and 3 the second.
_BASIS = np.array(
    [
        [1, 0, 0, 1j],      # 1 + @k
        [0, 1, 1j, 0],      # i + @j
        [0, 1j, 1, 0],      # @i + j
        [-1j, 0, 0, -1],    # -@ - k
    ],
    dtype=complex,
).T

_SUBSPACES = ((0, 2), (1, 3))
_MZ_LABELS = (0.5, 0.5, -0.5, -0.5)


@dataclass(frozen=True)
class SpinOperator:
    """The spin component along a unit direction; acts by left multiplication."""

    direction: tuple[float, float, float]

    @property
    def multiplier(self) -> CQ:
        nx, ny, nz = self.direction
        return 0.5j * CQ(0, nx, ny, nz)


@dataclass(frozen=True)
class RestFrameState:
    """A rest-frame Dirac solution ``(psi, +-psi) exp(-+ @ m t)``."""

    amplitude: CQ
    kind: str = "particle"
    mass: float = 1.0

    @property
    def field(self) -> PlaneWaveSpinorField:
        sign = PARTICLE if self.kind == "particle" else ANTIPARTICLE
        lower = self.amplitude if self.kind == "particle" else -self.amplitude
        return PlaneWaveSpinorField(
            self.amplitude, lower, MinkowskiVector(t=self.mass), sign, self.mass
        )


@dataclass(frozen=True)
class QuaternionGauge:
    """Global right multiplication by a unit real quaternion ``exp(-n beta)``."""

    axis: tuple[float, float, float]
    beta: float

    @property
    def element(self) -> CQ:
        nx, ny, nz = self.axis
        s = math.sin(self.beta)
        return CQ(math.cos(self.beta)) - s * CQ(0, nx, ny, nz)


@dataclass(frozen=True)
class U1Gauge:
    """Right multiplication by the local complex phase ``exp(-@ e alpha(q))``."""

    charge: float
    alpha: LinearScalarFunction


def apply_spin(op: SpinOperator, state):
    """Left-multiply the amplitude by the spin operator."""
    if isinstance(state, RestFrameState):
        return replace(state, amplitude=op.multiplier * state.amplitude)
    return op.multiplier * state


_LADDER = {
    "+": 0.5 * (AT * I - CQ(0, 0, 1)),
    "-": 0.5 * (AT * I + CQ(0, 0, 1)),
}


def ladder(sign: str, state):
    """Raising (``'+'``) or lowering (``'-'``) operator for the z-eigenbasis."""
    mult = _LADDER[sign]
    if isinstance(state, RestFrameState):
        return replace(state, amplitude=mult * state.amplitude)
    return mult * state


@dataclass(frozen=True)
class SpinBasisState:
    m_z: float
    amplitude: CQ
    subspace: int


def spin_basis() -> tuple[SpinBasisState, ...]:
    """The four z-eigenstate amplitudes with eigenvalues and subspace labels."""
    out = []
    for col in range(4):
        subspace = 0 if col in _SUBSPACES[0] else 1
        out.append(SpinBasisState(_MZ_LABELS[col], CQ(*_BASIS[:, col]), subspace))
    return tuple(out)


SPIN_BASIS = spin_basis()


def has_spin_direction(psi: CQ):
    """The unit direction and eigenvalue carried by a null amplitude.

    Returns ``None`` when the quadric does not vanish (no direction exists);
    otherwise ``(n, 0.5)`` with ``n`` the unit 3-vector satisfying the
    half-eigenvalue relation.  Raises :class:`ZeroState` on zero input.
    """
    coeffs = psi.coeffs
    norm = float(np.linalg.norm(coeffs))
    if norm == 0.0:
        raise ZeroState("zero amplitude has no spin direction")
    if not is_null(psi):
        return None
    m = to_matrix(psi)
    # Null amplitude -> rank-1 matrix; every column is proportional to the
    # leading left singular vector u, and the Bloch vector of u solves the
    # eigen-relation exactly.
    u = np.linalg.svd(m)[0][:, 0]
    n = np.einsum("i,aij,j->a", np.conj(u), _SIGMA, u).real
    n /= np.linalg.norm(n)
    return n, 0.5


def decompose_psi0(psi: CQ) -> np.ndarray:
    """Complex coordinates of ``psi`` over the four z-eigenstate amplitudes."""
    return np.linalg.solve(_BASIS, psi.coeffs)


def apply_quaternion_gauge(gauge: QuaternionGauge, state):
    """Right-multiply the state's amplitude(s) by the gauge element."""
    u = gauge.element
    if isinstance(state, RestFrameState):
        return replace(state, amplitude=state.amplitude * u)
    if isinstance(state, PlaneWaveSpinorField):
        return replace(state, psi1=state.psi1 * u, psi2=state.psi2 * u)
    return state * u


def apply_u1_gauge(gauge: U1Gauge, field: PlaneWaveSpinorField, A: PotentialField):
    """Local complex phase rotation; shifts the momentum and the potential.

    The phase ``exp(-@ e alpha)`` folds the linear part of ``alpha`` into the
    plane-wave momentum and the constant part into the amplitudes; the
    potential gains the constant gradient of ``alpha``.
    """
    e = gauge.charge
    a = gauge.alpha.gradient
    shifted = field.momentum - (field.phase_sign * e) * a
    factor = complex(np.exp(-1j * e * gauge.alpha.offset))
    new_field = replace(
        field,
        psi1=field.psi1 * factor,
        psi2=field.psi2 * factor,
        momentum=shifted,
    )
    return new_field, A.shifted(a.cq)


def decompose_normal(sigma: CQ, tol: float = 1e-9):
    """Split ``sigma`` into a unit complex scalar times a real unit quaternion.

    Requires ``sigma * complex_conj(quat_conj(sigma)) == 1``; the sign is
    canonicalised so the first nonzero coefficient of the quaternion factor
    is positive.  Raises :class:`NotNormal` otherwise.
    """
    product = sigma * complex_conj(quat_conj(sigma))
    if np.max(np.abs(product.coeffs - CQ(1).coeffs)) > tol:
        raise NotNormal("sigma * complex_conj(quat_conj(sigma)) != 1")
    c = complex(np.sqrt(quadric(sigma)))
    if abs(c) < tol:
        raise NotNormal("degenerate scalar factor")
    q_coeffs = sigma.coeffs / c
    if np.max(np.abs(q_coeffs.imag)) > tol:
        raise NotNormal("quaternion factor is not real")
    q_real = q_coeffs.real.copy()
    for v in q_real:
        if abs(v) > tol:
            if v < 0:
                c, q_real = -c, -q_real
            break
    return c, CQ(*q_real)


def compensating_field(psi: CQ, n: CQ) -> CQ:
    """The left factor matching the local-gauge term ``i psi n`` for this state."""
    return I * psi * n * invert(psi)


@dataclass(frozen=True)
class ObstructionReport:
    """Mismatch norms between per-state compensating fields."""

    seed: int
    axis: tuple[float, float, float]
    rows: tuple[tuple[str, float], ...]

    @property
    def generic_floor(self) -> float:
        generic = [v for label, v in self.rows if label.startswith("generic")]
        return min(generic) if generic else 0.0


def _mismatch(b1: CQ, b2: CQ) -> float:
    scale = max(1.0, float(np.linalg.norm(b1.coeffs)), float(np.linalg.norm(b2.coeffs)))
    return float(np.max(np.abs(b1.coeffs - b2.coeffs))) / scale


def local_gauge_obstruction_demo(seed: int = 0, generic_pairs: int = 8) -> ObstructionReport:
    """Show that no state-independent compensating field exists.

    For a local gauge with linear angle, each state fixes its own
    compensating field; identical or complex-rescaled states agree, generic
    pairs disagree by a scale-normalised margin.
    """
    rng = np.random.default_rng(seed)
    from .relativity import random_direction

    axis = random_direction(rng)
    n = CQ(0, *axis)
    rows = []

    def sample() -> CQ:
        while True:
            psi = CQ.from_reals(rng.standard_normal(8))
            if not is_null(psi):
                return psi

    psi = sample()
    rows.append(("identical pair", _mismatch(compensating_field(psi, n), compensating_field(psi, n))))
    lam = complex(*rng.standard_normal(2))
    rows.append(
        (
            "complex-scaled pair",
            _mismatch(compensating_field(psi, n), compensating_field(psi * lam, n)),
        )
    )
    for idx in range(generic_pairs):
        b1 = compensating_field(sample(), n)
        b2 = compensating_field(sample(), n)
        rows.append((f"generic pair {idx + 1}", _mismatch(b1, b2)))
    return ObstructionReport(seed, tuple(axis), tuple(rows))


def fibonacci_directions(count: int = DIRECTION_GRID_SIZE) -> np.ndarray:
    """A near-uniform grid of ``count`` unit 3-vectors."""
    idx = np.arange(count) + 0.5
    phi = math.pi * (3.0 - math.sqrt(5.0)) * idx
    cos_t = 1.0 - 2.0 * idx / count
    sin_t = np.sqrt(np.clip(1.0 - cos_t**2, 0.0, None))
    return np.stack([sin_t * np.cos(phi), sin_t * np.sin(phi), cos_t], axis=-1)


def min_eigen_residual(psi: CQ, directions: np.ndarray) -> float:
    """Smallest relative eigen-relation residual over a direction grid.

    For each direction the residual is the Frobenius distance of the spin
    action from +-half the state, normalised by the state norm; the minimum
    over directions and signs is returned.
    """
    m = to_matrix(psi)
    scale = float(np.linalg.norm(m))
    sig = np.einsum("da,aij->dij", directions, _SIGMA)
    acted = sig @ m
    r_plus = np.linalg.norm(acted - m, axis=(1, 2))
    r_minus = np.linalg.norm(acted + m, axis=(1, 2))
    return float(min(r_plus.min(), r_minus.min()) / scale)


def subspace_residual(coeffs: np.ndarray, subspace: int) -> np.ndarray:
    """Relative out-of-subspace residual for (..., 4) coefficient arrays."""
    coeffs = np.asarray(coeffs, dtype=complex)
    b = [_BASIS[:, col] for col in _SUBSPACES[subspace]]
    total = np.sum(np.abs(coeffs) ** 2, axis=-1)
    proj = sum(np.abs(coeffs @ np.conj(bv)) ** 2 / np.sum(np.abs(bv) ** 2) for bv in b)
    rel = np.sqrt(np.clip(total - proj, 0.0, None) / np.where(total > 0, total, 1.0))
    return rel


def no_escape_floor(psi: CQ = CQ(1), grid=NO_ESCAPE_GRID) -> float:
    """Minimum out-of-single-subspace residual over the whole gauge grid.

    Scans right multiplications by ``exp(-n beta)`` on an axis grid of
    ``grid[:3]`` lattice points and ``grid[3]`` angles, measuring how far the
    gauged state stays from each closed subspace.  A positive floor means no
    gauge confines the state to one subspace.
    """
    nx, ny, nz, nbeta = grid
    axes = [np.linspace(-1.0, 1.0, count) for count in (nx, ny, nz)]
    gx, gy, gz = np.meshgrid(*axes, indexing="ij")
    dirs = np.stack([gx.ravel(), gy.ravel(), gz.ravel()], axis=-1)
    norms = np.linalg.norm(dirs, axis=-1)
    dirs = dirs[norms > 1e-8] / norms[norms > 1e-8, None]
    psi_c = psi.coeffs[None, :]
    floor = math.inf
    for beta in np.linspace(0.0, 2.0 * math.pi, nbeta, endpoint=False):
        u = np.zeros((dirs.shape[0], 4), dtype=complex)
        u[:, 0] = math.cos(beta)
        u[:, 1:] = -math.sin(beta) * dirs
        gauged = qmul(psi_c, u)
        for subspace in (0, 1):
            floor = min(floor, float(subspace_residual(gauged, subspace).min()))
    return floor
