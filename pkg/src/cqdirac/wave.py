"""Analytic differentiation on a closed plane-wave family, and Dirac solutions.

The differentiation operator is ``@ d/dt - i d/dx - j d/dy - k d/dz``.  It is
applied analytically to three kinds of fields:

* scalar plane waves ``amplitude * exp(sign * @ <p,q>)``,
* constant complex-quaternion amplitudes times the same phase,
* linear scalar functions ``<a,q> + offset`` (and linear combinations of
  those with constant left coefficients).

On the phase the operator acts as left multiplication by ``sign * @ p``; the
conjugated operator inserts ``sign * @ quat_conj(p)``.  Particles carry the
phase sign -1 (``exp(-@<p,q>)`` with positive energy), antiparticles +1.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass, replace
from .algebra import AT, CQ, I, J, K, complex_conj, quat_conj, trace
from .errors import MasslessUnsupported, OffShell, UnsupportedField
from .relativity import LorentzRotor, MinkowskiVector, apply_lorentz, scalar_product

__all__ = [
    "PARTICLE",
    "ANTIPARTICLE",
    "PlaneWaveScalarField",
    "PlaneWaveField",
    "PlaneWaveSpinorField",
    "LinearScalarFunction",
    "LinearCQField",
    "coordinate_field",
    "apply_D",
    "apply_Dbar",
    "klein_gordon_residual",
    "dirac_residual",
    "make_solution",
    "transform_spinor",
    "on_shell_momentum",
    "is_on_shell",
]

PARTICLE = -1
ANTIPARTICLE = +1

_ON_SHELL_REL = 1e-9


@dataclass(frozen=True)
class PlaneWaveScalarField:
    """``amplitude * exp(phase_sign * @ <p, q>)`` with a complex amplitude."""

    amplitude: complex
    momentum: MinkowskiVector
    phase_sign: int = PARTICLE

    def evaluate(self, q: MinkowskiVector) -> complex:
        return self.amplitude * cmath.exp(1j * self.phase_sign * scalar_product(self.momentum, q))


@dataclass(frozen=True)
class PlaneWaveField:
    """A constant complex-quaternion amplitude times the plane-wave phase."""

    amplitude: CQ
    momentum: MinkowskiVector
    phase_sign: int = PARTICLE

    def evaluate(self, q: MinkowskiVector) -> CQ:
        return self.amplitude * cmath.exp(1j * self.phase_sign * scalar_product(self.momentum, q))


@dataclass(frozen=True)
class PlaneWaveSpinorField:
    """Two complex-quaternion amplitudes sharing one plane-wave phase."""

    psi1: CQ
    psi2: CQ
    momentum: MinkowskiVector
    phase_sign: int = PARTICLE
    mass: float = 0.0

    def component(self, index: int) -> PlaneWaveField:
        amp = self.psi1 if index == 1 else self.psi2
        return PlaneWaveField(amp, self.momentum, self.phase_sign)

    def evaluate(self, q: MinkowskiVector) -> tuple[CQ, CQ]:
        phase = cmath.exp(1j * self.phase_sign * scalar_product(self.momentum, q))
        return self.psi1 * phase, self.psi2 * phase


@dataclass(frozen=True)
class LinearScalarFunction:
    """``alpha(q) = <gradient, q> + offset``, a real scalar function."""

    gradient: MinkowskiVector
    offset: float = 0.0

    def __call__(self, q: MinkowskiVector) -> float:
        return scalar_product(self.gradient, q) + self.offset


@dataclass(frozen=True)
class LinearCQField:
    """A finite sum of constant coefficients times linear scalar functions."""

    terms: tuple[tuple[CQ, LinearScalarFunction], ...]

    def evaluate(self, q: MinkowskiVector) -> CQ:
        out = CQ()
        for coeff, alpha in self.terms:
            out = out + coeff * alpha(q)
        return out


def coordinate_field() -> LinearCQField:
    """The identity map ``q -> @t + ix + jy + kz`` as a linear field."""
    return LinearCQField(
        (
            (AT, LinearScalarFunction(MinkowskiVector(t=1.0))),
            (I, LinearScalarFunction(MinkowskiVector(x=-1.0))),
            (J, LinearScalarFunction(MinkowskiVector(y=-1.0))),
            (K, LinearScalarFunction(MinkowskiVector(z=-1.0))),
        )
    )


def _d_linear_term(coeff: CQ, alpha: LinearScalarFunction, conjugated: bool) -> CQ:
    # D(c * alpha) = @ c a_t + i c a_x + j c a_y + k c a_z for alpha = <a, q>;
    # the conjugated operator flips the spatial unit signs.
    a = alpha.gradient
    s = -1.0 if conjugated else 1.0
    return AT * coeff * a.t + s * (I * coeff * a.x + J * coeff * a.y + K * coeff * a.z)


def _momentum_insertion(f, conjugated: bool) -> CQ:
    p = f.momentum.cq
    if conjugated:
        p = quat_conj(p)
    return (1j * f.phase_sign) * p


def _apply(f, conjugated: bool):
    if isinstance(f, PlaneWaveScalarField):
        return PlaneWaveField(_momentum_insertion(f, conjugated) * f.amplitude, f.momentum, f.phase_sign)
    if isinstance(f, PlaneWaveField):
        return PlaneWaveField(_momentum_insertion(f, conjugated) * f.amplitude, f.momentum, f.phase_sign)
    if isinstance(f, LinearScalarFunction):
        return _d_linear_term(CQ(1), f, conjugated)
    if isinstance(f, LinearCQField):
        out = CQ()
        for coeff, alpha in f.terms:
            out = out + _d_linear_term(coeff, alpha, conjugated)
        return out
    raise UnsupportedField(f"cannot differentiate {type(f).__name__}")


def apply_D(f):
    """Apply the differentiation operator analytically.

    Plane-wave inputs return a :class:`PlaneWaveField` (left multiplication
    by ``sign * @ p`` on the amplitude); linear inputs return the constant
    complex quaternion.
    """
    return _apply(f, conjugated=False)


def apply_Dbar(f):
    """Apply the quaternion-conjugated operator (inserts ``sign * @ quat_conj(p)``)."""
    return _apply(f, conjugated=True)


def _shell_residual(p: MinkowskiVector, m: float) -> float:
    return abs(trace(p.cq * quat_conj(p.cq)).real + m * m)


def is_on_shell(p: MinkowskiVector, m: float) -> bool:
    return _shell_residual(p, m) <= _ON_SHELL_REL * max(1.0, p.t * p.t)


def on_shell_momentum(spatial, m: float, energy_sign: int = 1) -> MinkowskiVector:
    """The momentum ``@E + i p_x + j p_y + k p_z`` with ``E = sqrt(p^2 + m^2)``."""
    px, py, pz = (float(v) for v in spatial)
    e = energy_sign * (px * px + py * py + pz * pz + m * m) ** 0.5
    return MinkowskiVector(e, px, py, pz)


def klein_gordon_residual(f: PlaneWaveScalarField, m: float) -> complex:
    """The constant by which ``(-Dbar D + m^2)`` scales the field; zero iff on-shell."""
    p = f.momentum.cq
    return (trace(p * quat_conj(p)) + m * m) * f.amplitude


def _coupling(A) -> tuple[CQ, CQ]:
    """Constant minimal-coupling insertions (@eA for D, @e conj(A) for Dbar)."""
    if A is None:
        return CQ(), CQ()
    if isinstance(A, CQ):
        return A, quat_conj(A)
    raise UnsupportedField("minimal coupling requires a constant potential here")


def dirac_residual(field: PlaneWaveSpinorField, A: CQ | None = None, e: float = 0.0):
    """Amplitude pair of the (coupled) Dirac operator applied to the field.

    Returns ``(-m psi1 + D_A psi2, Dbar_A psi1 - m psi2)`` with the shared
    phase factored out; both vanish exactly on solutions.  ``A`` must be a
    constant complex quaternion (plane-wave potentials leave the family).
    """
    a_up, a_dn = _coupling(A)
    m = field.mass
    d = _momentum_insertion(field, conjugated=False) + (1j * e) * a_up
    dbar = _momentum_insertion(field, conjugated=True) + (1j * e) * a_dn
    return (-m) * field.psi1 + d * field.psi2, dbar * field.psi1 + (-m) * field.psi2


def make_solution(p: MinkowskiVector, m: float, kind: str, phi: CQ) -> PlaneWaveSpinorField:
    """Plane-wave Dirac solution with upper amplitude ``phi``.

    The lower amplitude is ``-sign/m * @ quat_conj(p) * phi`` where sign is
    -1 for particles and +1 for antiparticles, matching the rest-frame pair
    ``(psi, +-psi) exp(-+ @ m t)``.
    """
    if m <= 0.0:
        raise MasslessUnsupported("solution construction divides by the mass")
    if kind not in ("particle", "antiparticle"):
        raise ValueError(f"unknown kind {kind!r}")
    if not is_on_shell(p, m):
        raise OffShell(f"momentum residual {_shell_residual(p, m):g}")
    sign = PARTICLE if kind == "particle" else ANTIPARTICLE
    xi = (1j * sign / m) * quat_conj(p.cq) * phi
    return PlaneWaveSpinorField(phi, xi, p, sign, m)


def transform_spinor(rotor: LorentzRotor, field: PlaneWaveSpinorField) -> PlaneWaveSpinorField:
    """``psi1 -> omega psi1``, ``psi2 -> complex_conj(omega) psi2``, boosted momentum."""
    return replace(
        field,
        psi1=rotor.omega * field.psi1,
        psi2=complex_conj(rotor.omega) * field.psi2,
        momentum=apply_lorentz(rotor, field.momentum),
    )
