"""Bridge to the standard four-component chiral spinor formulation.

The oracle side is plain complex 4x4 matrix arithmetic: the chiral gamma
matrices and a plane-wave Dirac residual built from them, sharing no code
with the quaternion algebra.  The bridge expands each two-component
amplitude over the first closed spin subspace and reads off two complex
coordinates per component.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import CQ
from .errors import NotInSubspace
from .relativity import MinkowskiVector
from .wave import PlaneWaveSpinorField

__all__ = [
    "ChiralSpinor",
    "GammaSet",
    "CHIRAL_GAMMAS",
    "cq_to_chiral",
    "chiral_to_cq",
    "chiral_dirac_residual",
    "gamma_algebra_check",
]

_SIGMA = np.array(
    [
        [[0, 1], [1, 0]],
        [[0, -1j], [1j, 0]],
        [[1, 0], [0, -1]],
    ],
    dtype=complex,
)

# Coefficient vectors of the expansion basis of the first subspace.
_B1 = np.array([1, 0, 0, 1j], dtype=complex)   # 1 + @k
_B2 = np.array([0, 1j, 1, 0], dtype=complex)   # @i + j
_EXPANSION = np.stack([_B1, _B2], axis=-1)

_SUBSPACE_TOL = 1e-9


@dataclass(frozen=True)
class ChiralSpinor:
    """Four complex components in the chiral gamma representation."""

    c1: complex
    c2: complex
    c3: complex
    c4: complex

    @property
    def vector(self) -> np.ndarray:
        return np.array([self.c1, self.c2, self.c3, self.c4], dtype=complex)

    @classmethod
    def from_vector(cls, v) -> "ChiralSpinor":
        v = np.asarray(v, dtype=complex)
        return cls(*(complex(x) for x in v))


def _chiral_gammas() -> tuple[np.ndarray, ...]:
    zero = np.zeros((2, 2), dtype=complex)
    eye = np.eye(2, dtype=complex)
    g0 = np.block([[zero, eye], [eye, zero]])
    spatial = tuple(np.block([[zero, s], [-s, zero]]) for s in _SIGMA)
    return (g0,) + spatial


@dataclass(frozen=True)
class GammaSet:
    """The four gamma matrices of a representation."""

    g0: np.ndarray
    g1: np.ndarray
    g2: np.ndarray
    g3: np.ndarray

    @property
    def matrices(self) -> tuple[np.ndarray, ...]:
        return (self.g0, self.g1, self.g2, self.g3)


CHIRAL_GAMMAS = GammaSet(*_chiral_gammas())


def _expand(amplitude: CQ) -> np.ndarray:
    coeffs = amplitude.coeffs
    sol, *_ = np.linalg.lstsq(_EXPANSION, coeffs, rcond=None)
    residual = float(np.linalg.norm(_EXPANSION @ sol - coeffs))
    scale = max(1.0, float(np.linalg.norm(coeffs)))
    if residual > _SUBSPACE_TOL * scale:
        raise NotInSubspace("amplitude leaves the first spin subspace", residual=residual)
    return sol


def cq_to_chiral(field_or_psi1, psi2: CQ | None = None) -> ChiralSpinor:
    """Read off the four complex coordinates of a gauge-fixed spinor.

    Accepts either the two amplitudes or a plane-wave spinor field.  Both
    amplitudes must lie in the first closed subspace, otherwise
    :class:`NotInSubspace` carries the out-of-subspace residual.
    """
    if isinstance(field_or_psi1, PlaneWaveSpinorField):
        psi1, psi2 = field_or_psi1.psi1, field_or_psi1.psi2
    else:
        psi1 = field_or_psi1
    c12 = _expand(psi1)
    c34 = _expand(psi2)
    return ChiralSpinor(complex(c12[0]), complex(c12[1]), complex(c34[0]), complex(c34[1]))


def chiral_to_cq(c: ChiralSpinor) -> tuple[CQ, CQ]:
    """Rebuild the two amplitudes from four chiral components; exact inverse."""
    v = c.vector
    psi1 = CQ(*(_EXPANSION @ v[:2]))
    psi2 = CQ(*(_EXPANSION @ v[2:]))
    return psi1, psi2


def chiral_dirac_residual(
    c: ChiralSpinor,
    p: MinkowskiVector,
    m: float,
    phase_sign: int,
    gammas: GammaSet = CHIRAL_GAMMAS,
) -> np.ndarray:
    """Plane-wave Dirac residual in the gamma-matrix formulation.

    For components carrying the phase ``exp(phase_sign * 1j * <p, q>)`` the
    derivative insertion reduces the operator to a constant matrix; the four
    residual components vanish exactly on solutions.
    """
    g0, g1, g2, g3 = gammas.matrices
    slash = p.t * g0 - p.x * g1 - p.y * g2 - p.z * g3
    op = -phase_sign * slash - m * np.eye(4, dtype=complex)
    return op @ c.vector


def gamma_algebra_check(gammas: GammaSet = CHIRAL_GAMMAS) -> float:
    """Max deviation of the anticommutator table from 2 * diag(1,-1,-1,-1)."""
    eta = np.diag([1.0, -1.0, -1.0, -1.0])
    mats = gammas.matrices
    worst = 0.0
    for mu in range(4):
        for nu in range(4):
            anti = mats[mu] @ mats[nu] + mats[nu] @ mats[mu]
            target = 2.0 * eta[mu, nu] * np.eye(4)
            worst = max(worst, float(np.max(np.abs(anti - target))))
    return worst
