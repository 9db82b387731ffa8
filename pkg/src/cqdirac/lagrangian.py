"""Pointwise Lagrangian densities, field strength and a periodic-box action.

The free density is the traced expression

    tr( conj(psi1)* Dbar psi1 + conj(psi2)* D psi2
        - m conj(psi1)* psi2 - m conj(psi2)* psi1 )

with ``conj(psi)*`` shorthand for complex_conj(quat_conj(psi(q))).  Spinor
arguments may be a single plane-wave spinor field or a finite superposition
(any sequence of them); all derivatives are taken analytically.

The action is a uniform Riemann sum over a periodic box, which is exact for
the band-limited plane-wave integrands as long as every momentum component
closes over the box.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Sequence

import numpy as np

from .algebra import CQ, complex_conj, isclose, qconj, qmul, quat_conj, trace
from .errors import IncommensurateMomenta, UnsupportedField
from .relativity import MinkowskiVector
from .wave import PlaneWaveField, PlaneWaveSpinorField, apply_D, apply_Dbar

__all__ = [
    "PotentialField",
    "FieldStrength",
    "l0_density",
    "l_int_density",
    "field_strength",
    "la_density",
    "lqed_density",
    "discrete_action",
    "is_symmetry",
]


@dataclass(frozen=True)
class PotentialField:
    """A vector potential: a constant part plus plane-wave parts.

    A physical potential has real time/space components pointwise,
    i.e. complex_conj(A(q)) == -quat_conj(A(q)); plane-wave parts must come
    in conjugate pairs (standing waves) for that to hold.
    """

    constant: CQ = CQ()
    waves: tuple[PlaneWaveField, ...] = ()

    def evaluate(self, q: MinkowskiVector) -> CQ:
        out = self.constant
        for wave in self.waves:
            out = out + wave.evaluate(q)
        return out

    def shifted(self, delta: CQ) -> "PotentialField":
        return replace(self, constant=self.constant + delta)

    def is_physical(self, probes=(), tol: float = 1e-9) -> bool:
        """Pointwise reality check at the origin and any extra probe points."""
        points = [MinkowskiVector()] + list(probes)
        for q in points:
            value = self.evaluate(q)
            if not isclose(complex_conj(value), -quat_conj(value), tol=tol):
                return False
        return True


@dataclass(frozen=True)
class FieldStrength:
    """The electromagnetic field strength at a point; no scalar part."""

    value: CQ


def _atoms(fields) -> tuple[PlaneWaveSpinorField, ...]:
    if isinstance(fields, PlaneWaveSpinorField):
        return (fields,)
    if isinstance(fields, Sequence):
        out = tuple(fields)
        if out and all(isinstance(f, PlaneWaveSpinorField) for f in out):
            return out
    raise UnsupportedField("expected a plane-wave spinor field or a sequence of them")


def _eval_sum(fields_1d: Sequence[PlaneWaveField], q: MinkowskiVector) -> CQ:
    out = CQ()
    for f in fields_1d:
        out = out + f.evaluate(q)
    return out


def _adjointed(value: CQ) -> CQ:
    return complex_conj(quat_conj(value))


def l0_density(fields, m: float, q: MinkowskiVector) -> complex:
    """The free Dirac Lagrangian density at ``q``."""
    atoms = _atoms(fields)
    psi1 = _eval_sum([f.component(1) for f in atoms], q)
    psi2 = _eval_sum([f.component(2) for f in atoms], q)
    dbar1 = _eval_sum([apply_Dbar(f.component(1)) for f in atoms], q)
    d2 = _eval_sum([apply_D(f.component(2)) for f in atoms], q)
    a1 = _adjointed(psi1)
    a2 = _adjointed(psi2)
    return trace(a1 * dbar1 + a2 * d2 - m * (a1 * psi2) - m * (a2 * psi1))


def l_int_density(fields, A: PotentialField, e: float, q: MinkowskiVector) -> complex:
    """The minimal-coupling interaction density at ``q``."""
    atoms = _atoms(fields)
    psi1 = _eval_sum([f.component(1) for f in atoms], q)
    psi2 = _eval_sum([f.component(2) for f in atoms], q)
    a_val = A.evaluate(q)
    term1 = _adjointed(psi1) * quat_conj(a_val) * psi1
    term2 = _adjointed(psi2) * a_val * psi2
    return trace((1j * e) * (term1 + term2))


def field_strength(A: PotentialField, q: MinkowskiVector) -> FieldStrength:
    """Half the anti-scalar part of the conjugated derivative of ``A``."""
    x = CQ()
    for wave in A.waves:
        x = x + apply_Dbar(wave).evaluate(q)
    return FieldStrength(0.5 * (x - quat_conj(x)))


def la_density(A: PotentialField, q: MinkowskiVector) -> float:
    """Free electromagnetic density: quarter trace of ``F^2 + (F*)^2``; real."""
    f = field_strength(A, q).value
    fc = complex_conj(f)
    value = 0.25 * trace(f * f + fc * fc)
    return value.real


def lqed_density(fields, A: PotentialField, m: float, e: float, q: MinkowskiVector) -> complex:
    """Total density: free + interaction + electromagnetic parts."""
    return l0_density(fields, m, q) + l_int_density(fields, A, e, q) + la_density(A, q)


def is_symmetry(sigma: CQ, tol: float = 1e-9) -> bool:
    """Whether right multiplication by ``sigma`` preserves the free density."""
    return isclose(sigma * complex_conj(quat_conj(sigma)), CQ(1), tol=tol)


def _check_commensurate(atoms, box) -> None:
    extents = np.asarray(box, dtype=float)
    for f in atoms:
        comps = f.momentum.components
        cycles = comps * extents / (2 * math.pi)
        if np.max(np.abs(cycles - np.round(cycles))) > 1e-9:
            raise IncommensurateMomenta(
                f"momentum {tuple(comps)} does not close over box {tuple(extents)}"
            )


def discrete_action(fields, m: float, box, n: int) -> complex:
    """Riemann sum of the free density over a uniform periodic grid.

    ``box`` holds the four extents (t, x, y, z); ``n`` is the number of grid
    points per axis.  Every atom's momentum must be commensurate with the
    box, otherwise :class:`IncommensurateMomenta` is raised.
    """
    atoms = _atoms(fields)
    _check_commensurate(atoms, box)
    extents = np.asarray(box, dtype=float)
    axes = [np.arange(n) * (extent / n) for extent in extents]
    xs, ys, zs = np.meshgrid(axes[1], axes[2], axes[3], indexing="ij")
    xs, ys, zs = xs.ravel(), ys.ravel(), zs.ravel()

    # Precompute per-atom constants: amplitudes and analytic derivative amplitudes.
    consts = []
    for f in atoms:
        consts.append(
            (
                f.psi1.coeffs,
                f.psi2.coeffs,
                apply_Dbar(f.component(1)).amplitude.coeffs,
                apply_D(f.component(2)).amplitude.coeffs,
                f.momentum,
                f.phase_sign,
            )
        )

    total = 0.0 + 0.0j
    npts = xs.size
    for t in axes[0]:
        psi1 = np.zeros((npts, 4), dtype=complex)
        psi2 = np.zeros((npts, 4), dtype=complex)
        dbar1 = np.zeros((npts, 4), dtype=complex)
        d2 = np.zeros((npts, 4), dtype=complex)
        for c1, c2, cb1, cd2, p, sign in consts:
            theta = p.t * t - p.x * xs - p.y * ys - p.z * zs
            phase = np.exp(1j * sign * theta)[:, None]
            psi1 += phase * c1
            psi2 += phase * c2
            dbar1 += phase * cb1
            d2 += phase * cd2
        a1 = np.conj(qconj(psi1))
        a2 = np.conj(qconj(psi2))
        density = (
            qmul(a1, dbar1)[:, 0]
            + qmul(a2, d2)[:, 0]
            - m * qmul(a1, psi2)[:, 0]
            - m * qmul(a2, psi1)[:, 0]
        )
        total += np.sum(density)
    volume = float(np.prod(extents))
    return complex(total * volume / (npts * n))
