"""Minkowski embedding and Lorentz transformations as rotor sandwich products.

Events and four-momenta are purely imaginary complex quaternions
``@t + ix + jy + kz`` with real components (c = hbar = 1).  A Lorentz
transformation is ``q -> omega * q * complex_conj(quat_conj(omega))`` for a
unit rotor ``omega``; rotations are ``cos(theta/2) + n sin(theta/2)`` and
boosts ``cosh(L/2) + @ n sinh(L/2)`` around/along a real unit axis ``n``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .algebra import CQ, complex_conj, isclose, quat_conj
from .errors import BadDirection, BadRotor, NotMinkowski

__all__ = [
    "MinkowskiVector",
    "LorentzRotor",
    "scalar_product",
    "proper_time_sq",
    "rotor_rotation",
    "rotor_boost",
    "apply_lorentz",
    "apply_covariant",
    "random_direction",
]

# Construction clamps smaller real-part contamination to zero, errors above.
_IMPURITY_TOL = 1e-12


@dataclass(frozen=True)
class MinkowskiVector:
    """A purely imaginary complex quaternion ``@t + ix + jy + kz``."""

    t: float = 0.0
    x: float = 0.0
    y: float = 0.0
    z: float = 0.0

    @property
    def cq(self) -> CQ:
        return CQ(1j * self.t, self.x, self.y, self.z)

    @property
    def spatial(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z])

    @property
    def components(self) -> np.ndarray:
        return np.array([self.t, self.x, self.y, self.z])

    @classmethod
    def from_cq(cls, q: CQ) -> "MinkowskiVector":
        """Read off (t, x, y, z), clamping roundoff in the forbidden slots.

        The real scalar part and the ``@`` parts of i, j, k must vanish up to
        ``1e-12 * scale``; larger contamination raises :class:`NotMinkowski`.
        """
        c = q.coeffs
        scale = max(1.0, float(np.max(np.abs(c))))
        impurity = max(abs(c[0].real), abs(c[1].imag), abs(c[2].imag), abs(c[3].imag))
        if impurity > _IMPURITY_TOL * scale:
            raise NotMinkowski(f"impurity {impurity:g} exceeds tolerance at scale {scale:g}")
        return cls(float(c[0].imag), float(c[1].real), float(c[2].real), float(c[3].real))

    def __add__(self, other: "MinkowskiVector") -> "MinkowskiVector":
        return MinkowskiVector(self.t + other.t, self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other: "MinkowskiVector") -> "MinkowskiVector":
        return MinkowskiVector(self.t - other.t, self.x - other.x, self.y - other.y, self.z - other.z)

    def __mul__(self, s: float) -> "MinkowskiVector":
        return MinkowskiVector(self.t * s, self.x * s, self.y * s, self.z * s)

    __rmul__ = __mul__


def scalar_product(p: MinkowskiVector, q: MinkowskiVector) -> float:
    """The Lorentz-invariant product ``p.t q.t - p.x q.x - p.y q.y - p.z q.z``."""
    return p.t * q.t - p.x * q.x - p.y * q.y - p.z * q.z


def proper_time_sq(q: MinkowskiVector) -> float:
    """``t^2 - x^2 - y^2 - z^2``; equals ``scalar_product(q, q)``."""
    return scalar_product(q, q)


def _check_direction(n) -> np.ndarray:
    n = np.asarray(n, dtype=float)
    if n.shape != (3,):
        raise BadDirection("axis must be a real 3-vector")
    norm = float(np.linalg.norm(n))
    if abs(norm - 1.0) > 1e-9:
        raise BadDirection(f"axis norm {norm:g} is not 1")
    return n


def _axis_cq(n: np.ndarray) -> CQ:
    return CQ(0, n[0], n[1], n[2])


@dataclass(frozen=True)
class LorentzRotor:
    """A unit complex quaternion acting by the sandwich product.

    ``kind`` is informational; composites keep no canonical factorisation.
    """

    omega: CQ
    kind: str = "composite"
    axis: tuple = field(default=())
    angle: float = 0.0

    def __post_init__(self):
        if not isclose(self.omega * quat_conj(self.omega), CQ(1), tol=1e-9):
            raise BadRotor("omega * quat_conj(omega) != 1")

    def __mul__(self, other: "LorentzRotor") -> "LorentzRotor":
        return LorentzRotor(self.omega * other.omega)

    def inverse(self) -> "LorentzRotor":
        return LorentzRotor(quat_conj(self.omega), self.kind, self.axis, -self.angle)


def rotor_rotation(n, theta: float) -> LorentzRotor:
    """Rotation by ``theta`` around the unit axis ``n``."""
    n = _check_direction(n)
    omega = CQ(math.cos(theta / 2)) + math.sin(theta / 2) * _axis_cq(n)
    return LorentzRotor(omega, "rotation", tuple(n), theta)


def rotor_boost(n, rapidity: float) -> LorentzRotor:
    """Boost with the given rapidity along the unit axis ``n``."""
    n = _check_direction(n)
    omega = CQ(math.cosh(rapidity / 2)) + (1j * math.sinh(rapidity / 2)) * _axis_cq(n)
    return LorentzRotor(omega, "boost", tuple(n), rapidity)


def apply_lorentz(rotor: LorentzRotor, q: MinkowskiVector) -> MinkowskiVector:
    """``q -> omega q complex_conj(quat_conj(omega))``; stays purely imaginary."""
    w = rotor.omega
    out = w * q.cq * complex_conj(quat_conj(w))
    return MinkowskiVector.from_cq(out)


def apply_covariant(rotor: LorentzRotor, qbar: CQ) -> CQ:
    """Covariant action ``qbar -> complex_conj(omega) qbar quat_conj(omega)``."""
    w = rotor.omega
    return complex_conj(w) * qbar * quat_conj(w)


def random_direction(rng: np.random.Generator) -> np.ndarray:
    """Uniform unit 3-vector (normalised standard normals, tiny norms rejected)."""
    while True:
        v = rng.standard_normal(3)
        norm = float(np.linalg.norm(v))
        if norm >= 1e-8:
            return v / norm
