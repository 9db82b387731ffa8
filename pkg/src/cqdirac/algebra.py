"""Complex-quaternion (biquaternion) arithmetic.

A complex quaternion is written

    (w + @ wI) 1 + (x + @ xI) i + (y + @ yI) j + (z + @ zI) k

with eight real coefficients.  The commuting complex unit is rendered as
``@`` throughout; ``i``, ``j``, ``k`` are the quaternion units.  Internally
the element is held as four complex coefficients (the imaginary part of each
being the ``@`` component), which makes products plain quaternion products
over the complex field.

Two conjugations exist: :func:`complex_conj` negates ``@`` and leaves
``i, j, k`` alone; :func:`quat_conj` negates ``i, j, k`` and reverses
products.  The scalar part of ``a * quat_conj(a)`` is the quadric of ``a``;
it vanishes exactly on the non-invertible (null) elements.

The algebra is isomorphic to the 2x2 complex matrices; the convention used
here is ``1 -> I``, ``i -> -1j*sigma1``, ``j -> -1j*sigma2``,
``k -> -1j*sigma3`` and ``@ -> 1j*I``, which makes the map multiplicative
with ``det == quadric``.
"""

from __future__ import annotations

import numbers

import numpy as np

from .errors import NotInvertible

__all__ = [
    "CQ",
    "ZERO",
    "ONE",
    "AT",
    "I",
    "J",
    "K",
    "complex_conj",
    "quat_conj",
    "trace",
    "quadric",
    "invert",
    "is_null",
    "qmul",
    "qconj",
    "render",
    "to_matrix",
    "from_matrix",
    "coeff_norm",
    "max_coeff_diff",
    "isclose",
    "random_cq",
    "NULL_REL_THRESHOLD",
    "ATOL",
]

# Comparison tolerance: double-precision headroom for products of <= 8 factors.
ATOL = 1e-12
# Relative quadric threshold below which an element counts as null.
NULL_REL_THRESHOLD = 1e-10

_SIGMA = np.array(
    [
        [[0, 1], [1, 0]],
        [[0, -1j], [1j, 0]],
        [[1, 0], [0, -1]],
    ],
    dtype=complex,
)


class CQ:
    """An immutable complex quaternion.

    Constructed from four complex coefficients (of 1, i, j, k); the
    imaginary part of each coefficient is its ``@`` component.
    """

    __slots__ = ("_c",)

    def __init__(self, w=0.0, x=0.0, y=0.0, z=0.0):
        c = np.array([w, x, y, z], dtype=complex)
        c.setflags(write=False)
        object.__setattr__(self, "_c", c)

    @classmethod
    def from_coeffs(cls, coeffs) -> "CQ":
        coeffs = np.asarray(coeffs, dtype=complex)
        if coeffs.shape != (4,):
            raise ValueError("expected four complex coefficients")
        return cls(*coeffs)

    @classmethod
    def from_reals(cls, reals) -> "CQ":
        """Build from the eight real coefficients (w, wI, x, xI, y, yI, z, zI)."""
        r = np.asarray(reals, dtype=float)
        if r.shape != (8,):
            raise ValueError("expected eight real coefficients")
        return cls(*(r[0::2] + 1j * r[1::2]))

    @property
    def coeffs(self) -> np.ndarray:
        """The four complex coefficients (w, x, y, z)."""
        return self._c

    @property
    def reals(self) -> np.ndarray:
        """The eight real coefficients (w, wI, x, xI, y, yI, z, zI)."""
        out = np.empty(8)
        out[0::2] = self._c.real
        out[1::2] = self._c.imag
        return out

    @property
    def w(self) -> complex:
        return complex(self._c[0])

    @property
    def x(self) -> complex:
        return complex(self._c[1])

    @property
    def y(self) -> complex:
        return complex(self._c[2])

    @property
    def z(self) -> complex:
        return complex(self._c[3])

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return CQ(*(self._c + other._c))

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return CQ(*(self._c - other._c))

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return CQ(*(other._c - self._c))

    def __neg__(self):
        return CQ(*(-self._c))

    def __mul__(self, other):
        if isinstance(other, numbers.Number):
            return CQ(*(self._c * complex(other)))
        if isinstance(other, CQ):
            return CQ(*qmul(self._c, other._c))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, numbers.Number):
            return CQ(*(self._c * complex(other)))
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, numbers.Number):
            return CQ(*(self._c / complex(other)))
        return NotImplemented

    def __eq__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return bool(np.array_equal(self._c, other._c))

    def __hash__(self):
        return hash(self._c.tobytes())

    def __repr__(self):
        return f"CQ({self})"

    def __str__(self):
        return render(self)


def _coerce(value):
    if isinstance(value, CQ):
        return value
    if isinstance(value, numbers.Number):
        return CQ(complex(value))
    return None


def qmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Quaternion product on (..., 4) complex coefficient arrays.

    The complex entries carry the commuting ``@`` unit, so the product is
    the plain quaternion formula over complex numbers.
    """
    w1, x1, y1, z1 = (a[..., n] for n in range(4))
    w2, x2, y2, z2 = (b[..., n] for n in range(4))
    return np.stack(
        [
            w1 * w2 - x1 * x2 - y1 * y2 - z1 * z2,
            w1 * x2 + x1 * w2 + y1 * z2 - z1 * y2,
            w1 * y2 - x1 * z2 + y1 * w2 + z1 * x2,
            w1 * z2 + x1 * y2 - y1 * x2 + z1 * w2,
        ],
        axis=-1,
    )


def qconj(a: np.ndarray) -> np.ndarray:
    """Quaternionic conjugation on (..., 4) coefficient arrays."""
    out = a.copy()
    out[..., 1:] = -out[..., 1:]
    return out


ZERO = CQ()
ONE = CQ(1)
AT = CQ(1j)
I = CQ(0, 1)
J = CQ(0, 0, 1)
K = CQ(0, 0, 0, 1)


def complex_conj(a: CQ) -> CQ:
    """Negate the ``@`` parts; leaves i, j, k unchanged.  Multiplicative."""
    return CQ(*np.conj(a.coeffs))


def quat_conj(a: CQ) -> CQ:
    """Negate the i, j, k parts; reverses product order."""
    return CQ(*qconj(a.coeffs))


def trace(a: CQ) -> complex:
    """The scalar part of ``a``: half of ``a + quat_conj(a)``."""
    return a.w


def quadric(a: CQ) -> complex:
    """Scalar part of ``a * quat_conj(a)``; sum of squared complex coefficients."""
    return complex(np.sum(a.coeffs * a.coeffs))


def coeff_norm(a: CQ) -> float:
    """Euclidean norm of the eight real coefficients."""
    return float(np.linalg.norm(a.coeffs))


def is_null(a: CQ, threshold_rel: float = NULL_REL_THRESHOLD) -> bool:
    """Whether the quadric vanishes relative to the squared coefficient norm."""
    n2 = float(np.sum(np.abs(a.coeffs) ** 2))
    return abs(quadric(a)) <= threshold_rel * max(n2, 1e-300)


def invert(a: CQ, threshold_rel: float = NULL_REL_THRESHOLD) -> CQ:
    """Multiplicative inverse ``quat_conj(a) / quadric(a)``.

    Raises :class:`NotInvertible` for null elements, i.e. when the quadric
    magnitude is below ``threshold_rel`` times the squared coefficient norm.
    """
    q = quadric(a)
    if is_null(a, threshold_rel):
        raise NotInvertible(f"quadric {q!r} vanishes relative to coefficient scale")
    return CQ(*(qconj(a.coeffs) / q))


def to_matrix(a: CQ) -> np.ndarray:
    """The 2x2 complex matrix image of ``a`` (multiplicative, det == quadric)."""
    w, x, y, z = a.coeffs
    return np.array(
        [
            [w - 1j * z, -1j * x - y],
            [-1j * x + y, w + 1j * z],
        ],
        dtype=complex,
    )


def from_matrix(m: np.ndarray) -> CQ:
    """Inverse of :func:`to_matrix`."""
    m = np.asarray(m, dtype=complex)
    if m.shape != (2, 2):
        raise ValueError("expected a 2x2 complex matrix")
    w = (m[0, 0] + m[1, 1]) / 2
    z = 1j * (m[0, 0] - m[1, 1]) / 2
    x = 1j * (m[0, 1] + m[1, 0]) / 2
    y = (m[1, 0] - m[0, 1]) / 2
    return CQ(w, x, y, z)


def max_coeff_diff(a: CQ, b: CQ) -> float:
    """Max absolute difference over the eight real coefficients."""
    return float(np.max(np.abs(a.coeffs - b.coeffs)))


def isclose(a: CQ, b: CQ, tol: float = ATOL) -> bool:
    """Equality up to ``tol * max(1, input scale)`` on the coefficients."""
    scale = max(1.0, float(np.max(np.abs(a.coeffs))), float(np.max(np.abs(b.coeffs))))
    return max_coeff_diff(a, b) <= tol * scale


def random_cq(rng: np.random.Generator, scale: float = 1.0) -> CQ:
    """A complex quaternion with independent standard-normal real coefficients."""
    return CQ.from_reals(scale * rng.standard_normal(8))


_TERMS = (
    (0, "real", ""),
    (0, "imag", "@"),
    (1, "real", "i"),
    (1, "imag", "@i"),
    (2, "real", "j"),
    (2, "imag", "@j"),
    (3, "real", "k"),
    (3, "imag", "@k"),
)


def render(a: CQ) -> str:
    """Canonical text form ``w+wI@+xi+xI@i+yj+yI@j+zk+zI@k``, zeros omitted."""
    parts = []
    for idx, attr, unit in _TERMS:
        value = getattr(a.coeffs[idx], attr)
        if value == 0.0:
            continue
        body = f"{abs(value):g}{unit}"
        if abs(value) == 1.0 and unit:
            body = unit
        if not parts:
            parts.append(body if value > 0 else f"-{body}")
        else:
            parts.append(f"+{body}" if value > 0 else f"-{body}")
    return "".join(parts) if parts else "0"
