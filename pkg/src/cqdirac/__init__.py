"""Numerical complex-quaternion formulation of special relativity and the
Dirac equation, with an independent gamma-matrix oracle and check suites."""

from .algebra import (
    AT,
    CQ,
    I,
    J,
    K,
    ONE,
    complex_conj,
    from_matrix,
    invert,
    quadric,
    quat_conj,
    to_matrix,
    trace,
)
from .relativity import (
    LorentzRotor,
    MinkowskiVector,
    apply_covariant,
    apply_lorentz,
    proper_time_sq,
    rotor_boost,
    rotor_rotation,
    scalar_product,
)
from .wave import (
    PlaneWaveField,
    PlaneWaveScalarField,
    PlaneWaveSpinorField,
    apply_D,
    apply_Dbar,
    dirac_residual,
    klein_gordon_residual,
    make_solution,
    transform_spinor,
)

__version__ = "0.1.0"
