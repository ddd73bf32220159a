"""Spectral solver for the quantum harmonic oscillator on a circle.

Thin re-export of the compiled extension. The circle is parametrized as the
segment [-ell, ell] with identified endpoints; beta selects the self-adjoint
extension of the Hamiltonian at the identification point.
"""

from ._core import (
    eigenfunction,
    free_delta_spectrum,
    kummer,
    ladder_step,
    large_ell_envelope,
    oracle_spectrum,
    shooting_residual,
    spectrum,
    verify,
    weber_even,
    weber_odd,
)

__all__ = [
    "eigenfunction",
    "free_delta_spectrum",
    "kummer",
    "ladder_step",
    "large_ell_envelope",
    "oracle_spectrum",
    "shooting_residual",
    "spectrum",
    "verify",
    "weber_even",
    "weber_odd",
]

__version__ = "0.1.0"
