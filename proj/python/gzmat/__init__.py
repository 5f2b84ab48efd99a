"""Gelfand-Zeitlin integrable systems on complex matrices.

Thin python face of the C++ core: moment-map coordinates, the Hessenberg
cross-section, commuting Hamiltonian flows, fiber normal forms, symmetric
fiber enumeration, and the Jacobi-matrix bridge to orthogonal polynomials.
"""

from ._core import (
    DomainError,
    NumericalError,
    act,
    beta,
    beta_inverse,
    d,
    flow,
    invert_phi,
    invert_phi_with_subdiag,
    is_strongly_regular,
    jacobi_matrix,
    normal_form,
    orbit_dim,
    phi,
    selftest,
    symmetric_fiber,
    tower,
    verify_gz_commutativity,
    verify_monic_match,
)

__all__ = [
    "DomainError",
    "NumericalError",
    "act",
    "beta",
    "beta_inverse",
    "d",
    "flow",
    "invert_phi",
    "invert_phi_with_subdiag",
    "is_strongly_regular",
    "jacobi_matrix",
    "normal_form",
    "orbit_dim",
    "phi",
    "selftest",
    "symmetric_fiber",
    "tower",
    "verify_gz_commutativity",
    "verify_monic_match",
]
