"""Numerical toolkit for the future tube, its invariant quotient and the
extended-tube geometry of the complex Lorentz group."""

__version__ = "0.1.0"

from .minkowski import DEFAULT_TOL, DomainError, Tolerance, eta, in_forward_cone, in_future_tube, lorentz_product
from .group import GroupElement, CartanParams, validate_group, exp_algebra, cartan_element
from .quotient import gram_quotient, radical, radical_basis, is_orbit_closed, isotropic_split
from .kaehler import rho, moment_map, levi_min_eigenvalue, minimize_rho_on_orbit, membership_certify

__all__ = [
    "__version__", "DEFAULT_TOL", "DomainError", "Tolerance", "eta", "in_forward_cone", "in_future_tube",
    "lorentz_product", "GroupElement", "CartanParams", "validate_group", "exp_algebra", "cartan_element",
    "gram_quotient", "radical", "radical_basis", "is_orbit_closed", "isotropic_split", "rho", "moment_map",
    "levi_min_eigenvalue", "minimize_rho_on_orbit", "membership_certify",
]
