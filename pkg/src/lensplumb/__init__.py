"""Exact computations for A_n plumbings of lens spaces and their cA_n mirrors.

From a list of slopes ``(k, l, sign)`` the package builds the polynomial
f = f_0 ... f_n, classifies the three-manifold cores, constructs the quiver
presentations on both sides of the correspondence, computes contraction
algebras and unit torsion, and checks the affine braid relations.  All
arithmetic is exact over QQ or F_p.
"""

__version__ = "0.1.0"

from .field import GF, QQ, PrimeField, parse_field
from .poly import Poly, PolyRing, series_invert
from .groebner import INFINITE, IdealBasis, groebner, quotient_dimension
from .geometry import (
    PlumbingSpec,
    SlopeDatum,
    SpecError,
    Truncation,
    assumptions,
    core_types,
    exceptional_curve_types,
    f_component,
    f_total,
    matching_cycle_type,
    validate_spec,
)
from .quiver import base_change, build_cyclic_presentation, build_linear_presentation, multiply, reduce
from .fukaya import build_fukaya_presentation, endomorphism_ring_check, psi, verify_psi_iso
from .dg import build_dg, dim_vector, h0
from .localization import build_localized, torsion_orders, unit_relations
from .braid import nontriviality_sample, rho_auto, sigma_auto, verify_presentation
