"""Lattice-free Schubitopes: exact enumeration, Ehrhart polynomials and Newton polytopes."""

from .combinatorics import (
    Composition, Diagram, MovableInterval, Permutation, avoids_lattice_free_patterns,
    composition_avoids_02, contains_pattern, criterion_check, format_diagram,
    hook_condition, movable_interval, movable_intervals, parse_diagram, rothe_diagram,
    skyline_diagram, theta, upper_closure_weight,
)
from .ehrhart import EhrhartMismatch, EhrhartPolynomial, ehrhart_factorization_check
from .matroid import SchubertMatroid, bases, rank, spanning_sets
from .polynomial import DivisionFault, Polynomial, divided_difference, grothendieck, key, schubert
from .polytope import (
    LatticePointSet, dilated_minkowski_points, dilated_schubitope_points, gp_certificate,
    hull_lattice_points, is_vertex, key_closures, lattice_free_check, spanning_polytope_points,
    support_property_checks,
)
from .verifier import (
    Report, verify_grothendieck_suite, verify_key_suite, verify_schubert_suite,
    verify_schubitope_criterion,
)

__version__ = "0.1.0"
