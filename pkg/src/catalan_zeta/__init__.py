"""Unit interval posets, plane trees, Dyck paths and the zeta map."""

from .core import (
    DyckPath,
    EncodingError,
    NotCanonicalError,
    NotUnitIntervalError,
    PlaneTree,
    Poset,
    area_vector,
    canonical_form,
    catalan,
    dyck_from_area,
    is_canonical,
    is_three_plus_one_free,
    is_two_plus_two_free,
    is_unit_interval,
    poset_from_starting_set,
    posets_isomorphic,
)
from .dyck_maps import phi, phi_inverse, phi_via_merge, psi, psi_inverse, zeta, zeta_classical_oracle
from .tree_maps import (
    check_parent_condition,
    lambda_bounce,
    lambda_poset,
    lambda_steep,
    node_value,
    starting_set_of_tree,
    xi_bounce,
    xi_poset,
    xi_steep,
)
from .verify import LawReport, enumerate_dyck, enumerate_posets, enumerate_trees, verify_all, verify_law

__version__ = "0.1.0"
