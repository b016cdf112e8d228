"""Executable Stone-type dualities on finitely representable Boolean algebras and spaces.

Algebras are finite, finite-cofinite, or flat products of these.  Their
Stone spaces, the z/dz/ldz-algebras, local Boolean algebras, mz-maps, and
the functors between the corresponding categories are all computed exactly
on these representations.
"""
from .algebra import (Algebra, Element, FCSet, cofin, fc_algebra, fin, finite_algebra, make_algebra,
                      product_algebra)
from .catalog import Catalog, default_catalog, empty_catalog
from .errors import *  # noqa: F401,F403
from .functors import (DzAlgebra, DzMorphism, E_mor, E_obj, Ep_mor, Ep_obj, F_mor, F_obj, G_mor,
                       G_obj, G_space, LbaMorphism, check_EEp, check_EF_equals_theta_t, check_EpE,
                       check_GEp_equals_theta_a, dz_algebra, dz_identity, dz_morphism,
                       dz_morphism_check, lba_identity, lba_morphism, theta_a, theta_a_mor,
                       theta_a_points, theta_t, theta_t_mor, validate)
from .homs import (Homomorphism, all_homomorphisms, dual_point_map, hom_apply, hom_compose,
                   hom_identity, is_homomorphism, value_table)
from .ideals import (FINITE_SUPPORT, Ideal, LbaPair, L_set, NoJoinWitness, finite_support,
                     full_ideal, generated_by, ideal_member, iota, iota_inv, is_dense_ideal, is_lba,
                     is_simple_ideal, is_zlba, lba_condition, lba_pair, make_ideal, principal,
                     pseudocomplement, simple_ideals, zlba_by_joins)
from .laws import Report, law_suite
from .mbool import (MBoolMorphism, MzMap, At_mor, At_obj, Fp_mor, Fp_obj, Gp_mor, Gp_obj, P_mor,
                    P_obj, check_GpFp_iso, f_sigma, mz_from_table, validate_map_levels)
from .pointmap import Constant, IdentityLike, PointMap, Rule, rule
from .serialize import from_json, parse_object, render, to_json
from .spaces import (SpaceMap, SpacePresentation, co_algebra, coproduct, finite_space, hat_char,
                     hat_image, hat_map, k_omega, ko_ideal)
from .stone import (Character, PointSet, characters, char_eval, closure, interior, is_clopen_in,
                    is_compact, is_closed, is_dense, is_open, stone_set, trace)
from .verdict import Verdict

__version__ = "0.1.0"
