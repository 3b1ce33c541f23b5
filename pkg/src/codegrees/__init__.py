"""Exact character tables, codegrees and pseudo-algebra invariants of
small finite groups given by permutation generators."""

from .analysis import (Lemma22Prediction, Report, Thm12Certificate,
                       check_lemma21, check_lemma22, counting_identity,
                       frattini_quotient_check, lemma22_feasible_orders,
                       thm12_certificate, thm23_scan, verify_counterexample)
from .catalog import CatalogEntry, CatalogError, load_catalog
from .constructors import (GroupSpec, abelian_group, build_group, cyclic_group,
                           dihedral_group, direct_product, parse_group_spec,
                           ut3_group)
from .dixon import (Character, CharTable, DixonContext, char_table,
                    choose_dixon_prime, class_constants, degree_set, kernel_of)
from .groups import (CapExceededError, ConjClasses, Group, Subgroup, center,
                     close_group, conjugacy_classes, derived_subgroup, exponent,
                     frattini_subgroup, from_multiplication, is_cyclic,
                     is_metacyclic, make_subgroup, maximal_subgroups_of_normal,
                     quotient_group)
from .perms import compose, identity, inverse, perm_from_cycles, perm_from_images
from .pseudo import (AbelianType, NotAbelianRealizableError, PseudoAlgebra,
                     abelian_pseudo, codegree, parse_abelian_type, parse_pseudo,
                     prime_power_spectrum, pseudo_algebra, pseudo_equal,
                     reconstruct_abelian)

__all__ = [name for name in dir() if not name.startswith("_")]
