"""Exact verification of alternating-sum identities over chains of
pi-subgroups of finite permutation groups."""

from .perms import Permutation, perm_from_cycles, format_cycles
from .primes import PrimeSet, pi_part, is_pi_number, is_pi_prime_number
from .groups import (
    DEFAULT_ENUMERATION_BOUND,
    EnumerationBoundError,
    Group,
    Subgroup,
    ClassData,
    CosetAction,
    group_from_generators,
    conjugacy_classes,
    normalizer,
    centralizer_order,
    coset_action,
    subgroup_from_elements,
    trivial_subgroup,
)
from .structure import normal_closure, o_pi, o_pi_prime, is_pi_separable
from .pi_subgroups import SubgroupSet, enumerate_pi_subgroups
from .chains import (
    Chain,
    ChainOrbit,
    enumerate_chain_orbits,
    enumerate_all_chains,
    chain_stabilizer,
    funct_involution,
    push_chain_mod_k,
)
from .char_table import (
    CharTableModP,
    dixon_prime,
    character_table_mod_p,
    character_degrees,
    induced_trivial_values,
    restriction_multiplicity,
    class_fusion,
)
from .counts import DefectProfile, defect_profile, k_d, k_count, l_count, k_d_over
from .alt_sums import (
    ChainSumReport,
    OrbitTerm,
    theorem_a_sum,
    theorem_main_sum,
    mu_pi,
    corollary_b_check,
    webb_values,
    webb_report,
)
from .catalog import catalog_group, catalog_keys, catalog_entry

__all__ = [name for name in dir() if not name.startswith("_")]
