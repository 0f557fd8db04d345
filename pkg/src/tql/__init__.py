"""tql: exact classification of finite groups acting maximally on surfaces,
handlebodies and bounded surfaces, via generating-tuple searches in
permutation groups."""

__version__ = "0.1.0"

from .perm import (
    Permutation,
    GroupHandle,
    GroupMetadata,
    build_group,
    coset_action,
    generates,
    parse_cycles,
    read_generator_file,
)
from .zoo import (
    FiniteField,
    make_psl2,
    make_pgl2,
    make_standard,
    direct_product,
    load_group,
    parse_group_spec,
)
from .fuchsian import (
    Signature,
    euler_characteristic,
    subgroup_index,
    surface_genus_from_order,
    subgroup_signature,
    abelianization,
    enumerate_subgroup_signatures,
)
from .episearch import (
    find_triples,
    find_quadruples,
    classify,
    inverting_involution_exists,
    g7_quadruple_from_triple,
    extended_hurwitz_test,
    extended_hurwitz_survey,
    hurwitz_survey_psl2,
    find_subgroups_of_order,
    irreducible_subgroups,
    handles_bookkeeping,
    theorem1_check,
    induced_quadruple,
)

__all__ = [
    "Permutation", "GroupHandle", "GroupMetadata", "build_group", "coset_action",
    "generates", "parse_cycles", "read_generator_file",
    "FiniteField", "make_psl2", "make_pgl2", "make_standard", "direct_product",
    "load_group", "parse_group_spec",
    "Signature", "euler_characteristic", "subgroup_index", "surface_genus_from_order",
    "subgroup_signature", "abelianization", "enumerate_subgroup_signatures",
    "find_triples", "find_quadruples", "classify", "inverting_involution_exists",
    "g7_quadruple_from_triple", "extended_hurwitz_test", "extended_hurwitz_survey",
    "hurwitz_survey_psl2", "find_subgroups_of_order", "irreducible_subgroups",
    "handles_bookkeeping", "theorem1_check", "induced_quadruple",
]
