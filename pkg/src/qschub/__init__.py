"""Exact Hecke-algebra actions on the coinvariant algebra, over Z[q].

Two deformations of the variable-permutation action of the symmetric group on
polynomials: a q-commutator family built from divided differences, and a
monomial-sorting family with transition weight q.  Both preserve the ideal
generated by positive-degree symmetric functions, act on each graded piece of
the quotient in the Schubert basis, and share a graded character given by a
closed combinatorial weight sum.  Everything is computed exactly in Z[q].
"""

from .polyring import (
    MPoly,
    ONE_MINUS_Q,
    Q,
    QPoly,
    act_variable_permutation,
    is_i_symmetric,
    parse_mpoly,
    parse_qpoly,
    specialize_q,
)
from .perm import (
    CosetDecomposition,
    canonical_reduced_word,
    coset_decompose,
    coset_weight,
    cycle_type,
    knuth_classes,
    length,
    partition_word,
    partitions_of,
    perms_of_length,
    valley_weight,
)
from .operators import (
    GeneratorOp,
    a_minus_r_factor,
    apply_generator,
    apply_partial_w,
    apply_word,
    check_relations,
    commutation_suite,
    divided_difference,
    format_word,
    parse_word,
)
from .schubert import (
    CoinvariantVector,
    SchubertTable,
    build_schubert_table,
    expand_homogeneous,
    monk_products,
    x_action_on_schubert,
)
from .rep import (
    BCSplit,
    CharacterValue,
    RepMatrix,
    basis_element_matrix,
    bc_scan,
    bc_split,
    descent_column_formula,
    generator_matrix,
    graded_character,
    knuth_class_character,
    symmetric_group_character,
    trace_equivalence_report,
    weight_character,
    word_matrix,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
