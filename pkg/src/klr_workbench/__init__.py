"""Graded combinatorics and small explicit modules for symmetric-group blocks as cyclotomic KLR algebras."""

from .cartan import Arith, Content, cartan_entry, form, null_root, q_poly
from .characters import FormalCharacter, column_char, gg_coefficient, gg_word, jacobi_trudi, shuffle
from .crystal import crystal_graph, e_tilde, f_tilde, signature, weight
from .dims import (
    block_graded_dim,
    branch_table,
    idempotent_graded_dim,
    socle_prediction,
    specht_graded_dim,
)
from .errors import ConfigurationError, DomainError, NotRestrictedError
from .garnir import garnir_data, garnir_element_symbolic, garnir_nodes, specht_presentation
from .klrmod import (
    GradedModule,
    character,
    check_relations,
    component_module,
    homogeneous_module,
    hook_module,
    word_graph_component,
)
from .mullineux import mullineux_crystal, mullineux_xu, xu_step
from .partitions import (
    addable_nodes,
    content,
    is_restricted,
    p_segments,
    removable_nodes,
    residue,
    transpose,
)
from .qlaurent import LaurentPoly, bar, quantum_factorial, quantum_int
from .roots import ConvexPreorder, preorder_cmp, real_roots_up_to, root_partitions
from .tableaux import (
    Tableau,
    bruhat_leq,
    leading_tableau,
    node_degree,
    residue_sequence,
    standard_tableaux,
    tableau_degree,
    tableau_permutation,
)

__version__ = "0.1.0"
