"""Exact-distance squares of graphs and recognition of their square roots."""

from ._kernels import active_backend, available_backends, set_backend
from .anyroot import recognize_any_root, recognize_any_root_digraph
from .cliquedual import (
    CliqueCover,
    LabeledCliqueCover,
    TriangleFreeCollection,
    bipartite_root_to_cover,
    bruteforce_clique_collection,
    cover_to_bipartite_root,
    dual_transpose,
    extract_clique_dual,
    extract_collection_from_root,
    gadget_Gk,
    recognize_bipartite_root_structure,
    triangle_free_root_from_collection,
    verify_clique_cover,
    verify_clique_dual,
    verify_triangle_free_collection,
)
from .formats import (
    CertificateDocument,
    ParseError,
    emit_certificate_json,
    emit_dot,
    emit_edge_list,
    emit_graph6,
    parse_certificate_json,
    parse_edge_list,
    parse_graph6,
)
from .generators import gen_GS, gen_TL, random_clique_tree, random_tree
from .graphs import (
    BlockDecomposition,
    Digraph,
    Graph,
    VertexMapping,
    bipartition,
    block_decomposition,
    complement,
    complement_digraph,
    connected_components,
    exact_square,
    exact_square_digraph,
    is_clique_tree,
    is_tree,
)
from .limbs import Limb, limbs_of_rooted, limbs_of_unrooted, subtree_isomorphic
from .matching import (
    BipartiteMatrix,
    Matching,
    is_complete_for_rows,
    maximum_matching,
)
from .oracle import (
    BudgetError,
    bruteforce_any_root,
    bruteforce_bipartite_root,
    bruteforce_clique_cover,
    bruteforce_subtree_embedding,
    bruteforce_tree_roots,
    bruteforce_triangle_free_root,
    count_nonisomorphic_tree_roots,
    enumerate_all_graphs,
    enumerate_labeled_trees,
    small_graph_isomorphic,
    tree_canonical_form,
    tree_from_prufer,
)
from .treeroot import (
    CanonicalTree,
    EmbeddingMatrix,
    Stage1,
    TreeRootAnswer,
    canonical_tree,
    clique_tree_via_canonical,
    complete_tree_root,
    recognize_tree_root,
    restriction_iso,
    retrace_embedding,
    stage1,
    stage2_embedding_matrix,
)

__version__ = "0.1.0"
