"""Tree irregularity indices, generators, enumeration and claim checking."""

from treeirr._core import (  # noqa: F401
    Graph,
    Tree,
    __version__,
    albertson,
    canonical_code,
    caterpillar,
    caterpillar_irr_formula,
    claim_ids,
    compute_bundle,
    degree_sequence,
    evaluate_claims,
    extremal,
    fibonacci_caterpillar,
    fibonacci_degrees,
    forgotten,
    free_trees,
    general_albertson,
    imbalance_along_path,
    is_graphical,
    is_tree_realizable,
    labeled_tree_class_count,
    mainalb2_formula,
    majorizes,
    make_tree,
    parse_edgelist,
    parse_graph6,
    path,
    random_tree,
    realize_graph,
    realize_tree,
    run_cli,
    sigma,
    sigma_t,
    star,
    total_albertson,
    total_albertson_sorted_formula,
    tree_center,
    tree_from_graph6,
    write_edgelist,
    write_graph6,
    zagreb_m1,
    zagreb_m2,
)
