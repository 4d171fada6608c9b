"""Degree, distance-frequency, and neighboring arrays of undirected graphs;
generalized Lorenz majorization; small-world classification of network families."""

from .graph import (
    DisconnectedGraphError,
    DistanceStats,
    EdgeListParseError,
    Graph,
    canonical_form,
    degree_array,
    distance_matrix,
    distance_stats,
    enumerate_connected_graphs,
    enumerate_labeled_trees,
    is_connected,
    is_tree,
    parse_edge_list,
    spanning_tree,
    to_edge_list,
    triangle_count,
)
from .arrays import (
    alpha_array,
    degree_stats,
    density,
    gamma_array,
    gamma_via_adjacency,
    neighboring_index,
)
from .lorenz import (
    MajorizationVerdict,
    Relation,
    gini_generalized,
    gini_standard,
    lorenz_curve,
    majorize_compare,
    power_measure,
    theil,
)
from .families import (
    FamilySpec,
    chain,
    complete,
    find_graphs_matching,
    kite,
    ln_tree,
    make_family,
    polygon,
    s1,
    s2,
    spider,
    star,
)
from .catalog import CatalogEntry, catalog_figure, catalog_ids
from .smallworld import (
    GrowthReport,
    SWClassification,
    classify_degree_smallworld,
    classify_distance_smallworld,
    growth_report,
    known_classification,
    smaller_world_compare,
)
