"""Wiener polarity index of benzenoid systems and nanotube graphs.

Structures live on an integer brick-wall embedding of the hexagonal
lattice; the index can be computed by brute-force distance counting, by
decomposition over the three edge directions, or by closed formulas, and
the three routes cross-validate each other.
"""

from .benzenoid import (
    BenzenoidError,
    BenzenoidSystem,
    CutStats,
    DisconnectedHexes,
    ExternalHexTally,
    HasHoles,
    benzenoid_stats,
    boundary_cycle,
    build_benzenoid,
    classify_external_hexagons,
    cut_stats,
    internal_vertex_count,
    random_benzenoid,
)
from .graph import ComponentShape, GraphError, MolGraph, build_graph, component_shape, girth
from .lattice import (
    Direction,
    HexCoord,
    HexFileError,
    LatticeError,
    edge_direction,
    hex_neighbors,
    hexagon_edges,
    hexagon_vertices,
    parse_hex_file,
)
from .polarity import (
    CutDecomposition,
    FormulaUnavailable,
    MalformedComponent,
    cut_decomposition,
    distance_distribution,
    wp_armchair_closed,
    wp_benzenoid_closed,
    wp_bruteforce,
    wp_cut_method,
    wp_cycle_formula,
    wp_path_formula,
    wp_zigzag_closed,
)
from .tubulene import (
    ParamOutOfRange,
    Tubulene,
    TubuleneError,
    build_armchair,
    build_zigzag,
    classify_external_hexagons_tub,
    tubulene_stats,
)

__version__ = "0.1.0"
