"""Maximum neighbourly sets (antimatchings) and triangle listing in C4-free graphs."""

from .graph import Edge, Graph, GraphError, ParseError, extremal_edge_bound, find_quadrilateral, is_c4_free, is_edge, parse_edge_list
from .triangles import Triangle, enumerate_triangles, naive_triangles
from .neighbourly import (
    Kind,
    StructureReport,
    Witness,
    are_neighbourly,
    best_edge_pair,
    best_triangle,
    find_pentagon,
    max_neighbourly,
    max_special,
    spoke_search,
    structure_report,
    verify_neighbourly,
)
from .oracle import line_graph_square, oracle_max_neighbourly, oracle_max_special
from .generators import GenConfig, fixture, gen_c4free

__version__ = "0.1.0"
