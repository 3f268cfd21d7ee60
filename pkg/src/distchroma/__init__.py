"""Distance edge- and vertex-colouring of trees and planar multigraphs."""

from .bounds import girth_thresholds, iota, tau_edge, tau_vertex
from .colouring import (
    Colouring,
    SolveReport,
    contraction_pipeline_edge_colour,
    distance_chromatic_index,
    distance_chromatic_number,
    exact_chromatic_number,
    verify_distance_colouring,
)
from .constructions import build, describe
from .graphs import INFINITY, Multigraph, SimpleGraph

__version__ = "0.1.0"
