"""Roman domination numbers of graphs and their generalized Mycielskians.

Exact solvers with certificates, explicit constructions, closed-form
predictions and a harness that checks the predictions against the solvers.
"""

__version__ = "0.1.0"

from .graph import (
    Graph,
    GraphError,
    MycielskiLayout,
    cartesian_product,
    complete_graph,
    complete_multipartite_graph,
    cycle_graph,
    empty_graph,
    generate,
    mycielskian,
    new_graph,
    parse_edge_list,
    path_graph,
    petersen_graph,
    read_edge_list,
    star_graph,
    write_edge_list,
)
from .rdf import RDFError, RomanFunction, is_rdf, is_special, undefended
from .solver import (
    ClassifyResult,
    SizeLimitError,
    SolveResult,
    SolverConfig,
    SolverTimeout,
    classify,
    gamma,
    gamma_r,
    gamma_r_naive,
)
