"""Tree embedding under minimum degree n-3, and tree-versus-star Ramsey numbers.

Modules:

* ``graph``: bitset graphs and constructive path finders
* ``trees``: trees, conventional labellings, T(p, q), enumeration
* ``embedder``: the embedding decision procedure
* ``oracle``: exhaustive embedding, canonical forms, graph enumeration
* ``numerics``: semigroup membership and the Ramsey predictor
* ``ramsey``: extremal colorings and exact search
"""

from .embedder import (
    Embeddable,
    ExceptionBipartite,
    ExceptionMultipartite,
    OutOfScope,
    decide_and_embed,
    embed_greedy,
    extend,
    verdict_to_json,
)
from .embedding import Embedding, check_embedding
from .errors import (
    CapExceeded,
    DegenerateShape,
    DeskScaleExceeded,
    Disconnected,
    EmptyGraph,
    InternalContradiction,
    OutOfScopeError,
    PreconditionViolated,
    SamplingExhausted,
    StarNotSupported,
    TreedegError,
)
from .graph import (
    Graph,
    complement,
    complete_bipartite,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    dirac_path,
    escape_path,
    from_edges,
    induced_p3,
    is_balanced_bipartite_Ktt,
    is_balanced_complete_multipartite,
    is_connected,
    path_graph,
    star_graph,
)
from .io import from_graph6, read_graph, to_graph6
from .numerics import (
    RamseyPrediction,
    divisors_ge3,
    fact1_predicate,
    is_lin_comb,
    lin_comb_witness,
    predict_ramsey,
)
from .oracle import canonical_form, enumerate_graphs, random_graph, subgraph_embed
from .ramsey import (
    BalancedBipartite,
    BalancedMultipartite,
    CompleteK,
    TwoColoring,
    build_partition_coloring,
    exact_ramsey,
    verify_coloring,
    verify_theorem_campaign,
)
from .trees import (
    ConventionalLabelling,
    Tree,
    conventional_labelling_bfs,
    enumerate_trees,
    is_t1_nminus4,
    make_tpq,
    proof_labelling,
    recognize_tpq,
)

__version__ = "0.1.0"
