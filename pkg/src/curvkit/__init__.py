"""curvkit: curvature computations on finite simple graphs.

Library surface: graphs and families, exact optimal-transport (Ollivier-Ricci
and Lin-Lu-Yau) curvature, Bakry-Emery curvature via an eigenvalue pencil,
classification of non-negatively curved cubic graphs, Laplacian spectra,
plus a CLI (`curvkit`) and a stateless HTTP service.
"""

from .graphs import (
    AdjacencyParseError,
    BallDecomposition,
    Graph,
    GraphFamily,
    are_isomorphic,
    ball_decomposition,
    canonical_form,
    complete,
    complete_bipartite,
    cycle,
    distance,
    distances_from,
    enumerate_cubic,
    generate,
    girth_through_edge,
    ladder,
    mobius,
    parse_adjacency,
    petersen,
    prism,
)

__version__ = "0.1.0"
