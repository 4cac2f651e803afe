"""Exact Myerson values for TU games restricted by directed hypergraphs."""
from .game import (
    AdditiveGame,
    CardinalityPowerGame,
    TableGame,
    TUGame,
    UnanimityGame,
    is_convex,
    is_superadditive,
    random_supermodular_game,
)
from .hypergraph import (
    DirectedHyperedge,
    DirectedHypergraph,
    Partition,
    Semantics,
    arc_expansion,
    components_of_subset,
    critical_players,
    exists_path,
    induced_subgraph,
    is_bridge,
    reachable_set,
    strong_components,
)
from .kernels import BACKEND
from .restriction import RestrictedGame, build_cache, restrict, restricted_worth
from .values import (
    Allocation,
    McEstimate,
    myerson,
    myerson_monte_carlo,
    shapley_exact,
    shapley_monte_carlo,
    shapley_permutation_oracle,
)

__version__ = "0.1.0"
