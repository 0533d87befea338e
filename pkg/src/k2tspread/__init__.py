"""Spectral spread of K_{2,t}-minor-free graphs.

The extremal family G_l = K_1 v (l K_t u (n-1-lt) K_1), its exact and
asymptotic spreads, exact minor testing and small-n exhaustive searches.
"""

from .expansion import (
    c_coeffs,
    c_coeffs_family,
    expansion_residuals,
    family_moments,
    spread_approx,
    spread_approx_family,
    walk_moments,
)
from .family import (
    DepressedCubic,
    ExtremalParams,
    char_cubic,
    depressed_cubic,
    ell_one,
    ell_star,
    eta,
    is_tie_case,
    solve_depressed_cubic,
    spread_exact,
    tie_cubics,
    tie_params,
    xi,
)
from .graph import (
    Graph,
    canonical_form,
    circulant,
    complete_bipartite,
    extremal_graph,
    from_graph6,
    join,
    make_complete,
    make_cycle,
    make_empty,
    make_path,
    read_graph6_file,
    to_graph6,
    write_graph6_file,
)
from .minor import BudgetExhausted, MinorModel, edge_bound_holds, find_minor, has_minor, is_k2t_minor_free
from .report import Report
from .search import (
    argmax_ells,
    compare_family_optimum,
    family_threshold,
    max_spread_apex,
    max_spread_minor_free,
    minor_free_graphs,
    scan_family,
)
from .spectral import EigensolverError, Spectrum, join_regular_spectrum, spectrum, spread, spread_closed_form

__version__ = "0.1.0"
