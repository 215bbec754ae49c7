"""Monochromatic vertex-disconnection toolkit.

Computes mvd(G) of undirected graphs, produces witness colorings, and checks
the structural and extremal laws behind them. The heavy lifting lives in the
C++ extension; this package re-exports its surface.
"""

from ._core import (
    BlockDecomposition,
    BlockLine,
    CapacityError,
    CatalogEntry,
    CatalogStore,
    Coloring,
    DomainError,
    Graph,
    InputError,
    IntegrityError,
    MvdCheck,
    PropertyScan,
    ScanResult,
    ScanRow,
    SolveReport,
    block_bound,
    cartesian_product,
    catalog_check,
    components,
    decompose,
    emax,
    f_v,
    find_isomorphism,
    format_coloring,
    format_mvdg,
    generate,
    has_monochromatic_cut,
    induced_subgraph,
    is_2_connected,
    is_complete,
    is_connected,
    is_minimally_2_connected,
    is_mvd_coloring,
    is_separated,
    is_triangle_free,
    join,
    kappa_plus,
    load_graph_file,
    local_connectivity,
    mvd_compose,
    mvd_exact,
    mvd_formula,
    mvd_upper_bound,
    parse_coloring,
    parse_mvdg,
    scan_extremal,
    scan_property,
    solve_auto,
    solve_block,
)

__all__ = [name for name in dir() if not name.startswith("_")]
