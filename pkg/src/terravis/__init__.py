"""Exact terrain visibility graphs, persistence, and LP-based reconstruction."""
from .constraints import (
    BLOCKING,
    VISIBILITY,
    ConstraintSystem,
    NotPersistent,
    RowTag,
    XPropertyBroken,
    build_constraints,
    designated_blockers,
    gprime_canonical_system,
    prune_redundant,
)
from .counterexamples import (
    check_lemma_helper,
    check_lemma_noX,
    closed_form_y,
    closed_form_z,
    color_classes,
    gen_gprime,
    gen_gstar,
    gprime_inequality,
    verify_theorem1,
)
from .graph import (
    LabeledGraph,
    PersistenceReport,
    check_bar_property,
    check_x_property,
    format_graph,
    is_persistent,
    parse_graph,
)
from .lp import Feasible, Infeasible, solve_feasibility, verify_farkas, verify_feasible
from .numerics import RMatrix, format_rational, parse_rational
from .reconstruction import NoTerrain, Reconstructed, VGMismatch, reconstruct, roundtrip_check
from .render import RenderSpec, render_svg
from .terrain import Terrain, XVector, parse_terrain, sees, visibility_graph

__version__ = "0.1.0"
