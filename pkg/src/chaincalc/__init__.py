"""Exact combinatorial differential calculus on labeled chains and trees."""

from .formal import LinComb, lincomb_sum
from .chains import (
    Chain,
    ROOT,
    chain,
    derive,
    embed,
    ftc_rhs,
    integrate,
    mul,
    shuffle,
    taylor,
    taylor_reconstruct,
    value,
)
from .graphs import (
    RootedDiGraph,
    chains_of,
    derive_graph,
    derive_graph_total,
    graph,
    integrate_graph,
    linear_extensions,
    product,
    reaches,
)
from .polynomials import Polynomial, basis_poly, poly_of
from .quotient import (
    PlanarQuotientTree,
    catalan_pairing,
    classify,
    epsilon_block,
    glue,
    pairings,
    preorder,
    quotient_trees,
)
from .derivorders import (
    all_deltas,
    apply_delta,
    class_tree,
    compatible,
    equiv_d,
    equiv_o,
    layer_info,
    same_layer,
    validate_delta,
)
from .involution import Configuration, apply_involution, config_sign, is_sink, sink_of
from .coloring import (
    bijection_forward,
    bijection_inverse,
    color_target,
    colored_sum,
    vertex_colors,
    verify,
)

__version__ = "0.1.0"
