"""The poset Phi_n on binary words, its maximal chains, and their bijection
with alternating sign matrices."""

from ._kernels import BACKEND
from .asm import (
    Asm,
    enumerate_asms_backtrack,
    enumerate_asms_exhaustive,
    parse_asm,
    serialize_asm,
    validate_asm,
)
from .errors import AsmPosetError
from .poset import (
    Chain,
    HasseEdge,
    asm_to_chain,
    chain_to_asm,
    count_maximal_chains,
    down_covers,
    enumerate_maximal_chains,
    hasse_edges,
    is_cover,
    leq,
    up_covers,
    validate_chain,
)
from .seqcore import (
    Vertex,
    complement,
    differences,
    enumerate_alternating,
    is_alternating,
    is_constrained,
    partial_sums,
    rank,
)
from .symmetry import (
    DihedralElement,
    apply,
    apply_rho,
    apply_tau,
    apply_theta,
    apply_theta_inverse,
    apply_xi,
    compose,
    group_order,
    is_graph_automorphism,
    theta_cycle,
    vertex_orbits,
)

__version__ = "0.1.0"
