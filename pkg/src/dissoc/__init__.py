"""Maximum dissociation sets in trees.

Exact dissociation numbers and counts of maximum dissociation sets, the
extremal subcubic families, and an exhaustive checker for the bounds that
govern them.
"""

from ._kernels import IMPLEMENTATION as KERNEL_IMPLEMENTATION
from .bounds import BoundReport, phi_bound_checks, phi_bound_sharp, psi_lower, psi_upper_subcubic, seq_f, seq_g
from .engine import (
    RootProfile,
    StateValue,
    VertexTable,
    enumerate_mds,
    is_dissociation_set,
    iter_mds,
    phi,
    psi,
    psi_phi,
    root_profile,
    run_dp,
    tau3,
)
from .oracle import OracleResult, brute_force
from .tree import (
    RootedTree,
    Tree,
    attach_p5,
    attach_pendant_edge,
    canonical_code,
    max_degree,
    parse_tree,
    root_at,
    serialize_tree,
)

__version__ = "0.1.0"
