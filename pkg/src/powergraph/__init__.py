"""powergraph: functional graphs of power maps on finite groups.

The central objects: g -> g^t on a finite group G is a self-map of a
finite set, so its functional graph is a disjoint union of cycles with
rooted trees hanging off the cycle vertices.  This package computes that
graph two independent ways -- structure theorems (structural) and direct
enumeration (oracle) -- and compares them up to isomorphism.
"""

from __future__ import annotations

from ._kernel import BACKEND
from .arith import (
    Sequence,
    euler_phi,
    divisors,
    factorize,
    iterated_gcd,
    mult_order,
    nu_omega_split,
    sequence_product,
)
from .tree import (
    RootedTree,
    elementary_tree,
    enclose,
    from_code,
    is_homogeneous,
    j_sum,
    leaf,
    render_tree,
    scalar_dot,
    tree_sum,
)
from .fgraph import (
    Component,
    FunctionalGraph,
    cyc,
    disjoint_union,
    decompose_map,
    from_map,
    graph_from_summary,
    is_isomorphic,
    replicate,
    summary,
    tensor,
    to_successor_map,
)
from .groups import (
    AbelianGroup,
    CyclicGroup,
    DihedralGroup,
    FiniteGroup,
    FlowerDecomposition,
    FlowerType,
    GroupSpecError,
    PGLGroup,
    QuaternionGroup,
    SemidirectGroup,
    UnitsGroup,
    element_order,
    flower_decompose,
    make_abelian,
    make_cyclic,
    make_dihedral,
    make_pgl2,
    make_quaternion,
    make_semidirect,
    make_units,
    mu_subgroups,
    parse_group,
    power,
)
from .structural import (
    StructuralResult,
    abelian_graph,
    central_tree,
    central_tree_rules,
    cyclic_graph,
    flower_graph,
    pgl_graph,
    quaternion_graph,
    semidirect_graph,
    structural_graph,
)
from .oracle import (
    VerifyReport,
    brute_force_graph,
    orbit_info,
    successor_table,
    tree_census,
    verify,
)


def __getattr__(name: str):
    # selftest pulls in hypothesis; load it only when actually asked for
    if name in ("run_selftest", "selftest_ok"):
        from . import selftest

        return getattr(selftest, name)
    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "__version__",
    # arith
    "Sequence",
    "euler_phi",
    "divisors",
    "factorize",
    "iterated_gcd",
    "mult_order",
    "nu_omega_split",
    "sequence_product",
    # tree
    "RootedTree",
    "elementary_tree",
    "enclose",
    "from_code",
    "is_homogeneous",
    "j_sum",
    "leaf",
    "render_tree",
    "scalar_dot",
    "tree_sum",
    # fgraph
    "Component",
    "FunctionalGraph",
    "cyc",
    "disjoint_union",
    "decompose_map",
    "from_map",
    "graph_from_summary",
    "is_isomorphic",
    "replicate",
    "summary",
    "tensor",
    "to_successor_map",
    # groups
    "AbelianGroup",
    "CyclicGroup",
    "DihedralGroup",
    "FiniteGroup",
    "FlowerDecomposition",
    "FlowerType",
    "GroupSpecError",
    "PGLGroup",
    "QuaternionGroup",
    "SemidirectGroup",
    "UnitsGroup",
    "element_order",
    "flower_decompose",
    "make_abelian",
    "make_cyclic",
    "make_dihedral",
    "make_pgl2",
    "make_quaternion",
    "make_semidirect",
    "make_units",
    "mu_subgroups",
    "parse_group",
    "power",
    # structural
    "StructuralResult",
    "abelian_graph",
    "central_tree",
    "central_tree_rules",
    "cyclic_graph",
    "flower_graph",
    "pgl_graph",
    "quaternion_graph",
    "semidirect_graph",
    "structural_graph",
    # oracle
    "VerifyReport",
    "brute_force_graph",
    "orbit_info",
    "successor_table",
    "tree_census",
    "verify",
    # selftest
    "run_selftest",
    "selftest_ok",
]
