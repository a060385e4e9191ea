"""Labeled rooted trees as a Hopf algebra of differential operators on Q[x1..xN]."""

from .poly import (
    Derivation,
    DiffOperator,
    ParseError,
    Polynomial,
    format_derivation,
    format_polynomial,
    parse_derivation,
    parse_polynomial,
)
from .trees import (
    LabeledTree,
    Node,
    canonical_key,
    format_tree,
    graft,
    label_at,
    node_paths,
    parse_tree,
    subtree_at,
    t,
    u,
    unit_tree,
    v,
)
from .hopf import (
    TreeSum,
    TreeTensorSum,
    antipode,
    antipode_sum,
    coproduct,
    counit,
    gl_mul,
    mul,
)
from .connection import (
    Connection,
    InducedConnection,
    axiom_check,
    flat_connection,
    induced_connection,
    load_connection,
)
from .action import (
    act,
    act_closed_form,
    act_coherent,
    act_sum,
    as_derivation,
    coherence_identity,
    leibnitz_identity,
    psi,
    psi_sum,
)
from .smash import (
    SmashAlgebra,
    SmashElement,
    SmashTensorBi,
    SmashTensorLeft,
    format_smash,
    parse_smash,
)

__version__ = "0.1.0"
