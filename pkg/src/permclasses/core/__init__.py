"""Permutations, permutation groups, stabilizer chains and block systems."""

from .blocks import (
    BlockError,
    BlockSystem,
    UnionFind,
    block_action_image,
    block_action_kernel,
    is_primitive,
    minimal_block,
    minimal_block_systems,
    restriction_image,
)
from .chain import CertificationError, StabilizerChain, schreier_sims
from .group import (
    Alternating,
    Cyclic,
    Dihedral,
    DirectProduct,
    PermGroup,
    Symmetric,
    Tag,
    WreathSym,
    closure_elements,
    point_stabilizer,
    trivial_group,
)
from .perm import Permutation, PermutationError, compose

__all__ = [
    "Alternating",
    "BlockError",
    "BlockSystem",
    "CertificationError",
    "Cyclic",
    "Dihedral",
    "DirectProduct",
    "PermGroup",
    "Permutation",
    "PermutationError",
    "StabilizerChain",
    "Symmetric",
    "Tag",
    "UnionFind",
    "WreathSym",
    "block_action_image",
    "block_action_kernel",
    "closure_elements",
    "compose",
    "is_primitive",
    "minimal_block",
    "minimal_block_systems",
    "point_stabilizer",
    "restriction_image",
    "schreier_sims",
    "trivial_group",
]
