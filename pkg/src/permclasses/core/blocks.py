"""Block systems, block actions and their kernels."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .chain import schreier_sims
from .group import PermGroup


class UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> int | None:
        """Merge the classes of x and y; return the new root, or None if already merged."""
        x, y = self.find(x), self.find(y)
        if x == y:
            return None
        if self.size[x] < self.size[y]:
            x, y = y, x
        self.parent[y] = x
        self.size[x] += self.size[y]
        return x


class BlockError(ValueError):
    pass


@dataclass(frozen=True)
class BlockSystem:
    """Partition of range(degree) into equal-size blocks.

    Blocks are numbered by their smallest point.
    """

    degree: int
    block_size: int
    block_count: int
    assignment: tuple[int, ...]

    @classmethod
    def from_blocks(cls, blocks: Sequence[Sequence[int]], degree: int) -> "BlockSystem":
        blocks = sorted(sorted(b) for b in blocks)
        sizes = {len(b) for b in blocks}
        if len(sizes) != 1:
            raise BlockError(f"blocks of unequal sizes {sorted(sizes)}")
        assignment = [-1] * degree
        for i, b in enumerate(blocks):
            for x in b:
                if not 0 <= x < degree or assignment[x] != -1:
                    raise BlockError(f"point {x} missing, repeated or out of range")
                assignment[x] = i
        if -1 in assignment:
            raise BlockError("blocks do not cover every point")
        return cls(degree, sizes.pop(), len(blocks), tuple(assignment))

    @classmethod
    def trivial(cls, degree: int) -> "BlockSystem":
        """The single block containing every point."""
        return cls(degree, degree, 1, (0,) * degree)

    @property
    def blocks(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.block_count)]
        for x, b in enumerate(self.assignment):
            out[b].append(x)
        return out

    def is_nontrivial(self) -> bool:
        return 1 < self.block_size < self.degree

    def is_invariant(self, group: PermGroup) -> bool:
        if group.degree != self.degree:
            return False
        return all(
            len({self.assignment[g(x)] for x in block}) == 1
            for g in group.generators
            for block in self.blocks
        )

    def __str__(self) -> str:
        return "".join("{" + ",".join(str(x + 1) for x in b) + "}" for b in self.blocks)


def minimal_block(group: PermGroup, pair: tuple[int, int]) -> BlockSystem:
    """Finest block system in which both points of ``pair`` share a block."""
    n = group.degree
    uf = UnionFind(n)
    raw = group._raw_gens()
    uf.union(*pair)
    queue = [pair]
    for x, y in queue:
        for g in raw:
            a, b = uf.find(g[x]), uf.find(g[y])
            if uf.union(a, b) is not None:
                queue.append((a, b))
    classes: dict[int, list[int]] = {}
    for x in range(n):
        classes.setdefault(uf.find(x), []).append(x)
    return BlockSystem.from_blocks(list(classes.values()), n)


def minimal_block_systems(group: PermGroup) -> list[BlockSystem]:
    """All minimal nontrivial block systems of a transitive group.

    Each candidate comes from refining the pair {0, beta}; this covers every
    minimal system only because the group is transitive. Ordered
    lexicographically by the block containing 0.
    """
    if group.degree < 2 or not group.is_transitive():
        raise BlockError("minimal_block_systems needs a transitive group of degree >= 2")
    found: dict[frozenset[int], BlockSystem] = {}
    for beta in range(1, group.degree):
        sysm = minimal_block(group, (0, beta))
        if sysm.is_nontrivial():
            found.setdefault(frozenset(sysm.blocks[0]), sysm)
    minimal = [
        key for key in found if not any(other < key for other in found)
    ]
    return [found[k] for k in sorted(minimal, key=sorted)]


def is_primitive(group: PermGroup) -> bool:
    if group.degree == 1:
        return True
    return group.is_transitive() and not minimal_block_systems(group)


def _induced(group: PermGroup, system: BlockSystem) -> list[tuple[int, ...]]:
    if not system.is_invariant(group):
        raise BlockError(f"partition {system} is not invariant under the group")
    reps = [b[0] for b in system.blocks]
    return [tuple(system.assignment[g(r)] for r in reps) for g in group.generators]


def block_action_image(group: PermGroup, system: BlockSystem) -> PermGroup:
    """The permutation group induced on the block indices."""
    return PermGroup(_induced(group, system), system.block_count)


def block_action_kernel(group: PermGroup, system: BlockSystem) -> PermGroup:
    """Elements fixing every block setwise, on the original points.

    The group acts on points plus blocks; with the block points first in the
    base, the level past them is exactly the kernel.
    """
    image = block_action_image(group, system)
    n, b = group.degree, system.block_count
    extended = [g.images + tuple(n + x for x in ind) for g, ind in zip(group.generators, _induced(group, system))]
    chain = schreier_sims(extended, n + b, base=list(range(n, n + b)), known_order=group.order())
    gens = [s[:n] for s in chain.strong_generators(b)]
    return PermGroup(gens, n, known_order=group.order() // image.order(), certify=True)


def restriction_image(group: PermGroup, points: Sequence[int]) -> PermGroup:
    """The group induced on a set of points that it stabilizes setwise.

    ``points`` are relabelled 0..len(points)-1 in the given order.
    """
    label = {x: i for i, x in enumerate(points)}
    gens = []
    for g in group.generators:
        try:
            gens.append(tuple(label[g(x)] for x in points))
        except KeyError:
            raise BlockError("points are not stabilized by the group") from None
    return PermGroup(gens, len(points))
