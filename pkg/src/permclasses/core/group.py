"""Permutation groups given by generators."""

from __future__ import annotations

import random
import threading
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

import numpy as np

from .chain import StabilizerChain, schreier_sims
from .perm import Permutation, PermutationError, inv, mul


@dataclass(frozen=True)
class Symmetric:
    n: int


@dataclass(frozen=True)
class Alternating:
    n: int


@dataclass(frozen=True)
class Cyclic:
    n: int


@dataclass(frozen=True)
class Dihedral:
    order: int


@dataclass(frozen=True)
class WreathSym:
    """``base`` wreath S(n) in imprimitive action, base group the full power."""

    base: "PermGroup"
    n: int


@dataclass(frozen=True)
class DirectProduct:
    left: "PermGroup"
    right: "PermGroup"


Tag = Union[Symmetric, Alternating, Cyclic, Dihedral, WreathSym, DirectProduct]


class PermGroup:
    """Subgroup of S(degree) generated by ``generators``.

    The stabilizer chain is built on first use. Passing ``known_order``
    (an upper bound valid by construction) with ``certify=True`` forces the
    chain immediately and fails loudly if the generators give anything else.
    """

    def __init__(
        self,
        generators: Iterable[Permutation | Sequence[int]],
        degree: int | None = None,
        *,
        tag: Tag | None = None,
        name: str | None = None,
        known_order: int | None = None,
        certify: bool = False,
    ):
        gens = [g if isinstance(g, Permutation) else Permutation(g) for g in generators]
        if degree is None:
            if not gens:
                raise ValueError("degree required for a group with no generators")
            degree = gens[0].degree
        for g in gens:
            if g.degree != degree:
                raise PermutationError(f"generator {g} has degree {g.degree}, expected {degree}")
        if not gens:
            gens = [Permutation.identity(degree)]
        self.degree = degree
        self.generators: tuple[Permutation, ...] = tuple(gens)
        self.tag = tag
        self.name = name
        self._known_order = known_order
        self._chain: StabilizerChain | None = None
        self._lock = threading.Lock()
        if certify:
            self._build_chain(certify=True)

    def _build_chain(self, certify: bool = False) -> StabilizerChain:
        with self._lock:
            if self._chain is None:
                self._chain = schreier_sims(
                    self._raw_gens(), self.degree, known_order=self._known_order, certify=certify
                )
            return self._chain

    def _raw_gens(self) -> list[tuple[int, ...]]:
        return [g.images for g in self.generators]

    @property
    def chain(self) -> StabilizerChain:
        return self._chain if self._chain is not None else self._build_chain()

    def order(self) -> int:
        return self.chain.order

    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def contains(self, p: Permutation) -> bool:
        if p.degree != self.degree:
            raise PermutationError(f"degree mismatch: {p.degree} vs {self.degree}")
        return self.chain.contains(p.images)

    __contains__ = contains

    def orbit(self, point: int) -> set[int]:
        if not 0 <= point < self.degree:
            raise ValueError(f"point {point} out of range 0..{self.degree - 1}")
        seen = {point}
        queue = [point]
        raw = self._raw_gens()
        for x in queue:
            for g in raw:
                y = g[x]
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return seen

    def orbits(self) -> list[list[int]]:
        """Orbits as sorted lists, ordered by smallest point."""
        seen: set[int] = set()
        out = []
        for x in range(self.degree):
            if x not in seen:
                orb = self.orbit(x)
                seen |= orb
                out.append(sorted(orb))
        return out

    def is_transitive(self) -> bool:
        return len(self.orbit(0)) == self.degree

    def is_trivial(self) -> bool:
        return all(g.is_identity() for g in self.generators)

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        return self.degree == other.degree and all(other.contains(g) for g in self.generators)

    def is_normal_in(self, other: "PermGroup") -> bool:
        """True iff self is a subgroup of ``other`` normalized by it."""
        if not self.is_subgroup_of(other):
            return False
        chain = self.chain
        for x in other._raw_gens():
            xi = inv(x)
            for h in self._raw_gens():
                if not chain.contains(mul(mul(xi, h), x)):
                    return False
        return True

    def irredundant_generators(self) -> list[Permutation]:
        """A subset of the generators, each outside the span of those before it."""
        target = self.order()
        chosen: list[Permutation] = []
        chain = None
        for g in self.generators:
            if chain is not None and chain.order == target:
                break
            if chain is None or not chain.contains(g.images):
                chosen.append(g)
                chain = schreier_sims([c.images for c in chosen], self.degree, known_order=target)
        return chosen or [self.identity()]

    def random_element(self, rng: random.Random) -> Permutation:
        return Permutation._trusted(self.chain.random_element(rng))

    def elements(self) -> np.ndarray:
        """All elements as an (order, degree) integer array."""
        return self.chain.elements()

    def __repr__(self) -> str:
        label = self.name or f"<{len(self.generators)} generators>"
        return f"PermGroup({label}, degree={self.degree})"


def trivial_group(degree: int) -> PermGroup:
    return PermGroup([], degree, name=f"gens{{degree={degree};()}}", known_order=1)


def closure_elements(group: PermGroup) -> set[tuple[int, ...]]:
    """Breadth-first closure of the generators; independent of the chain."""
    raw = group._raw_gens()
    ident = tuple(range(group.degree))
    seen = {ident}
    queue = [ident]
    for x in queue:
        for g in raw:
            y = mul(x, g)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def point_stabilizer(group: PermGroup, point: int) -> PermGroup:
    if not 0 <= point < group.degree:
        raise ValueError(f"point {point} out of range 0..{group.degree - 1}")
    target = group.order() // len(group.orbit(point))
    chain = schreier_sims(group._raw_gens(), group.degree, base=[point], known_order=group.order())
    gens = chain.strong_generators(1)
    return PermGroup(gens, group.degree, known_order=target, certify=True)
