"""Deterministic Schreier-Sims stabilizer chains.

All routines here work on raw image tuples; :mod:`permclasses.core.group`
wraps them behind :class:`~permclasses.core.perm.Permutation`.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .perm import inv, mul

Perm = tuple[int, ...]


class CertificationError(RuntimeError):
    """Generators did not produce the group order they were built to produce."""


@dataclass
class Level:
    point: int
    gens: list[Perm] = field(default_factory=list)
    # orbit point -> u with u[point] == orbit point
    transversal: dict[int, Perm] = field(default_factory=dict)
    inverses: dict[int, Perm] = field(default_factory=dict)
    orbit: list[int] = field(default_factory=list)
    checked: set[tuple[int, int]] = field(default_factory=set)

    def extend_orbit(self, new_gens: Sequence[Perm], identity: Perm) -> None:
        # Existing transversal entries never change, which keeps earlier
        # Schreier generator checks valid.
        if not self.orbit:
            self.transversal[self.point] = identity
            self.inverses[self.point] = identity
            self.orbit.append(self.point)
        queue = []
        for beta in list(self.orbit):
            u = self.transversal[beta]
            for s in new_gens:
                gamma = s[beta]
                if gamma not in self.transversal:
                    w = mul(u, s)
                    self.transversal[gamma] = w
                    self.inverses[gamma] = inv(w)
                    self.orbit.append(gamma)
                    queue.append(gamma)
        for beta in queue:
            u = self.transversal[beta]
            for s in self.gens:
                gamma = s[beta]
                if gamma not in self.transversal:
                    w = mul(u, s)
                    self.transversal[gamma] = w
                    self.inverses[gamma] = inv(w)
                    self.orbit.append(gamma)
                    queue.append(gamma)


class StabilizerChain:
    """Base and strong generating set with explicit transversals.

    ``levels[i].gens`` generate the pointwise stabilizer of
    ``base[:i]``; ``levels[i].transversal`` maps each point of the
    ``base[i]``-orbit of that stabilizer to a coset representative.
    """

    def __init__(self, degree: int, levels: list[Level]):
        self.degree = degree
        self.levels = levels
        self._arrays = None

    @property
    def base(self) -> list[int]:
        return [lev.point for lev in self.levels]

    @property
    def order(self) -> int:
        return math.prod(len(lev.orbit) for lev in self.levels)

    @property
    def identity(self) -> Perm:
        return tuple(range(self.degree))

    def strong_generators(self, level: int = 0) -> list[Perm]:
        if level >= len(self.levels):
            return []
        return list(self.levels[level].gens)

    def sift(self, g: Perm, start: int = 0) -> tuple[Perm, int]:
        """Strip g through levels ``start..``; return residue and stop level."""
        for j in range(start, len(self.levels)):
            lev = self.levels[j]
            beta = g[lev.point]
            u_inv = lev.inverses.get(beta)
            if u_inv is None:
                return g, j
            g = mul(g, u_inv)
        return g, len(self.levels)

    def contains(self, g: Perm) -> bool:
        h, _ = self.sift(g)
        return h == self.identity

    def random_element(self, rng: random.Random) -> Perm:
        g = self.identity
        for lev in reversed(self.levels):
            g = mul(g, lev.transversal[lev.orbit[rng.randrange(len(lev.orbit))]])
        return g

    # -- vectorized enumeration ------------------------------------------

    def _dtype(self):
        return np.uint8 if self.degree <= 256 else np.uint16

    def _level_arrays(self):
        if self._arrays is None:
            dt = self._dtype()
            arrs = []
            for lev in self.levels:
                pos = np.full(self.degree, -1, dtype=np.int64)
                pos[lev.orbit] = np.arange(len(lev.orbit))
                trans = np.array([lev.transversal[b] for b in lev.orbit], dtype=dt)
                invs = np.array([lev.inverses[b] for b in lev.orbit], dtype=dt)
                arrs.append((lev.point, pos, trans, invs))
            self._arrays = arrs
        return self._arrays

    def elements(self) -> np.ndarray:
        """All group elements as rows of an (order, degree) array.

        Row ``r`` has mixed-radix transversal coordinates matching
        :meth:`index_of`.
        """
        dt = self._dtype()
        elems = np.arange(self.degree, dtype=dt)[None, :]
        for _, _, trans, _ in reversed(self._level_arrays()):
            # new[j, r] = compose(elems[r], trans[j]) = trans[j][elems[r]]
            elems = trans[np.arange(len(trans))[:, None, None], elems[None, :, :]]
            elems = elems.reshape(-1, self.degree)
        return elems

    def index_of(self, elems: np.ndarray) -> np.ndarray:
        """Row positions in :meth:`elements` of each row of ``elems``; -1 if absent."""
        elems = np.asarray(elems)
        n_rows = elems.shape[0]
        idx = np.zeros(n_rows, dtype=np.int64)
        ok = np.ones(n_rows, dtype=bool)
        stride = self.order
        for point, pos, _, invs in self._level_arrays():
            stride //= len(invs)
            c = pos[elems[:, point]]
            ok &= c >= 0
            c = np.where(c >= 0, c, 0)
            idx += c * stride
            elems = invs[c[:, None], elems]
        ok &= (elems == np.arange(self.degree, dtype=elems.dtype)).all(axis=1)
        return np.where(ok, idx, -1)


def schreier_sims(
    generators: Iterable[Perm],
    degree: int,
    base: Sequence[int] = (),
    known_order: int | None = None,
    certify: bool = False,
) -> StabilizerChain:
    """Build a stabilizer chain for the group generated by ``generators``.

    ``base`` is a prefix of the base; every point in it becomes a level, even
    with a trivial orbit, so level ``len(base)`` holds the pointwise
    stabilizer of the prefix.

    ``known_order`` must be an upper bound for the group order that is valid
    by construction. The algorithm stops as soon as the transversal product
    reaches it, since at that point the chain is provably complete. With
    ``certify=True`` a final order different from ``known_order`` raises
    :class:`CertificationError`.
    """
    identity = tuple(range(degree))
    gens = []
    for g in generators:
        g = tuple(g)
        if len(g) != degree:
            raise ValueError(f"generator of degree {len(g)} in group of degree {degree}")
        if g != identity and g not in gens:
            gens.append(g)

    levels = [Level(point=b) for b in base]
    if len(set(base)) != len(base):
        raise ValueError("repeated base point")
    for g in gens:
        if all(g[lev.point] == lev.point for lev in levels):
            moved = next(x for x in range(degree) if g[x] != x)
            levels.append(Level(point=moved))
    for i, lev in enumerate(levels):
        prefix = [lv.point for lv in levels[:i]]
        lev.gens = [g for g in gens if all(g[b] == b for b in prefix)]
        lev.extend_orbit(lev.gens, identity)

    chain = StabilizerChain(degree, levels)

    def reached() -> bool:
        if known_order is None:
            return False
        order = chain.order
        if order > known_order:
            raise CertificationError(f"order {order} exceeds bound {known_order}")
        return order == known_order

    i = len(levels) - 1
    done = reached()
    while i >= 0 and not done:
        lev = levels[i]
        found = None
        k = 0
        while k < len(lev.orbit) and found is None:
            beta = lev.orbit[k]
            u = lev.transversal[beta]
            for si, s in enumerate(lev.gens):
                if (beta, si) in lev.checked:
                    continue
                lev.checked.add((beta, si))
                sg = mul(mul(u, s), lev.inverses[s[beta]])
                if sg == identity:
                    continue
                h, j = chain.sift(sg, i + 1)
                if h != identity:
                    found = (h, j)
                    break
            k += 1
        if found is None:
            i -= 1
            continue
        h, j = found
        if j == len(levels):
            moved = next(x for x in range(degree) if h[x] != x)
            levels.append(Level(point=moved))
        for lv in levels[i + 1 : j + 1]:
            lv.gens.append(h)
            lv.extend_orbit([h], identity)
        done = reached()
        i = j

    if certify and known_order is not None and chain.order != known_order:
        raise CertificationError(f"generators give order {chain.order}, expected {known_order}")
    return chain
