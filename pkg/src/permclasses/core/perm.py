"""Permutations of {0, ..., n-1} stored as image tuples.

Composition is left-to-right: ``p * q`` first applies ``p``, then ``q``, so
``(p * q)(x) == q(p(x))``. Text input and output use 1-based cycle notation,
e.g. ``"(1,2)(3,4)"``; the identity is spelled ``"()"``.
"""

from __future__ import annotations

import re
from typing import Iterable, Sequence

MAX_DEGREE = 1 << 16

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


class PermutationError(ValueError):
    pass


def mul(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    """Raw composition on image tuples: apply p, then q."""
    return tuple(map(q.__getitem__, p))


def inv(p: tuple[int, ...]) -> tuple[int, ...]:
    r = [0] * len(p)
    for i, x in enumerate(p):
        r[x] = i
    return tuple(r)


class Permutation:
    __slots__ = ("images", "_hash")

    def __init__(self, images: Iterable[int]):
        images = tuple(images)
        n = len(images)
        if n > MAX_DEGREE:
            raise PermutationError(f"degree {n} exceeds cap {MAX_DEGREE}")
        if sorted(images) != list(range(n)):
            raise PermutationError(f"not a bijection of 0..{n - 1}: {images!r}")
        self.images = images
        self._hash = hash(images)

    @classmethod
    def _trusted(cls, images: tuple[int, ...]) -> "Permutation":
        p = object.__new__(cls)
        p.images = images
        p._hash = hash(images)
        return p

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls._trusted(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> "Permutation":
        """Build from 0-based cycles. Cycles must be disjoint."""
        images = list(range(degree))
        seen: set[int] = set()
        for cyc in cycles:
            for x in cyc:
                if not 0 <= x < degree:
                    raise PermutationError(f"point {x + 1} outside 1..{degree}")
                if x in seen:
                    raise PermutationError(f"point {x + 1} repeated in cycles")
                seen.add(x)
            for a, b in zip(cyc, list(cyc[1:]) + list(cyc[:1])):
                images[a] = b
        return cls._trusted(tuple(images))

    @classmethod
    def parse(cls, text: str, degree: int) -> "Permutation":
        """Parse 1-based cycle notation such as ``"(1,2,3)(4,5)"`` or ``"()"``."""
        stripped = re.sub(r"\s+", "", text)
        if not stripped:
            raise PermutationError("empty permutation text")
        pos = 0
        cycles = []
        for m in _CYCLE_RE.finditer(stripped):
            if m.start() != pos:
                raise PermutationError(f"unexpected text at offset {pos} in {text!r}")
            pos = m.end()
            body = m.group(1)
            if not body:
                continue
            try:
                pts = [int(tok) - 1 for tok in body.split(",")]
            except ValueError:
                raise PermutationError(f"bad cycle {m.group(0)!r}") from None
            cycles.append(pts)
        if pos != len(stripped):
            raise PermutationError(f"unexpected text at offset {pos} in {text!r}")
        return cls.from_cycles(cycles, degree)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __pow__(self, e: int) -> "Permutation":
        base = self if e >= 0 else self.inverse()
        e = abs(e)
        result = Permutation.identity(self.degree)
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> "Permutation":
        return Permutation._trusted(inv(self.images))

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, 0-based, each starting at its smallest point."""
        seen = [False] * self.degree
        out = []
        for i in range(self.degree):
            if seen[i] or self.images[i] == i:
                continue
            cyc = [i]
            seen[i] = True
            j = self.images[i]
            while j != i:
                seen[j] = True
                cyc.append(j)
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        """Cycle lengths including fixed points, in decreasing order."""
        lengths = [len(c) for c in self.cycles()]
        lengths += [1] * (self.degree - sum(lengths))
        return tuple(sorted(lengths, reverse=True))

    def order(self) -> int:
        from math import lcm

        return lcm(*(len(c) for c in self.cycles())) if not self.is_identity() else 1

    def is_even(self) -> bool:
        return sum(len(c) - 1 for c in self.cycles()) % 2 == 0

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.images == other.images

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + ",".join(str(x + 1) for x in c) + ")" for c in cyc)

    def __repr__(self) -> str:
        return f"Permutation({str(self)!r}, degree={self.degree})"


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Return the permutation mapping x to q(p(x))."""
    if p.degree != q.degree:
        raise PermutationError(f"degree mismatch: {p.degree} vs {q.degree}")
    return Permutation._trusted(mul(p.images, q.images))
